//! Combinatorial descriptions of syzygies, critical algebras, and the two
//! global-dimension criteria: search for critical full subcategories, and the
//! crown test for plain incidence algebras.

use crate::combinatorics::{Order, PathTable, Quiver};
use crate::error::{Error, Result};
use crate::homology::{
    self, audit_simple_resolution, coresolve_simple, resolve_simple, ProjResolution,
};
use crate::iso::find_isomorphism;
use crate::presentation::{IncidenceQuotient, SchurianAlgebra};
use crate::vertex_set::{subsets_of_size, VertexId, VertexSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// `{ b : P_b is a summand of Q_2 }` predicted from minimal relations out of `i`,
/// with multiplicities.
pub fn q2_summands_via_relations(algebra: &SchurianAlgebra, i: VertexId) -> Vec<(VertexId, usize)> {
    algebra
        .reach()
        .down_set(i)
        .iter()
        .filter_map(|b| {
            let m = algebra.minimal_relation_count(i, b);
            (m > 0).then_some((b, m))
        })
        .collect()
}

/// The data attached to a pair `(i, j)` when asking whether `P_j` is a summand
/// of the third term of the resolution of `S_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyConfig {
    pub i: VertexId,
    pub j: VertexId,
    /// Vertices `b` with `P_b` in `Q_2` and `hom(b, j) = 1`.
    pub r_set: VertexSet,
    /// Vertices `a` with `P_a` in `Q_1` and `hom(a, b) = 1` for some `b` in `r_set`.
    pub s_set: VertexSet,
    /// Number of summands of `Q_2` counted in `r_set`, with multiplicity.
    pub r: usize,
    pub s: usize,
    /// Members `a` of `s_set` with `hom(a, j) = 0`.
    pub monomial: VertexSet,
    /// Members `a` of `s_set` with `hom(a, j) = 1` and several paths `a ⇝ j`.
    pub commutativity: VertexSet,
    /// Members `a` of `s_set` with a relation `a ⇝ j` not generated by relations
    /// ending at a predecessor of `j`.
    pub minimal: VertexSet,
}

impl SyzygyConfig {
    pub fn v(&self) -> usize {
        self.commutativity.len()
    }
}

/// Builds the configuration of `(i, j)` from the resolution of `S_i`.
pub fn build_syzygy_config(algebra: &SchurianAlgebra, i: VertexId, j: VertexId) -> SyzygyConfig {
    config_from_resolution(algebra, &resolve_simple(algebra, i), i, j)
}

fn config_from_resolution(
    algebra: &SchurianAlgebra,
    res: &ProjResolution,
    i: VertexId,
    j: VertexId,
) -> SyzygyConfig {
    let q1 = res.term_support(1);
    let q2 = res.terms.get(2).cloned().unwrap_or_default();
    let r_set: VertexSet = q2.iter().copied().filter(|&b| algebra.hom(b, j)).collect();
    let r = q2.iter().filter(|&&b| algebra.hom(b, j)).count();
    let s_set: VertexSet = q1
        .iter()
        .filter(|&a| r_set.iter().any(|b| algebra.hom(a, b)))
        .collect();
    let mut table = PathTable::new(algebra.quiver(), algebra.reach());
    let mut monomial = VertexSet::EMPTY;
    let mut commutativity = VertexSet::EMPTY;
    let mut minimal = VertexSet::EMPTY;
    for a in s_set.iter() {
        let paths = table.paths(a, j).len();
        if paths == 0 {
            continue;
        }
        if !algebra.hom(a, j) {
            monomial.insert(a);
        } else if paths >= 2 {
            commutativity.insert(a);
        }
        if algebra.terminal_relation_count(a, j) > 0 {
            minimal.insert(a);
        }
    }
    SyzygyConfig {
        i,
        j,
        r_set,
        s_set,
        r,
        s: s_set.len(),
        monomial,
        commutativity,
        minimal,
    }
}

/// The combinatorial test for `P_j` being a summand of `Q_3`: at least
/// `s - r + 1` monomial relations from `S` to `j`, and a relation from some
/// member of `S` to `j` that is minimal at its terminal end. Requires `s ≥ r`.
///
/// This is a heuristic: it can disagree with the engine (see the
/// `third_term_test_counterexamples` test).
pub fn q3_summand_test(algebra: &SchurianAlgebra, i: VertexId, j: VertexId) -> Result<bool> {
    let c = build_syzygy_config(algebra, i, j);
    q3_from_config(algebra, &c)
}

fn q3_from_config(algebra: &SchurianAlgebra, c: &SyzygyConfig) -> Result<bool> {
    if c.s < c.r {
        return Err(Error::DualizationRequired(
            algebra.label(c.i).to_string(),
            algebra.label(c.j).to_string(),
        ));
    }
    Ok(c.monomial.len() > c.s - c.r && !c.minimal.is_empty())
}

/// Which side the third-syzygy test was evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Algebra,
    Opposite,
}

/// Runs [`q3_summand_test`] on `A`, or on `A^op` with the pair `(j, i)` when
/// `s < r`. Returns `None` when both sides have `s < r`.
pub fn q3_summand_test_dualizing(
    algebra: &SchurianAlgebra,
    i: VertexId,
    j: VertexId,
) -> Option<(bool, Side)> {
    match q3_summand_test(algebra, i, j) {
        Ok(b) => Some((b, Side::Algebra)),
        Err(_) => {
            let op = algebra.opposite();
            q3_summand_test(&op, j, i).ok().map(|b| (b, Side::Opposite))
        }
    }
}

/// Clause-by-clause check of the structure of the resolution of `S_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionShapeAudit {
    pub vertex: String,
    /// `Q_1` consists of the arrow targets of `i`, each once.
    pub first_term_is_arrow_targets: bool,
    /// Each summand vertex of `Q_{k+1}` is a composition factor of `Q_k`.
    pub summands_are_factors_of_previous: bool,
    /// Every summand vertex is reachable from `i`.
    pub summands_reachable: bool,
    pub exact: bool,
    pub minimal: bool,
    /// `S_i` does not occur in `rad Q_0` or in any later term.
    pub simple_not_repeated: bool,
}

impl ResolutionShapeAudit {
    pub fn passed(&self) -> bool {
        self.first_term_is_arrow_targets
            && self.summands_are_factors_of_previous
            && self.summands_reachable
            && self.exact
            && self.minimal
            && self.simple_not_repeated
    }
}

pub fn resolution_shape_audit(algebra: &SchurianAlgebra, i: VertexId) -> ResolutionShapeAudit {
    audit_resolution(algebra, i, &resolve_simple(algebra, i))
}

/// Audits a given resolution of `S_i` (which may come from elsewhere).
pub fn audit_resolution(
    algebra: &SchurianAlgebra,
    i: VertexId,
    res: &ProjResolution,
) -> ResolutionShapeAudit {
    let base = audit_simple_resolution(algebra, i, res);
    let factors = res.terms.windows(2).all(|w| {
        w[1].iter()
            .all(|&b| w[0].iter().any(|&a| algebra.hom(a, b)))
    });
    ResolutionShapeAudit {
        vertex: algebra.label(i).to_string(),
        first_term_is_arrow_targets: base.first_syzygy_top,
        summands_are_factors_of_previous: factors,
        summands_reachable: base.downstream,
        exact: base.exact,
        minimal: base.minimal,
        simple_not_repeated: base.simple_not_repeated,
    }
}

/// Builds the full subcategory on `{i} ∪ S ∪ R ∪ {j}` of the convex hull of
/// `(i, j)`, where `S` is restricted to vertices carrying a relation to `j`.
/// Returns the algebra and the chosen vertices of `algebra`.
pub fn build_gamma(
    algebra: &SchurianAlgebra,
    i: VertexId,
    j: VertexId,
) -> Result<(SchurianAlgebra, VertexSet)> {
    let res = resolve_simple(algebra, i);
    if res.length() != 3 || res.multiplicity(3, j) == 0 {
        return Err(Error::NotAThirdSyzygyPair(
            algebra.label(i).to_string(),
            algebra.label(j).to_string(),
        ));
    }
    let hull = algebra.convex_hull_vertices(i, j);
    let old = hull.to_vec();
    let c = algebra.full_subcategory(hull)?;
    let ci = old.iter().position(|&v| v == i).unwrap();
    let cj = old.iter().position(|&v| v == j).unwrap();
    let config = build_syzygy_config(&c, ci, cj);
    let mut table = PathTable::new(c.quiver(), c.reach());
    let with_relation: VertexSet = config
        .s_set
        .iter()
        .filter(|&a| {
            let paths = table.paths(a, cj).len();
            paths > usize::from(c.hom(a, cj))
        })
        .collect();
    let chosen_c = with_relation
        .union(config.r_set)
        .union(VertexSet::from_iter([ci, cj]));
    let chosen: VertexSet = chosen_c.iter().map(|v| old[v]).collect();
    Ok((algebra.full_subcategory(chosen)?, chosen))
}

/// Per-condition outcome of the definition of a critical algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CriticalDiagnostics {
    pub source: Option<VertexId>,
    pub sink: Option<VertexId>,
    /// i) unique source and unique sink.
    pub unique_source_sink: bool,
    /// ii) `pd S_i = id S_j = 3`, every other simple has pd and id at most 2.
    pub dimensions: bool,
    /// iii) each projective is a summand of exactly one term of the resolution of `S_i`.
    pub projectives_partitioned: bool,
    /// iv) each injective is a summand of exactly one term of the coresolution of `S_j`.
    pub injectives_partitioned: bool,
    /// v) no proper full subcategory satisfies i) to iv).
    pub minimal: bool,
    /// A proper subset satisfying i) to iv), when v) fails.
    pub smaller: Option<VertexSet>,
}

impl CriticalDiagnostics {
    pub fn first_four(&self) -> bool {
        self.unique_source_sink
            && self.dimensions
            && self.projectives_partitioned
            && self.injectives_partitioned
    }

    pub fn is_critical(&self) -> bool {
        self.first_four() && self.minimal
    }
}

fn partitioned(n: usize, terms: &[Vec<VertexId>]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for t in terms {
        let s: VertexSet = t.iter().copied().collect();
        if !s.intersection(seen).is_empty() {
            return false;
        }
        seen = seen.union(s);
    }
    seen == VertexSet::full(n)
}

/// Evaluates conditions i) to iv), stopping at the first failure.
fn first_four(algebra: &SchurianAlgebra) -> CriticalDiagnostics {
    let mut d = CriticalDiagnostics::default();
    let n = algebra.vertex_count();
    let (sources, sinks) = (algebra.sources(), algebra.sinks());
    if sources.len() != 1 || sinks.len() != 1 || n < 2 {
        return d;
    }
    let (i, j) = (sources.first().unwrap(), sinks.first().unwrap());
    d.source = Some(i);
    d.sink = Some(j);
    d.unique_source_sink = true;
    let res = resolve_simple(algebra, i);
    if res.length() != 3 {
        return d;
    }
    let co = coresolve_simple(algebra, j);
    if co.length() != 3 {
        return d;
    }
    d.projectives_partitioned = partitioned(n, &res.terms);
    d.injectives_partitioned = partitioned(n, &co.terms);
    if !d.projectives_partitioned || !d.injectives_partitioned {
        return d;
    }
    let op = algebra.opposite();
    d.dimensions = (0..n).all(|x| {
        (x == i || homology::pd_simple(algebra, x) <= 2)
            && (x == j || homology::pd_simple(&op, x) <= 2)
    });
    d
}

/// True when the algebra satisfies conditions i) to iv).
pub fn satisfies_first_four(algebra: &SchurianAlgebra) -> bool {
    first_four(algebra).first_four()
}

/// Checks all five conditions; condition v) scans every proper vertex subset.
pub fn is_critical(algebra: &SchurianAlgebra) -> CriticalDiagnostics {
    let mut d = first_four(algebra);
    let n = algebra.vertex_count();
    let full = algebra.vertices();
    let smaller = (4..n).find_map(|k| {
        subsets_of_size(full, k).into_par_iter().find_first(|&x| {
            algebra
                .full_subcategory(x)
                .map(|b| satisfies_first_four(&b))
                .unwrap_or(false)
        })
    });
    d.minimal = smaller.is_none();
    d.smaller = smaller;
    d
}

/// A family in the catalogue of critical algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TemplateKind {
    A,
    B,
    Q,
}

impl TemplateKind {
    pub fn letter(self) -> &'static str {
        match self {
            TemplateKind::A => "A",
            TemplateKind::B => "B",
            TemplateKind::Q => "Q",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" | "a" => Some(TemplateKind::A),
            "B" | "b" => Some(TemplateKind::B),
            "Q" | "q" => Some(TemplateKind::Q),
            _ => None,
        }
    }
}

/// A member of the catalogue: `A_l` (l ≥ 1), `B_m` (m = 1 or m ≥ 3), `Q_n` (n ≥ 2),
/// possibly opposite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CriticalTemplate {
    pub kind: TemplateKind,
    pub param: usize,
    pub opposite: bool,
}

impl CriticalTemplate {
    pub fn new(kind: TemplateKind, param: usize) -> Self {
        CriticalTemplate {
            kind,
            param,
            opposite: false,
        }
    }

    pub fn op(mut self) -> Self {
        self.opposite = !self.opposite;
        self
    }

    pub fn is_valid(&self) -> bool {
        match self.kind {
            TemplateKind::A => self.param >= 1,
            TemplateKind::B => self.param == 1 || self.param >= 3,
            TemplateKind::Q => self.param >= 2,
        }
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        match (self.kind, self.param) {
            (TemplateKind::A, 1) => 4,
            (TemplateKind::A, l) => l + 3,
            (TemplateKind::B, 1) => 6,
            (TemplateKind::B, m) => 2 * m + 1,
            (TemplateKind::Q, n) => 2 * n + 2,
        }
    }

    /// All valid templates with exactly `size` vertices.
    pub fn of_size(size: usize) -> Vec<CriticalTemplate> {
        let mut out = Vec::new();
        for kind in [TemplateKind::A, TemplateKind::B, TemplateKind::Q] {
            for param in 1..=size {
                let t = CriticalTemplate::new(kind, param);
                if t.is_valid() && t.size() == size {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for CriticalTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.letter(), self.param)?;
        if self.opposite {
            write!(f, "^op")?;
        }
        Ok(())
    }
}

/// The catalogue algebra for `t`, as an incidence quotient.
pub fn critical_template(t: CriticalTemplate) -> Result<IncidenceQuotient> {
    if !t.is_valid() {
        return Err(Error::InvalidTemplate(format!(
            "{}_{} is not in the catalogue",
            t.kind.letter(),
            t.param
        )));
    }
    let mut names: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String)> = Vec::new();
    let mut zeros: Vec<(String, String)> = Vec::new();
    let s = |x: &str| x.to_string();
    match (t.kind, t.param) {
        (TemplateKind::A, 1) => {
            names = vec![s("i"), s("a"), s("b"), s("j")];
            arrows = vec![(s("i"), s("a")), (s("a"), s("b")), (s("b"), s("j"))];
            zeros = vec![(s("i"), s("b")), (s("a"), s("j"))];
        }
        (TemplateKind::A, l) => {
            names.push(s("i"));
            names.push(s("a"));
            arrows.push((s("i"), s("a")));
            for k in 1..=l {
                let b = format!("b{k}");
                names.push(b.clone());
                arrows.push((s("a"), b.clone()));
                arrows.push((b.clone(), s("j")));
                zeros.push((s("i"), b));
            }
            names.push(s("j"));
        }
        (TemplateKind::B, 1) => {
            names = ["i", "a1", "a2", "b1", "b2", "j"]
                .iter()
                .map(|x| s(x))
                .collect();
            arrows = [
                ("i", "a1"),
                ("i", "a2"),
                ("a1", "b1"),
                ("a2", "b1"),
                ("a2", "b2"),
                ("b1", "j"),
                ("b2", "j"),
            ]
            .iter()
            .map(|(x, y)| (s(x), s(y)))
            .collect();
            zeros = vec![(s("i"), s("b2")), (s("a1"), s("j"))];
        }
        (TemplateKind::B, m) => {
            names.push(s("i"));
            for k in 1..=m {
                names.push(format!("a{k}"));
                arrows.push((s("i"), format!("a{k}")));
            }
            for k in 1..m {
                let b = format!("b{k}");
                names.push(b.clone());
                arrows.push((format!("a{k}"), b.clone()));
                arrows.push((format!("a{}", k + 1), b.clone()));
                arrows.push((b, s("j")));
            }
            names.push(s("j"));
            zeros = vec![(s("a1"), s("j")), (format!("a{m}"), s("j"))];
        }
        (TemplateKind::Q, n) => {
            names.push(s("t"));
            for k in 1..=n {
                names.push(format!("a{k}"));
                arrows.push((s("t"), format!("a{k}")));
            }
            for k in 1..=n {
                names.push(format!("b{k}"));
                arrows.push((format!("b{k}"), s("s")));
                arrows.push((format!("a{k}"), format!("b{k}")));
                arrows.push((format!("a{k}"), format!("b{}", k % n + 1)));
            }
            names.push(s("s"));
        }
    }
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let arrow_refs: Vec<(&str, &str)> = arrows
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let hasse = Quiver::from_names(&name_refs, &arrow_refs)?;
    let zero_ids: Vec<_> = zeros
        .iter()
        .map(|(a, b)| (hasse.index_of(a).unwrap(), hasse.index_of(b).unwrap()))
        .collect();
    let base = CriticalTemplate {
        opposite: false,
        ..t
    };
    let q = IncidenceQuotient::from_poset(base.to_string(), hasse, &zero_ids)?;
    Ok(if t.opposite { q.opposite() } else { q })
}

/// Identifies a critical algebra with a catalogue entry by isomorphism of hom
/// supports.
pub fn classify_critical(algebra: &SchurianAlgebra) -> Result<CriticalTemplate> {
    let n = algebra.vertex_count();
    for t in CriticalTemplate::of_size(n) {
        for candidate in [t, t.op()] {
            let q = critical_template(candidate)?;
            if find_isomorphism(algebra.hom_rows(), q.algebra().hom_rows()).is_some() {
                return Ok(candidate);
            }
        }
    }
    Err(Error::ClassificationGap(n))
}

/// A critical full subcategory found inside an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalReport {
    pub subset: VertexSet,
    pub induced: SchurianAlgebra,
    /// `None` when no catalogue entry matches.
    pub template: Option<CriticalTemplate>,
    pub source: VertexId,
    pub sink: VertexId,
    /// Resolution of the source simple inside the subcategory, rendered as text.
    pub resolution: String,
}

impl CriticalReport {
    fn new(algebra: &SchurianAlgebra, subset: VertexSet) -> Self {
        let induced = algebra
            .full_subcategory(subset)
            .expect("subset is nonempty");
        let template = classify_critical(&induced).ok();
        let i = induced.sources().first().unwrap();
        let j = induced.sinks().first().unwrap();
        let old = subset.to_vec();
        let res = resolve_simple(&induced, i);
        let resolution = res.display_line(&induced, &format!("S{}", induced.label(i)));
        CriticalReport {
            subset,
            induced,
            template,
            source: old[i],
            sink: old[j],
            resolution,
        }
    }

    /// Vertex labels of the subset, in vertex order.
    pub fn labels(&self, algebra: &SchurianAlgebra) -> Vec<String> {
        self.subset
            .iter()
            .map(|v| algebra.label(v).to_string())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Scan every vertex subset; the reference method.
    Exhaustive,
    /// Build candidates from third syzygies of simples of projective dimension 3.
    ResolutionGuided,
}

/// All critical full subcategories, ordered by size and then lexicographically.
///
/// Subsets are scanned by increasing size; a subset satisfying i) to iv) is
/// critical exactly when it contains no critical subset found earlier.
pub fn critical_subcategories(algebra: &SchurianAlgebra) -> Vec<CriticalReport> {
    let n = algebra.vertex_count();
    let full = algebra.vertices();
    let mut found: Vec<VertexSet> = Vec::new();
    for k in 4..=n {
        let level: Vec<VertexSet> = subsets_of_size(full, k)
            .into_par_iter()
            .filter(|&x| {
                !found.iter().any(|c| c.is_subset(x))
                    && algebra
                        .full_subcategory(x)
                        .map(|b| satisfies_first_four(&b))
                        .unwrap_or(false)
            })
            .collect();
        found.extend(level);
    }
    found
        .into_iter()
        .map(|x| CriticalReport::new(algebra, x))
        .collect()
}

/// Critical subcategories produced from third syzygies: for every simple `S_i`
/// of projective dimension 3 and every summand `P_j` of its third term, the
/// algebra from [`build_gamma`], or the critical subcategories of the convex
/// hull of `(i, j)` when that algebra is not critical.
pub fn guided_critical_subcategories(algebra: &SchurianAlgebra) -> Vec<CriticalReport> {
    let mut subsets: Vec<VertexSet> = Vec::new();
    for i in 0..algebra.vertex_count() {
        let res = resolve_simple(algebra, i);
        if res.length() != 3 {
            continue;
        }
        for j in res.term_support(3).iter() {
            match build_gamma(algebra, i, j) {
                Ok((gamma, subset)) if is_critical(&gamma).is_critical() => subsets.push(subset),
                _ => {
                    // the construction can miss; scan the convex hull instead
                    let hull = algebra.convex_hull_vertices(i, j);
                    let old = hull.to_vec();
                    let c = algebra.full_subcategory(hull).expect("hull is nonempty");
                    for r in critical_subcategories(&c) {
                        subsets.push(r.subset.iter().map(|v| old[v]).collect());
                    }
                }
            }
        }
    }
    subsets.sort_by_key(|s| (s.len(), s.to_vec()));
    subsets.dedup();
    subsets
        .into_iter()
        .map(|x| CriticalReport::new(algebra, x))
        .collect()
}

pub fn find_critical_subcategories(
    algebra: &SchurianAlgebra,
    strategy: Strategy,
) -> Vec<CriticalReport> {
    match strategy {
        Strategy::Exhaustive => critical_subcategories(algebra),
        Strategy::ResolutionGuided => guided_critical_subcategories(algebra),
    }
}

/// The first critical full subcategory in size-then-lexicographic order.
pub fn find_critical_subcategory(
    algebra: &SchurianAlgebra,
    strategy: Strategy,
) -> Option<CriticalReport> {
    find_critical_subcategories(algebra, strategy)
        .into_iter()
        .next()
}

/// Outcome of the sufficient criterion for global dimension at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No critical full subcategory exists.
    CertifiedAtMostTwo,
    /// Critical full subcategories exist; this alone does not decide the
    /// global dimension.
    CriticalFound(Vec<CriticalReport>),
}

pub fn gldim2_criterion(algebra: &SchurianAlgebra) -> Verdict {
    let reports = critical_subcategories(algebra);
    if reports.is_empty() {
        Verdict::CertifiedAtMostTwo
    } else {
        Verdict::CriticalFound(reports)
    }
}

/// True when every projective dimension from 0 up to the global dimension is
/// attained by some simple.
pub fn pd_spectrum_check(algebra: &SchurianAlgebra) -> bool {
    let pds = homology::pd_table(algebra);
    let top = pds.iter().copied().max().unwrap_or(0);
    (0..=top).all(|m| pds.contains(&m))
}

/// The crown test for a plain incidence algebra: no crown of size `2n ≥ 6`
/// between two comparable elements, and every four-element crown `t > a₁,a₂ >
/// b₁,b₂ > s` has an element `c` with `a₁,a₂ > c > b₁,b₂`.
pub fn igusa_zacharia(q: &IncidenceQuotient) -> Result<bool> {
    if !q.zeros().is_empty() {
        return Err(Error::NotAnIncidenceAlgebra);
    }
    Ok(crown_test(q.order()))
}

/// [`igusa_zacharia`] on an order given directly.
pub fn crown_test(order: &Order) -> bool {
    let n = order.len();
    let up = order.up_sets();
    let comparable: Vec<VertexSet> = (0..n)
        .map(|x| {
            let mut c = order.down_set(x).union(up[x]);
            c.remove(x);
            c
        })
        .collect();
    let mut seen_intervals: Vec<VertexSet> = Vec::new();
    for t in 0..n {
        for s in order.down_set(t).iter() {
            if s == t {
                continue;
            }
            let mut open = order.down_set(t).intersection(up[s]);
            open.remove(s);
            open.remove(t);
            if open.len() < 4 {
                continue;
            }
            if !square_crowns_filled(order, &up, &comparable, open) {
                return false;
            }
            if seen_intervals.contains(&open) {
                continue;
            }
            seen_intervals.push(open);
            if has_long_induced_cycle(&comparable, open) {
                return false;
            }
        }
    }
    true
}

fn square_crowns_filled(
    order: &Order,
    up: &[VertexSet],
    comparable: &[VertexSet],
    open: VertexSet,
) -> bool {
    let members = open.to_vec();
    for (ia, &a1) in members.iter().enumerate() {
        for &a2 in &members[ia + 1..] {
            if comparable[a1].contains(a2) {
                continue;
            }
            let below = order
                .down_set(a1)
                .intersection(order.down_set(a2))
                .intersection(open);
            let bs = below.to_vec();
            for (ib, &b1) in bs.iter().enumerate() {
                for &b2 in &bs[ib + 1..] {
                    if comparable[b1].contains(b2) {
                        continue;
                    }
                    let middle = order
                        .down_set(a1)
                        .intersection(order.down_set(a2))
                        .intersection(up[b1])
                        .intersection(up[b2]);
                    if middle
                        .difference(VertexSet::from_iter([a1, a2, b1, b2]))
                        .is_empty()
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Searches for an induced cycle of length at least 6 inside `within`.
fn has_long_induced_cycle(adj: &[VertexSet], within: VertexSet) -> bool {
    fn extend(
        adj: &[VertexSet],
        within: VertexSet,
        root: VertexId,
        path: &mut Vec<VertexId>,
        on_path: VertexSet,
    ) -> bool {
        let last = *path.last().unwrap();
        for next in adj[last].intersection(within).iter() {
            if next <= root || on_path.contains(next) {
                continue;
            }
            // next may touch only `last` among the path, plus the root when closing
            let touches = adj[next].intersection(on_path);
            let interior = touches.difference(VertexSet::from_iter([last, root]));
            if !interior.is_empty() {
                continue;
            }
            let closes = touches.contains(root) && path.len() >= 2;
            if closes {
                if path.len() + 1 >= 6 {
                    return true;
                }
                continue;
            }
            if touches.contains(root) && last != root {
                continue;
            }
            path.push(next);
            let mut on = on_path;
            on.insert(next);
            if extend(adj, within, root, path, on) {
                return true;
            }
            path.pop();
        }
        false
    }
    for root in within.iter() {
        let mut path = vec![root];
        if extend(adj, within, root, &mut path, VertexSet::singleton(root)) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::fixtures::*;

    fn t(kind: TemplateKind, p: usize) -> CriticalTemplate {
        CriticalTemplate::new(kind, p)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn second_term_from_minimal_relations() {
        let ta1 = chain_with_overlapping_zeros().into_algebra();
        assert_eq!(q2_summands_via_relations(&ta1, 0), vec![(2, 1)]);
        let sq = commutative_square().into_algebra();
        assert_eq!(q2_summands_via_relations(&sq, 0), vec![(3, 1)]);
        assert!(q2_summands_via_relations(chain(4).algebra(), 0).is_empty());
    }

    #[test]
    fn syzygy_config_of_a1_chain() {
        let ta1 = chain_with_overlapping_zeros().into_algebra();
        let c = build_syzygy_config(&ta1, 0, 3);
        assert_eq!(c.r_set, set(&[3]));
        assert_eq!(c.s_set, set(&[2]));
        assert_eq!((c.r, c.s, c.v()), (1, 1, 0));
        assert_eq!(q3_summand_test(&ta1, 0, 3), Ok(true));
    }

    #[test]
    fn syzygy_config_of_square_crown() {
        let q2 = critical_template(t(TemplateKind::Q, 2))
            .unwrap()
            .into_algebra();
        let (top, bottom) = (0, 5);
        let c = build_syzygy_config(&q2, top, bottom);
        assert_eq!(c.r_set.len(), 2);
        assert_eq!(c.s_set.len(), 2);
        assert_eq!((c.r, c.s, c.v()), (2, 2, 2));
    }

    #[test]
    fn third_term_test_on_converse_example() {
        let ex = chain_with_split_zeros().into_algebra();
        let got = q3_summand_test_dualizing(&ex, 0, 5).map(|(b, _)| b);
        assert_eq!(got, Some(false));
    }

    #[test]
    fn third_term_test_on_square_with_zeros() {
        let ex = square_with_zeros().into_algebra();
        assert_eq!(resolve_simple(&ex, 0).multiplicity(3, 5), 1);
        assert_eq!(q3_summand_test(&ex, 0, 5), Ok(true));
        // the relation 2 ⇝ 6 is a consequence of 3 ⇝ 6 on the left
        assert_eq!(ex.minimal_relation_count(1, 5), 0);
        assert_eq!(ex.terminal_relation_count(1, 5), 1);
    }

    #[test]
    fn third_term_test_counterexamples() {
        // predicts P_7 in Q_3 for S_1, but Q_3 = P_4
        let q = IncidenceQuotient::from_poset(
            "false-positive",
            Quiver::from_names(
                &["1", "2", "3", "4", "6", "7"],
                &[
                    ("1", "2"),
                    ("2", "3"),
                    ("3", "4"),
                    ("3", "6"),
                    ("4", "7"),
                    ("6", "7"),
                ],
            )
            .unwrap(),
            &[(0, 2), (1, 3)],
        )
        .unwrap();
        let a = q.algebra();
        assert!(q.is_certified());
        let res = resolve_simple(a, 0);
        assert_eq!(res.terms[3], vec![3]);
        assert_eq!(q3_summand_test(a, 0, 5), Ok(true));
    }

    #[test]
    fn audits_pass_on_fixtures() {
        for q in [
            square_with_zeros(),
            chain_with_split_zeros(),
            commutative_square(),
            chain_with_overlapping_zeros(),
        ] {
            for i in 0..q.algebra().vertex_count() {
                let audit = resolution_shape_audit(q.algebra(), i);
                assert!(audit.passed(), "{} {:?}", q.name(), audit);
            }
        }
        let ta1 = chain_with_overlapping_zeros().into_algebra();
        assert!(resolution_shape_audit(&ta1, 0).first_term_is_arrow_targets);
    }

    #[test]
    fn gamma_examples() {
        let ex = square_with_zeros().into_algebra();
        let (gamma, subset) = build_gamma(&ex, 0, 5).unwrap();
        assert!(is_critical(&gamma).is_critical());
        assert_eq!(classify_critical(&gamma), Ok(t(TemplateKind::A, 1)));
        assert_eq!(subset.len(), 4);
        let ta1 = chain_with_overlapping_zeros().into_algebra();
        let (gamma, subset) = build_gamma(&ta1, 0, 3).unwrap();
        assert_eq!(subset, ta1.vertices());
        assert_eq!(gamma.hom_rows(), ta1.hom_rows());
        assert!(matches!(
            build_gamma(&chain_with_split_zeros().into_algebra(), 0, 5),
            Err(Error::NotAThirdSyzygyPair(..))
        ));
    }

    #[test]
    fn criticality_of_fixtures() {
        let ta1 = chain_with_overlapping_zeros().into_algebra();
        assert!(is_critical(&ta1).is_critical());
        let ex = square_with_zeros().into_algebra();
        let d = is_critical(&ex);
        assert!(!d.is_critical());
        assert!(!is_critical(commutative_square().algebra()).is_critical());
    }

    #[test]
    fn template_round_trip() {
        assert_eq!(
            critical_template(t(TemplateKind::A, 1))
                .unwrap()
                .algebra()
                .hom_rows(),
            chain_with_overlapping_zeros().algebra().hom_rows()
        );
        for tpl in [
            t(TemplateKind::B, 1),
            t(TemplateKind::A, 2).op(),
            t(TemplateKind::Q, 3),
        ] {
            let q = critical_template(tpl).unwrap();
            assert_eq!(classify_critical(q.algebra()), Ok(tpl), "{tpl}");
        }
        assert!(matches!(
            critical_template(t(TemplateKind::B, 2)),
            Err(Error::InvalidTemplate(_))
        ));
        assert!(matches!(
            critical_template(t(TemplateKind::Q, 1)),
            Err(Error::InvalidTemplate(_))
        ));
    }

    #[test]
    fn example_searches() {
        let sq = square_with_zeros().into_algebra();
        let found = critical_subcategories(&sq);
        assert!(found.iter().any(|r| r.subset == set(&[1, 2, 5, 6])));
        assert!(found
            .iter()
            .all(|r| r.template == Some(t(TemplateKind::A, 1))));
        let split = chain_with_split_zeros().into_algebra();
        let found = critical_subcategories(&split);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].subset, set(&[1, 2, 5, 6]));
        assert!(find_critical_subcategory(chain(5).algebra(), Strategy::Exhaustive).is_none());
    }

    #[test]
    fn criterion_verdicts() {
        assert_eq!(
            gldim2_criterion(chain(4).algebra()),
            Verdict::CertifiedAtMostTwo
        );
        assert!(matches!(
            gldim2_criterion(chain_with_split_zeros().algebra()),
            Verdict::CriticalFound(_)
        ));
    }

    #[test]
    fn spectrum() {
        assert!(pd_spectrum_check(square_with_zeros().algebra()));
        assert!(pd_spectrum_check(chain(1).algebra()));
    }

    #[test]
    fn crown_examples() {
        let crown = critical_template(t(TemplateKind::Q, 2)).unwrap();
        assert_eq!(igusa_zacharia(&crown), Ok(false));
        assert_eq!(igusa_zacharia(&commutative_square()), Ok(true));
        let filled = IncidenceQuotient::numbered(
            "filled",
            7,
            &[
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
            ],
            &[],
        )
        .unwrap();
        assert_eq!(igusa_zacharia(&filled), Ok(true));
        assert_eq!(
            igusa_zacharia(&square_with_zeros()),
            Err(Error::NotAnIncidenceAlgebra)
        );
        let q3 = critical_template(t(TemplateKind::Q, 3)).unwrap();
        assert_eq!(igusa_zacharia(&q3), Ok(false));
    }
}
