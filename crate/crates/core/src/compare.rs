//! Runs the combinatorial predictions against the homology engine.

use crate::criteria::{
    audit_resolution, crown_test, find_critical_subcategories, pd_spectrum_check,
    q2_summands_via_relations, q3_summand_test_dualizing, Strategy,
};
use crate::homology::{gl_dim, id_table, pd_simple, resolve_simple, ProjResolution};
use crate::presentation::{IncidenceQuotient, SchurianAlgebra};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Agree,
    Disagree,
    /// Noted but not a failure, e.g. a critical subcategory in an algebra of
    /// global dimension two.
    Info,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    /// First counterexample, or a note.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub algebra: String,
    pub certified: bool,
    pub checks: Vec<Check>,
}

impl ComparisonReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.outcome == Outcome::Disagree)
    }

    /// True when a certified input has a disagreement.
    pub fn failed(&self) -> bool {
        self.certified && self.disagreements().next().is_some()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.certified {
            "certified"
        } else {
            "uncertified (uncertified hypotheses)"
        };
        let _ = writeln!(out, "status: {status}");
        let _ = writeln!(out, "algebra: {}", self.algebra);
        for c in &self.checks {
            let tag = match c.outcome {
                Outcome::Agree => "agree",
                Outcome::Disagree => "DISAGREE",
                Outcome::Info => "info",
                Outcome::NotApplicable => "n/a",
            };
            match &c.witness {
                Some(w) => {
                    let _ = writeln!(out, "  [{tag}] {}: {w}", c.name);
                }
                None => {
                    let _ = writeln!(out, "  [{tag}] {}", c.name);
                }
            }
        }
        out
    }
}

fn check(name: &str, witness: Option<String>) -> Check {
    Check {
        name: name.to_string(),
        outcome: if witness.is_some() {
            Outcome::Disagree
        } else {
            Outcome::Agree
        },
        witness,
    }
}

fn q2_engine(res: &ProjResolution) -> Vec<(usize, usize)> {
    res.term_support(2)
        .iter()
        .map(|b| (b, res.multiplicity(2, b)))
        .collect()
}

/// Compares every prediction for `q` with the engine.
pub fn oracle_compare(q: &IncidenceQuotient) -> ComparisonReport {
    let mut report = compare_algebras(q.algebra(), q.algebra(), q.is_certified());
    if q.zeros().is_empty() {
        let iz = crown_test(q.order());
        let gl = gl_dim(q.algebra());
        let witness = (iz != (gl <= 2)).then(|| format!("crown test {iz}, gl.dim {gl}"));
        report
            .checks
            .push(check("crown test matches gl.dim <= 2", witness));
    } else {
        report.checks.push(Check {
            name: "crown test matches gl.dim <= 2".into(),
            outcome: Outcome::NotApplicable,
            witness: Some("algebra has zero relations".into()),
        });
    }
    report
}

/// Compares predictions made from `combinatorial` with the engine run on
/// `engine`. Both must have the same vertex labels; they differ only in tests
/// that feed a deliberately wrong presentation to one side.
pub fn compare_algebras(
    combinatorial: &SchurianAlgebra,
    engine: &SchurianAlgebra,
    certified: bool,
) -> ComparisonReport {
    let n = engine.vertex_count();
    let lbl = |x: usize| engine.label(x).to_string();
    let resolutions: Vec<ProjResolution> = (0..n).map(|x| resolve_simple(engine, x)).collect();
    let mut checks = Vec::new();

    let witness = (0..n).find_map(|i| {
        let mut pred = q2_summands_via_relations(combinatorial, i);
        pred.sort_unstable();
        let actual = q2_engine(&resolutions[i]);
        (pred != actual).then(|| {
            let show = |v: &[(usize, usize)]| {
                v.iter()
                    .map(|&(b, m)| {
                        if m > 1 {
                            format!("P{}^{m}", lbl(b))
                        } else {
                            format!("P{}", lbl(b))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ⊕ ")
            };
            format!(
                "S{}: predicted [{}], engine [{}]",
                lbl(i),
                show(&pred),
                show(&actual)
            )
        })
    });
    checks.push(check("second term from minimal relations", witness));

    let mut witness = None;
    'outer: for (i, res) in resolutions.iter().enumerate() {
        if res.length() < 2 {
            continue;
        }
        for j in 0..n {
            let truth = res.multiplicity(3, j) >= 1;
            let w = match q3_summand_test_dualizing(combinatorial, i, j) {
                Some((pred, _)) if pred == truth => None,
                Some((pred, side)) => Some(format!(
                    "({}, {}): predicted {pred} on {side:?}, engine {truth}",
                    lbl(i),
                    lbl(j)
                )),
                None => Some(format!(
                    "({}, {}): s < r on both sides, engine {truth}",
                    lbl(i),
                    lbl(j)
                )),
            };
            if w.is_some() {
                witness = w;
                break 'outer;
            }
        }
    }
    checks.push(check("third-term summand test", witness));

    let witness = (!pd_spectrum_check(engine)).then(|| {
        let pds: Vec<String> = resolutions.iter().map(|r| r.length().to_string()).collect();
        format!("projective dimensions [{}]", pds.join(", "))
    });
    checks.push(check("every pd up to gl.dim is attained", witness));

    let witness = resolutions.iter().enumerate().find_map(|(i, res)| {
        let audit = audit_resolution(engine, i, res);
        (!audit.passed()).then(|| format!("S{}: {:?}", lbl(i), audit))
    });
    checks.push(check("resolution structure audit", witness));

    let witness = resolutions.iter().enumerate().find_map(|(i, res)| {
        res.term_support(3)
            .iter()
            .find(|&j| combinatorial.hom(i, j))
            .map(|j| {
                format!(
                    "({}, {}): P{} in Q_3 but S{} is a factor of P{}",
                    lbl(i),
                    lbl(j),
                    lbl(j),
                    lbl(j),
                    lbl(i)
                )
            })
    });
    checks.push(check("third-term summands are not factors of P_i", witness));

    let mut witness = None;
    'hull: for (i, res) in resolutions.iter().enumerate() {
        if res.length() != 3 {
            continue;
        }
        for j in res.term_support(3).iter() {
            let hull = combinatorial.convex_hull_vertices(i, j);
            let Ok(c) = engine.full_subcategory(hull) else {
                continue;
            };
            let ci = hull.iter().position(|v| v == i).unwrap();
            let pd = pd_simple(&c, ci);
            if pd != 3 {
                witness = Some(format!(
                    "({}, {}): pd in the convex hull is {pd}",
                    lbl(i),
                    lbl(j)
                ));
                break 'hull;
            }
        }
    }
    checks.push(check("pd stays 3 in the convex hull", witness));

    let op = engine.opposite();
    let ids = id_table(&op);
    let witness = (0..n)
        .find(|&x| resolutions[x].length() != ids[x])
        .map(|x| {
            format!(
                "S{}: pd {} vs id in the opposite {}",
                lbl(x),
                resolutions[x].length(),
                ids[x]
            )
        });
    checks.push(check("pd equals id in the opposite algebra", witness));

    let gl = resolutions
        .iter()
        .map(ProjResolution::length)
        .max()
        .unwrap_or(0);
    let critical = find_critical_subcategories(combinatorial, Strategy::Exhaustive);
    let witness = (gl >= 3 && critical.is_empty())
        .then(|| format!("gl.dim {gl} without a critical subcategory"));
    checks.push(check("gl.dim >= 3 implies a critical subcategory", witness));
    if gl <= 2 && !critical.is_empty() {
        checks.push(Check {
            name: "critical subcategory with gl.dim <= 2".into(),
            outcome: Outcome::Info,
            witness: Some(format!(
                "{{{}}} with gl.dim {gl}",
                critical[0].labels(combinatorial).join(",")
            )),
        });
    }

    let guided = find_critical_subcategories(combinatorial, Strategy::ResolutionGuided);
    let witness = guided
        .iter()
        .find(|g| !critical.iter().any(|c| c.subset == g.subset))
        .map(|g| {
            format!(
                "guided subset {{{}}} missing from the exhaustive list",
                g.labels(combinatorial).join(",")
            )
        });
    checks.push(check(
        "guided search agrees with exhaustive search",
        witness,
    ));

    let witness = critical.iter().find(|c| c.template.is_none()).map(|c| {
        format!(
            "{{{}}} matches no template",
            c.labels(combinatorial).join(",")
        )
    });
    checks.push(check("critical subcategories are catalogued", witness));

    ComparisonReport {
        algebra: engine.name().to_string(),
        certified,
        checks,
    }
}
