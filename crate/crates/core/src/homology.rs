//! Representations of schurian algebras over the rationals and their minimal
//! projective resolutions.
//!
//! Modules are covariant: `M(x)` is a vector space per vertex and each skeleton
//! arrow `x -> y` carries a `dim M(y) × dim M(x)` matrix. The projective `P_x`
//! is supported on `{ z : hom(x, z) = 1 }`.
//!
//! Syzygies are kept as submodules of direct sums of indecomposable projectives.
//! For a sum `Q = ⊕_u P_{z_u}` the space `Q(v)` has one coordinate for each
//! summand with `hom(z_u, v) = 1`, and every arrow acts by dropping coordinates,
//! so no arrow matrices need to be stored for the terms of a resolution.

use crate::combinatorics::PathTable;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::presentation::SchurianAlgebra;
use crate::vertex_set::{VertexId, VertexSet};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// A finite-dimensional representation of a schurian algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<SchurianAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("algebra", &self.algebra.name())
            .field("dims", &self.dims)
            .finish()
    }
}

fn indicator_module(algebra: &Arc<SchurianAlgebra>, support: VertexSet) -> Representation {
    let n = algebra.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(support.contains(v))).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| {
            if dims[s] == 1 && dims[t] == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(dims[t], dims[s])
            }
        })
        .collect();
    Representation {
        algebra: Arc::clone(algebra),
        dims,
        maps,
    }
}

/// The simple module `S_x`.
pub fn simple(algebra: &Arc<SchurianAlgebra>, x: VertexId) -> Representation {
    indicator_module(algebra, VertexSet::singleton(x))
}

/// The indecomposable projective `P_x`, with `P_x(z) = A(x, z)`.
pub fn projective(algebra: &Arc<SchurianAlgebra>, x: VertexId) -> Representation {
    indicator_module(algebra, algebra.hom_from(x))
}

/// The indecomposable injective `I_x`, with `I_x(z) = D A(z, x)`.
pub fn injective(algebra: &Arc<SchurianAlgebra>, x: VertexId) -> Representation {
    indicator_module(algebra, algebra.hom_to(x))
}

/// First skeleton path `x ⇝ y` in vertex order, as a list of arrow indices.
fn route(algebra: &SchurianAlgebra, x: VertexId, y: VertexId) -> Vec<usize> {
    let q = algebra.quiver();
    let reach = algebra.reach();
    let mut out = Vec::new();
    let mut cur = x;
    while cur != y {
        let next = q
            .successors(cur)
            .iter()
            .find(|&z| reach.geq(z, y))
            .expect("route target is reachable");
        out.push(q.arrow_index(cur, next).expect("arrow exists"));
        cur = next;
    }
    out
}

impl Representation {
    /// Builds a representation, checking matrix shapes and every relation: along
    /// each pair of skeleton vertices all path composites agree, and they vanish
    /// where the hom space is zero.
    pub fn new(algebra: Arc<SchurianAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let n = algebra.vertex_count();
        if dims.len() != n {
            return Err(Error::RelationViolated(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                n
            )));
        }
        let arrows = algebra.quiver().arrows();
        if maps.len() != arrows.len() {
            return Err(Error::RelationViolated(format!(
                "{} matrices for {} arrows",
                maps.len(),
                arrows.len()
            )));
        }
        for (m, &(s, t)) in maps.iter().zip(arrows) {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::RelationViolated(format!(
                    "arrow {}->{} has a {}x{} matrix",
                    algebra.label(s),
                    algebra.label(t),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            maps,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    fn check_relations(&self) -> Result<()> {
        let a = &*self.algebra;
        let mut table = PathTable::new(a.quiver(), a.reach());
        for x in 0..a.vertex_count() {
            for y in a.reach().down_set(x).iter() {
                if y == x {
                    continue;
                }
                let composites: Vec<Matrix> = table
                    .paths(x, y)
                    .iter()
                    .map(|p| {
                        self.along(
                            p.arrows()
                                .map(|(s, t)| a.quiver().arrow_index(s, t).unwrap()),
                        )
                    })
                    .collect();
                let ok = if a.hom(x, y) {
                    composites.windows(2).all(|w| w[0] == w[1])
                } else {
                    composites.iter().all(Matrix::is_zero)
                };
                if !ok {
                    return Err(Error::RelationViolated(format!(
                        "paths {} ~> {}",
                        a.label(x),
                        a.label(y)
                    )));
                }
            }
        }
        Ok(())
    }

    fn along(&self, arrows: impl Iterator<Item = usize>) -> Matrix {
        let mut acc: Option<Matrix> = None;
        for i in arrows {
            acc = Some(match acc {
                None => self.maps[i].clone(),
                Some(m) => self.maps[i].mul(&m),
            });
        }
        acc.expect("path has positive length")
    }

    pub fn algebra(&self) -> &Arc<SchurianAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: VertexId) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn support(&self) -> VertexSet {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Matrix of the arrow with the given index in the skeleton's arrow list.
    pub fn arrow_map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// The action `M(x) -> M(y)` of the basis element of `A(x, y)`, or zero.
    pub fn action(&self, x: VertexId, y: VertexId) -> Matrix {
        if x == y {
            return Matrix::identity(self.dims[x]);
        }
        if !self.algebra.hom(x, y) {
            return Matrix::zeros(self.dims[y], self.dims[x]);
        }
        self.along(route(&self.algebra, x, y).into_iter())
    }

    /// μ_M(S_x), the multiplicity of `S_x` as a composition factor.
    pub fn composition_multiplicity(&self, x: VertexId) -> usize {
        self.dims[x]
    }

    /// The subrepresentation spanned by the given subspaces, which must be
    /// stable under the arrows.
    pub fn subrepresentation(&self, spaces: &[Subspace]) -> Result<Representation> {
        let arrows = self.algebra.quiver().arrows();
        let mut maps = Vec::with_capacity(arrows.len());
        for (i, &(s, t)) in arrows.iter().enumerate() {
            let mut cols = Vec::with_capacity(spaces[s].dim());
            for v in spaces[s].basis_vectors() {
                let image = self.maps[i].apply(&v);
                let coords = spaces[t].coordinates(&image).ok_or_else(|| {
                    Error::NotAMorphism(format!(
                        "subspace at {} is not stable under the arrow to {}",
                        self.algebra.label(s),
                        self.algebra.label(t)
                    ))
                })?;
                cols.push(coords);
            }
            maps.push(Matrix::from_column_vectors(spaces[t].dim(), &cols));
        }
        Ok(Representation {
            algebra: Arc::clone(&self.algebra),
            dims: spaces.iter().map(Subspace::dim).collect(),
            maps,
        })
    }

    fn radical_spaces(&self) -> Vec<Subspace> {
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|w| {
                let mut vs = Vec::new();
                for y in q.predecessors(w).iter() {
                    let m = &self.maps[q.arrow_index(y, w).unwrap()];
                    for c in 0..m.cols() {
                        vs.push(m.column(c));
                    }
                }
                Subspace::span(self.dims[w], &vs)
            })
            .collect()
    }

    /// The radical: the sum of the images of all arrows.
    pub fn radical(&self) -> Representation {
        self.subrepresentation(&self.radical_spaces())
            .expect("radical is a subrepresentation")
    }

    /// Dimension vector of `M / rad M`.
    pub fn top(&self) -> Vec<usize> {
        self.radical_spaces()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.dim())
            .collect()
    }

    /// Dimension vector of the socle, the intersection of the kernels of all
    /// outgoing arrows at each vertex.
    pub fn socle(&self) -> Vec<usize> {
        let q = self.algebra.quiver();
        (0..self.dims.len())
            .map(|x| {
                let outs: Vec<&Matrix> = q
                    .successors(x)
                    .iter()
                    .map(|y| &self.maps[q.arrow_index(x, y).unwrap()])
                    .collect();
                let rows: Vec<Vec<Scalar>> = outs
                    .iter()
                    .flat_map(|m| (0..m.rows()).map(|r| m.row(r).to_vec()))
                    .collect();
                if rows.is_empty() {
                    self.dims[x]
                } else {
                    self.dims[x] - Matrix::from_row_vectors(self.dims[x], &rows).rank()
                }
            })
            .collect()
    }

    /// Least `n` with `rad^n M = 0`.
    pub fn loewy_length(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let mut m = self.clone();
        let mut n = 0;
        while !m.is_zero() {
            m = m.radical();
            n += 1;
        }
        Ok(n)
    }

    /// The dual `DM`, a representation of the opposite algebra.
    pub fn dual(&self, opposite: &Arc<SchurianAlgebra>) -> Representation {
        let q = self.algebra.quiver();
        let maps = opposite
            .quiver()
            .arrows()
            .iter()
            .map(|&(s, t)| self.maps[q.arrow_index(t, s).expect("opposite arrow")].transpose())
            .collect();
        Representation {
            algebra: Arc::clone(opposite),
            dims: self.dims.clone(),
            maps,
        }
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    components: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        let n = source.dims.len();
        if target.dims.len() != n || components.len() != n {
            return Err(Error::NotAMorphism("vertex counts differ".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::NotAMorphism(format!(
                    "component at {} has the wrong shape",
                    source.algebra.label(v)
                )));
            }
        }
        for (i, &(s, t)) in source.algebra.quiver().arrows().iter().enumerate() {
            let left = components[t].mul(&source.maps[i]);
            let right = target.maps[i].mul(&components[s]);
            if left != right {
                return Err(Error::NotAMorphism(format!(
                    "square over {}->{} does not commute",
                    source.algebra.label(s),
                    source.algebra.label(t)
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            components,
        })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn component(&self, v: VertexId) -> &Matrix {
        &self.components[v]
    }

    pub fn kernel(&self) -> Representation {
        let spaces: Vec<Subspace> = self
            .components
            .iter()
            .enumerate()
            .map(|(v, c)| Subspace::span(self.source.dims[v], &c.nullspace()))
            .collect();
        self.source
            .subrepresentation(&spaces)
            .expect("kernel of a morphism is a subrepresentation")
    }

    pub fn is_epimorphism(&self) -> bool {
        self.components
            .iter()
            .zip(&self.target.dims)
            .all(|(c, &d)| c.rank() == d)
    }
}

/// The kernel of a morphism given by its components; the components must commute
/// with the arrows.
pub fn kernel(
    source: &Representation,
    target: &Representation,
    components: Vec<Matrix>,
) -> Result<Representation> {
    Ok(Morphism::new(source.clone(), target.clone(), components)?.kernel())
}

/// `⊕_u P_{z_u}` with coordinates ordered by summand.
pub fn projective_sum(algebra: &Arc<SchurianAlgebra>, summands: &[VertexId]) -> Representation {
    let n = algebra.vertex_count();
    let fibers: Vec<Vec<usize>> = (0..n).map(|v| fiber(algebra, summands, v)).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|&(s, t)| restriction_matrix(&fibers[s], &fibers[t]))
        .collect();
    Representation {
        algebra: Arc::clone(algebra),
        dims: fibers.iter().map(Vec::len).collect(),
        maps,
    }
}

fn restriction_matrix(from: &[usize], to: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(to.len(), from.len());
    for (c, u) in from.iter().enumerate() {
        if let Ok(r) = to.binary_search(u) {
            m[(r, c)] = Scalar::one();
        }
    }
    m
}

/// Indices of the summands of `⊕_u P_{z_u}` that are nonzero at `v`.
fn fiber(algebra: &SchurianAlgebra, summands: &[VertexId], v: VertexId) -> Vec<usize> {
    summands
        .iter()
        .enumerate()
        .filter(|(_, &z)| algebra.hom(z, v))
        .map(|(u, _)| u)
        .collect()
}

fn restrict(vector: &[Scalar], from: &[usize], to: &[usize]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); to.len()];
    for (value, u) in vector.iter().zip(from) {
        if let Ok(r) = to.binary_search(u) {
            out[r] = *value;
        }
    }
    out
}

/// A projective cover `⊕_t P_{w_t} -> M`, sending the generator of the
/// `t`-th summand to `generators[t] ∈ M(w_t)`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub summands: Vec<VertexId>,
    pub generators: Vec<Vec<Scalar>>,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let rad = m.radical_spaces();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for (w, r) in rad.iter().enumerate() {
        for g in Subspace::full(m.dims[w]).complement_of(r) {
            summands.push(w);
            generators.push(g);
        }
    }
    ProjectiveCover {
        summands,
        generators,
    }
}

impl ProjectiveCover {
    /// The covering map as a morphism of representations.
    pub fn epimorphism(&self, m: &Representation) -> Morphism {
        let algebra = m.algebra();
        let p = projective_sum(algebra, &self.summands);
        let components = (0..m.dims.len())
            .map(|v| {
                let cols: Vec<Vec<Scalar>> = fiber(algebra, &self.summands, v)
                    .into_iter()
                    .map(|t| m.action(self.summands[t], v).apply(&self.generators[t]))
                    .collect();
                Matrix::from_column_vectors(m.dims[v], &cols)
            })
            .collect();
        Morphism::new(p, m.clone(), components).expect("cover map commutes with arrows")
    }
}

/// A minimal projective resolution `… -> Q_1 -> Q_0 -> M -> 0`.
///
/// `terms[k]` lists the vertices `v` of the summands `P_v` of `Q_k`.
/// `differentials[k]` describes `Q_{k+1} -> Q_k`: the entry in row `u`, column `t`
/// is the scalar of the component `P_{w_t} -> P_{z_u}`, where `w_t` and `z_u` are
/// the summand vertices; it is nonzero only if `hom(z_u, w_t) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjResolution {
    pub terms: Vec<Vec<VertexId>>,
    pub differentials: Vec<Matrix>,
    /// Dimension vectors of the successive syzygies, starting with `M` itself.
    pub syzygy_dims: Vec<Vec<usize>>,
}

impl ProjResolution {
    /// Projective dimension of the resolved module.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Multiplicity of `P_v` in `Q_k` (zero beyond the last term).
    pub fn multiplicity(&self, k: usize, v: VertexId) -> usize {
        self.terms
            .get(k)
            .map_or(0, |t| t.iter().filter(|&&w| w == v).count())
    }

    pub fn term_support(&self, k: usize) -> VertexSet {
        self.terms
            .get(k)
            .map_or(VertexSet::EMPTY, |t| t.iter().copied().collect())
    }

    /// Dimension vector of `Q_k`.
    pub fn term_dims(&self, algebra: &SchurianAlgebra, k: usize) -> Vec<usize> {
        (0..algebra.vertex_count())
            .map(|v| self.terms[k].iter().filter(|&&z| algebra.hom(z, v)).count())
            .collect()
    }

    /// Renders `0 → Q_n → … → Q_0 → M → 0` with summands written `P<label>`.
    pub fn display_line(&self, algebra: &SchurianAlgebra, module: &str) -> String {
        let mut parts = vec!["0".to_string()];
        for term in self.terms.iter().rev() {
            parts.push(render_term(algebra, term, "P"));
        }
        parts.push(module.to_string());
        parts.push("0".to_string());
        parts.join(" → ")
    }
}

pub(crate) fn render_term(algebra: &SchurianAlgebra, term: &[VertexId], letter: &str) -> String {
    let mut counts: Vec<(VertexId, usize)> = Vec::new();
    for &v in term {
        match counts.iter_mut().find(|(w, _)| *w == v) {
            Some((_, c)) => *c += 1,
            None => counts.push((v, 1)),
        }
    }
    counts.sort_unstable();
    let pieces: Vec<String> = counts
        .iter()
        .map(|&(v, c)| {
            if c == 1 {
                format!("{letter}{}", algebra.label(v))
            } else {
                format!("{letter}{}^{c}", algebra.label(v))
            }
        })
        .collect();
    pieces.join("⊕")
}

/// A submodule of a projective sum, one subspace of fiber coordinates per vertex.
struct Syzygy {
    summands: Vec<VertexId>,
    spaces: Vec<Subspace>,
}

impl Syzygy {
    fn is_zero(&self) -> bool {
        self.spaces.iter().all(|s| s.dim() == 0)
    }
}

/// Covers `syz` by a new projective sum; returns its summands, the differential
/// into the ambient sum of `syz`, and the next syzygy.
fn cover_step(algebra: &SchurianAlgebra, syz: &Syzygy) -> Result<(Vec<VertexId>, Matrix, Syzygy)> {
    let n = algebra.vertex_count();
    let q = algebra.quiver();
    let fibers: Vec<Vec<usize>> = (0..n).map(|v| fiber(algebra, &syz.summands, v)).collect();
    let mut summands = Vec::new();
    let mut generators: Vec<Vec<Scalar>> = Vec::new();
    for w in 0..n {
        let k = &syz.spaces[w];
        if k.dim() == 0 {
            continue;
        }
        let mut incoming = Vec::new();
        for y in q.predecessors(w).iter() {
            for v in syz.spaces[y].basis_vectors() {
                incoming.push(restrict(&v, &fibers[y], &fibers[w]));
            }
        }
        let rad = Subspace::span(fibers[w].len(), &incoming);
        for g in k.complement_of(&rad) {
            summands.push(w);
            generators.push(g);
        }
    }
    let mut differential = Matrix::zeros(syz.summands.len(), summands.len());
    for (t, g) in generators.iter().enumerate() {
        for (idx, &u) in fibers[summands[t]].iter().enumerate() {
            differential[(u, t)] = g[idx];
        }
    }
    let mut spaces = Vec::with_capacity(n);
    for v in 0..n {
        let cols: Vec<Vec<Scalar>> = fiber(algebra, &summands, v)
            .into_iter()
            .map(|t| restrict(&generators[t], &fibers[summands[t]], &fibers[v]))
            .collect();
        let m = Matrix::from_column_vectors(fibers[v].len(), &cols);
        if m.rank() != syz.spaces[v].dim() {
            return Err(Error::Internal(format!(
                "cover of a syzygy is not surjective at vertex {}",
                algebra.label(v)
            )));
        }
        spaces.push(Subspace::span(cols.len(), &m.nullspace()));
    }
    Ok((summands.clone(), differential, Syzygy { summands, spaces }))
}

fn run_resolution(
    algebra: &SchurianAlgebra,
    first: Vec<VertexId>,
    kernel: Syzygy,
    module_dims: Vec<usize>,
) -> Result<ProjResolution> {
    let cap = algebra.vertex_count();
    let mut terms = vec![first];
    let mut differentials = Vec::new();
    let mut syzygy_dims = vec![module_dims];
    let mut syz = kernel;
    while !syz.is_zero() {
        if terms.len() > cap {
            return Err(Error::Internal(format!(
                "resolution exceeded {cap} terms without terminating"
            )));
        }
        syzygy_dims.push(syz.spaces.iter().map(Subspace::dim).collect());
        let (summands, d, next) = cover_step(algebra, &syz)?;
        terms.push(summands);
        differentials.push(d);
        syz = next;
    }
    Ok(ProjResolution {
        terms,
        differentials,
        syzygy_dims,
    })
}

/// The minimal projective resolution of a nonzero module.
pub fn minimal_projective_resolution(m: &Representation) -> Result<ProjResolution> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let algebra = m.algebra();
    let cover = projective_cover(m);
    let spaces = (0..m.dims.len())
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = fiber(algebra, &cover.summands, v)
                .into_iter()
                .map(|t| m.action(cover.summands[t], v).apply(&cover.generators[t]))
                .collect();
            let mat = Matrix::from_column_vectors(m.dims[v], &cols);
            Subspace::span(cols.len(), &mat.nullspace())
        })
        .collect();
    run_resolution(
        algebra,
        cover.summands.clone(),
        Syzygy {
            summands: cover.summands,
            spaces,
        },
        m.dims.clone(),
    )
}

/// The minimal projective resolution of `S_x`.
pub fn resolve_simple(algebra: &SchurianAlgebra, x: VertexId) -> ProjResolution {
    let n = algebra.vertex_count();
    let first = vec![x];
    let spaces = (0..n)
        .map(|v| {
            if v != x && algebra.hom(x, v) {
                Subspace::full(1)
            } else {
                Subspace::zero(usize::from(algebra.hom(x, v)))
            }
        })
        .collect();
    let mut dims = vec![0; n];
    dims[x] = 1;
    run_resolution(
        algebra,
        first.clone(),
        Syzygy {
            summands: first,
            spaces,
        },
        dims,
    )
    .expect("resolutions over triangular algebras terminate")
}

/// A minimal injective coresolution `0 -> M -> I_0 -> I_1 -> …`, obtained by
/// resolving the dual module over the opposite algebra.
///
/// `terms[k]` lists the vertices of the summands `I_v` of the `k`-th term;
/// `differentials[k]` is the matrix of `I_k -> I_{k+1}` (rows indexed by the
/// summands of `I_{k+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjCoresolution {
    pub terms: Vec<Vec<VertexId>>,
    pub differentials: Vec<Matrix>,
}

impl InjCoresolution {
    fn from_opposite(res: ProjResolution) -> Self {
        InjCoresolution {
            terms: res.terms,
            differentials: res.differentials.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn multiplicity(&self, k: usize, v: VertexId) -> usize {
        self.terms
            .get(k)
            .map_or(0, |t| t.iter().filter(|&&w| w == v).count())
    }

    /// Renders `0 → M → I_0 → … → I_n → 0`.
    pub fn display_line(&self, algebra: &SchurianAlgebra, module: &str) -> String {
        let mut parts = vec!["0".to_string(), module.to_string()];
        for term in &self.terms {
            parts.push(render_term(algebra, term, "I"));
        }
        parts.push("0".to_string());
        parts.join(" → ")
    }
}

pub fn minimal_injective_coresolution(m: &Representation) -> Result<InjCoresolution> {
    let op = Arc::new(m.algebra().opposite());
    let res = minimal_projective_resolution(&m.dual(&op))?;
    Ok(InjCoresolution::from_opposite(res))
}

pub fn coresolve_simple(algebra: &SchurianAlgebra, x: VertexId) -> InjCoresolution {
    InjCoresolution::from_opposite(resolve_simple(&algebra.opposite(), x))
}

pub fn pd(m: &Representation) -> Result<usize> {
    Ok(minimal_projective_resolution(m)?.length())
}

pub fn id(m: &Representation) -> Result<usize> {
    Ok(minimal_injective_coresolution(m)?.length())
}

pub fn pd_simple(algebra: &SchurianAlgebra, x: VertexId) -> usize {
    resolve_simple(algebra, x).length()
}

pub fn id_simple(algebra: &SchurianAlgebra, x: VertexId) -> usize {
    resolve_simple(&algebra.opposite(), x).length()
}

/// Projective dimensions of all simples.
pub fn pd_table(algebra: &SchurianAlgebra) -> Vec<usize> {
    (0..algebra.vertex_count())
        .map(|x| pd_simple(algebra, x))
        .collect()
}

/// Injective dimensions of all simples.
pub fn id_table(algebra: &SchurianAlgebra) -> Vec<usize> {
    let op = algebra.opposite();
    (0..algebra.vertex_count())
        .map(|x| pd_simple(&op, x))
        .collect()
}

/// The largest projective dimension of a simple module.
pub fn gl_dim(algebra: &SchurianAlgebra) -> usize {
    pd_table(algebra).into_iter().max().unwrap_or(0)
}

/// `dim Ext^k(S_x, S_y)`, read off as the multiplicity of `P_y` in the `k`-th
/// term of the minimal resolution of `S_x`.
pub fn ext_dim(algebra: &SchurianAlgebra, x: VertexId, y: VertexId, k: usize) -> usize {
    resolve_simple(algebra, x).multiplicity(k, y)
}

/// Outcome of checking one resolution of a simple against its structural laws.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ResolutionAudit {
    pub exact: bool,
    pub minimal: bool,
    pub downstream: bool,
    pub first_syzygy_top: bool,
    pub simple_not_repeated: bool,
    pub messages: Vec<String>,
}

impl ResolutionAudit {
    pub fn passed(&self) -> bool {
        self.exact
            && self.minimal
            && self.downstream
            && self.first_syzygy_top
            && self.simple_not_repeated
    }
}

/// Restriction of the `k`-th differential to the vertex `v`.
fn differential_at(
    algebra: &SchurianAlgebra,
    res: &ProjResolution,
    k: usize,
    v: VertexId,
) -> Matrix {
    let rows = fiber(algebra, &res.terms[k], v);
    let cols = fiber(algebra, &res.terms[k + 1], v);
    let d = &res.differentials[k];
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, &u) in rows.iter().enumerate() {
        for (c, &t) in cols.iter().enumerate() {
            m[(r, c)] = d[(u, t)];
        }
    }
    m
}

/// Checks a resolution of a module with dimension vector `module_dims`:
/// vertexwise exactness from the scalar differentials alone, and minimality.
pub fn audit_exactness(
    algebra: &SchurianAlgebra,
    res: &ProjResolution,
    module_dims: &[usize],
) -> (bool, Vec<String>) {
    let mut messages = Vec::new();
    for (v, &module_dim) in module_dims.iter().enumerate() {
        let ranks: Vec<usize> = (0..res.differentials.len())
            .map(|k| differential_at(algebra, res, k, v).rank())
            .collect();
        for k in 0..res.terms.len() {
            let dim_q = fiber(algebra, &res.terms[k], v).len();
            let incoming = if k + 1 < res.terms.len() { ranks[k] } else { 0 };
            let outgoing = if k == 0 { module_dim } else { ranks[k - 1] };
            if dim_q != incoming + outgoing {
                messages.push(format!(
                    "term {k} at vertex {}: dim {dim_q} but ranks {outgoing} + {incoming}",
                    algebra.label(v)
                ));
            }
        }
        for k in 0..res.differentials.len().saturating_sub(1) {
            let left = differential_at(algebra, res, k, v);
            let right = differential_at(algebra, res, k + 1, v);
            if !left.mul(&right).is_zero() {
                messages.push(format!(
                    "d∘d ≠ 0 at term {} vertex {}",
                    k + 1,
                    algebra.label(v)
                ));
            }
        }
    }
    (messages.is_empty(), messages)
}

/// True when no differential has a nonzero entry between summands at the same
/// vertex, i.e. every component lies in the radical.
pub fn audit_minimality(res: &ProjResolution) -> bool {
    res.differentials.iter().enumerate().all(|(k, d)| {
        res.terms[k].iter().enumerate().all(|(u, &z)| {
            res.terms[k + 1]
                .iter()
                .enumerate()
                .all(|(t, &w)| z != w || d[(u, t)].is_zero())
        })
    })
}

/// Full audit of the minimal resolution of `S_x`.
pub fn audit_simple_resolution(
    algebra: &SchurianAlgebra,
    x: VertexId,
    res: &ProjResolution,
) -> ResolutionAudit {
    let mut module_dims = vec![0; algebra.vertex_count()];
    module_dims[x] = 1;
    let (exact, mut messages) = audit_exactness(algebra, res, &module_dims);
    let minimal = audit_minimality(res);
    if !minimal {
        messages.push("a differential has an invertible component".into());
    }
    let reach = algebra.reach().down_set(x);
    let downstream = res
        .terms
        .iter()
        .all(|t| t.iter().all(|&v| reach.contains(v)));
    if !downstream {
        messages
            .push("a summand lies outside the vertices reachable from the resolved simple".into());
    }
    let first_syzygy_top = match res.terms.get(1) {
        None => algebra.quiver().successors(x).is_empty(),
        Some(t) => {
            let mut sorted = t.clone();
            sorted.sort_unstable();
            sorted == algebra.quiver().successors(x).to_vec()
        }
    };
    if !first_syzygy_top {
        messages.push("Q_1 differs from the arrow targets of the resolved vertex".into());
    }
    // S_x is not a composition factor of rad Q_0 nor of any later term
    let simple_not_repeated = res
        .terms
        .iter()
        .skip(1)
        .all(|t| t.iter().all(|&z| !algebra.hom(z, x)));
    if !simple_not_repeated {
        messages.push("S_x occurs as a composition factor of a later term".into());
    }
    ResolutionAudit {
        exact,
        minimal,
        downstream,
        first_syzygy_top,
        simple_not_repeated,
        messages,
    }
}
