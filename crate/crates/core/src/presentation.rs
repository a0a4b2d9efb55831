//! Schurian algebras given by their hom support, and incidence quotients
//! `kQ/(I + J)` of posets by monomial zero relations.

use crate::combinatorics::{Order, Path, PathTable, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTICES};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// A schurian triangular algebra presented by its hom support.
///
/// `hom[x]` is the set of `y` with `dim A(x, y) = 1`. The support must be
/// reflexive, acyclic, and closed under intervals: if `hom(x, y) = 1` then every
/// `z` lying between `x` and `y` has `hom(x, z) = hom(z, y) = 1`. Under this
/// condition every path of the arrow skeleton from `x` to `y` acts as the same
/// basis element of `A(x, y)` when that space is nonzero, so the quiver plus the
/// support determine the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurianAlgebra {
    name: String,
    quiver: Quiver,
    hom: Vec<VertexSet>,
    reach: Order,
}

impl SchurianAlgebra {
    pub fn from_hom(
        name: impl Into<String>,
        labels: Vec<String>,
        hom: Vec<VertexSet>,
    ) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if hom.len() != n {
            return Err(Error::InvalidHomSupport(format!(
                "{} rows for {} vertices",
                hom.len(),
                n
            )));
        }
        let all = VertexSet::full(n);
        for x in 0..n {
            if !hom[x].contains(x) {
                return Err(Error::InvalidHomSupport(format!(
                    "hom({0},{0}) = 0",
                    labels[x]
                )));
            }
            if !hom[x].is_subset(all) {
                return Err(Error::InvalidHomSupport(format!(
                    "row {} out of range",
                    labels[x]
                )));
            }
        }
        let pairs: Vec<_> = (0..n)
            .flat_map(|x| hom[x].iter().map(move |y| (x, y)))
            .collect();
        let closure = Order::from_pairs(n, &pairs)
            .map_err(|_| Error::InvalidHomSupport("support contains an oriented cycle".into()))?;
        let up = closure.up_sets();
        for x in 0..n {
            for y in hom[x].iter() {
                let between = closure.down_set(x).intersection(up[y]);
                for z in between.iter() {
                    if !hom[x].contains(z) || !hom[z].contains(y) {
                        return Err(Error::InvalidHomSupport(format!(
                            "hom({},{}) = 1 but {} lies between with a vanishing factor",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        let mut arrows = Vec::new();
        for x in 0..n {
            for y in hom[x].iter() {
                if y == x {
                    continue;
                }
                let factors = hom[x]
                    .iter()
                    .any(|z| z != x && z != y && hom[z].contains(y));
                if !factors {
                    arrows.push((x, y));
                }
            }
        }
        let quiver = Quiver::new(labels, &arrows)?;
        let reach = quiver.reachability()?;
        Ok(SchurianAlgebra {
            name: name.into(),
            quiver,
            hom,
            reach,
        })
    }

    /// The incidence algebra of a poset given by its Hasse quiver.
    pub fn incidence(name: impl Into<String>, hasse: &Quiver) -> Result<Self> {
        let reach = hasse.reachability()?;
        SchurianAlgebra::from_hom(name, hasse.labels().to_vec(), reach.down_sets().to_vec())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.hom.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.hom.len())
    }

    pub fn labels(&self) -> &[String] {
        self.quiver.labels()
    }

    pub fn label(&self, v: VertexId) -> &str {
        self.quiver.label(v)
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        self.quiver.index_of(name)
    }

    /// The arrow skeleton.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Reachability in the arrow skeleton.
    pub fn reach(&self) -> &Order {
        &self.reach
    }

    #[inline]
    pub fn hom(&self, x: VertexId, y: VertexId) -> bool {
        self.hom[x].contains(y)
    }

    /// `{ y : hom(x, y) = 1 }`, the support of the projective `P_x`.
    pub fn hom_from(&self, x: VertexId) -> VertexSet {
        self.hom[x]
    }

    /// `{ x : hom(x, y) = 1 }`, the support of the injective `I_y`.
    pub fn hom_to(&self, y: VertexId) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&x| self.hom[x].contains(y))
            .collect()
    }

    pub fn hom_rows(&self) -> &[VertexSet] {
        &self.hom
    }

    /// Pairs joined by a skeleton path whose hom space vanishes.
    pub fn zero_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for x in 0..self.vertex_count() {
            for y in self.reach.down_set(x).difference(self.hom[x]).iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Zero pairs not implied by a zero pair on a shorter interval.
    pub fn minimal_zero_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let zeros = self.zero_pairs();
        zeros
            .iter()
            .copied()
            .filter(|&(x, y)| {
                !zeros
                    .iter()
                    .any(|&(s, t)| (s, t) != (x, y) && self.reach.geq(x, s) && self.reach.geq(t, y))
            })
            .collect()
    }

    pub fn sources(&self) -> VertexSet {
        self.quiver.sources()
    }

    pub fn sinks(&self) -> VertexSet {
        self.quiver.sinks()
    }

    /// The full subcategory on `keep`, i.e. `End(⊕_{x ∈ keep} P_x)`, with
    /// vertices renumbered in increasing order of `keep`.
    pub fn full_subcategory(&self, keep: VertexSet) -> Result<SchurianAlgebra> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        if !keep.is_subset(self.vertices()) {
            return Err(Error::UnknownVertex(format!(
                "{:?}",
                keep.difference(self.vertices())
            )));
        }
        let old = keep.to_vec();
        let labels: Vec<String> = old.iter().map(|&v| self.label(v).to_string()).collect();
        let hom = old
            .iter()
            .map(|&x| {
                old.iter()
                    .enumerate()
                    .filter(|(_, &y)| self.hom(x, y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let name = format!("{}[{}]", self.name, labels.join(","));
        SchurianAlgebra::from_hom(name, labels, hom)
    }

    /// `{ k : i ⇝ k ⇝ j }`, or `{i, j}` when there is no such path.
    pub fn convex_hull_vertices(&self, i: VertexId, j: VertexId) -> VertexSet {
        let up = self.reach.up_sets();
        let hull = self.reach.down_set(i).intersection(up[j]);
        if hull.is_empty() {
            VertexSet::from_iter([i, j])
        } else {
            hull
        }
    }

    pub fn convex_hull(&self, i: VertexId, j: VertexId) -> SchurianAlgebra {
        self.full_subcategory(self.convex_hull_vertices(i, j))
            .expect("hull is nonempty")
    }

    pub fn opposite(&self) -> SchurianAlgebra {
        let n = self.vertex_count();
        let hom = (0..n).map(|y| self.hom_to(y)).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        SchurianAlgebra::from_hom(name, self.labels().to_vec(), hom)
            .expect("transposed support is valid")
    }

    /// The quotient by the idempotents of `kill`: a hom space survives when some
    /// skeleton path between its endpoints avoids `kill`.
    pub fn kill_vertices(&self, kill: VertexSet) -> Result<SchurianAlgebra> {
        let keep = self.vertices().difference(kill);
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let sub = self.quiver.induced(keep);
        let avoid = sub.reachability()?;
        let old = keep.to_vec();
        let hom = (0..old.len())
            .map(|a| {
                (0..old.len())
                    .filter(|&b| avoid.geq(a, b) && self.hom(old[a], old[b]))
                    .collect()
            })
            .collect();
        let name = format!(
            "{}/{:?}",
            self.name,
            kill.iter().map(|v| self.label(v)).collect::<Vec<_>>()
        );
        SchurianAlgebra::from_hom(name, sub.labels().to_vec(), hom)
    }

    /// Number of minimal relations from `x` to `y`: the dimension of
    /// `I(x,y) / (rad·I + I·rad)(x,y)` inside the path space `kQ(x,y)`,
    /// where `I` is the kernel of `kQ → A`.
    pub fn minimal_relation_count(&self, x: VertexId, y: VertexId) -> usize {
        let mut table = PathTable::new(&self.quiver, &self.reach);
        self.minimal_relation_count_with(&mut table, x, y, true)
    }

    /// Dimension of the relations `x ⇝ y` modulo those of the form `ρ·α` with
    /// `ρ` a relation ending at a predecessor of `y` and `α` an arrow.
    pub fn terminal_relation_count(&self, x: VertexId, y: VertexId) -> usize {
        let mut table = PathTable::new(&self.quiver, &self.reach);
        self.minimal_relation_count_with(&mut table, x, y, false)
    }

    fn minimal_relation_count_with(
        &self,
        table: &mut PathTable<'_>,
        x: VertexId,
        y: VertexId,
        two_sided: bool,
    ) -> usize {
        if x == y || !self.reach.geq(x, y) {
            return 0;
        }
        let paths = table.paths(x, y).to_vec();
        let ideal_dim = paths.len() - usize::from(self.hom(x, y));
        if ideal_dim == 0 {
            return 0;
        }
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let width = paths.len();
        let mut generators: Vec<Vec<Scalar>> = Vec::new();
        let mut push_relations = |pieces: &[Path], nonzero: bool, join: &dyn Fn(&Path) -> Path| {
            let ids: Vec<usize> = pieces.iter().map(|p| index[&join(p)]).collect();
            if nonzero {
                for &k in &ids[1..] {
                    let mut v = vec![Scalar::zero(); width];
                    v[ids[0]] = Scalar::one();
                    v[k] = -Scalar::one();
                    generators.push(v);
                }
            } else {
                for &k in &ids {
                    let mut v = vec![Scalar::zero(); width];
                    v[k] = Scalar::one();
                    generators.push(v);
                }
            }
        };
        for a in self.quiver.successors(x).iter() {
            if !two_sided || a == y || !self.reach.geq(a, y) {
                continue;
            }
            let tails = table.paths(a, y).to_vec();
            push_relations(&tails, self.hom(a, y), &|p: &Path| {
                let mut vs = vec![x];
                vs.extend_from_slice(p.vertices());
                Path::from_vertices(vs)
            });
        }
        for b in self.quiver.predecessors(y).iter() {
            if b == x || !self.reach.geq(x, b) {
                continue;
            }
            let heads = table.paths(x, b).to_vec();
            push_relations(&heads, self.hom(x, b), &|p: &Path| {
                let mut vs = p.vertices().to_vec();
                vs.push(y);
                Path::from_vertices(vs)
            });
        }
        let rank = if generators.is_empty() {
            0
        } else {
            Matrix::from_row_vectors(width, &generators).rank()
        };
        ideal_dim - rank
    }

    /// Pairs `(x, y)` carrying minimal relations, with their multiplicities.
    pub fn minimal_relations(&self) -> Vec<((VertexId, VertexId), usize)> {
        let mut table = PathTable::new(&self.quiver, &self.reach);
        let mut out = Vec::new();
        for x in 0..self.vertex_count() {
            for y in self.reach.down_set(x).iter() {
                let m = self.minimal_relation_count_with(&mut table, x, y, true);
                if m > 0 {
                    out.push(((x, y), m));
                }
            }
        }
        out
    }

    pub fn minimal_relation_pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.minimal_relations()
            .into_iter()
            .map(|(p, _)| p)
            .collect()
    }

    /// True when no hom space vanishes along a skeleton path.
    pub fn is_incidence_algebra(&self) -> bool {
        (0..self.vertex_count()).all(|x| self.reach.down_set(x) == self.hom[x])
    }

    /// Renders the support as `{x->y, ...}` using vertex labels.
    pub fn describe(&self) -> String {
        let arrows: Vec<String> = self
            .quiver
            .arrows()
            .iter()
            .map(|&(s, t)| format!("{}->{}", self.label(s), self.label(t)))
            .collect();
        let zeros: Vec<String> = self
            .minimal_zero_pairs()
            .iter()
            .map(|&(s, t)| format!("{}~>{}", self.label(s), self.label(t)))
            .collect();
        format!("arrows [{}] zeros [{}]", arrows.join(" "), zeros.join(" "))
    }
}

/// Whether the algebra is known to be strongly simply connected: the poset
/// has no convex crown and the zero relations avoid every irreducible contour.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Validity {
    Certified,
    Uncertified {
        /// Zero pairs realized by a path lying inside an irreducible contour.
        zero_pairs: Vec<(VertexId, VertexId)>,
        /// A convex crown, in cycle order.
        crown: Option<Vec<VertexId>>,
    },
}

impl Validity {
    pub fn is_certified(&self) -> bool {
        matches!(self, Validity::Certified)
    }
}

/// The quotient of the incidence algebra of a poset by monomial zero relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceQuotient {
    hasse: Quiver,
    order: Order,
    zeros: Vec<(VertexId, VertexId)>,
    validity: Validity,
    algebra: SchurianAlgebra,
}

impl IncidenceQuotient {
    pub fn from_poset(
        name: impl Into<String>,
        hasse: Quiver,
        zeros: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let order = hasse.reachability()?;
        for &(x, y) in hasse.arrows() {
            if hasse
                .successors(x)
                .iter()
                .any(|z| z != y && order.geq(z, y))
            {
                return Err(Error::NotAHasseDiagram(
                    hasse.label(x).to_string(),
                    hasse.label(y).to_string(),
                ));
            }
        }
        let n = hasse.vertex_count();
        let mut zs = Vec::with_capacity(zeros.len());
        for &(s, t) in zeros {
            if s >= n || t >= n {
                return Err(Error::UnknownVertex(s.max(t).to_string()));
            }
            if s == t || !order.geq(s, t) || hasse.has_arrow(s, t) {
                return Err(Error::MalformedRelation(
                    hasse.label(s).to_string(),
                    hasse.label(t).to_string(),
                ));
            }
            zs.push((s, t));
        }
        zs.sort_unstable();
        zs.dedup();

        let hom: Vec<VertexSet> = (0..n)
            .map(|x| {
                order
                    .down_set(x)
                    .iter()
                    .filter(|&y| !zs.iter().any(|&(s, t)| order.geq(x, s) && order.geq(t, y)))
                    .collect()
            })
            .collect();
        let algebra = SchurianAlgebra::from_hom(name, hasse.labels().to_vec(), hom)?;
        let validity = certify(&hasse, &order, &zs);
        Ok(IncidenceQuotient {
            hasse,
            order,
            zeros: zs,
            validity,
            algebra,
        })
    }

    /// Builds from vertices named `1..=n`, 1-based arrows and zero pairs.
    pub fn numbered(
        name: impl Into<String>,
        n: usize,
        arrows: &[(usize, usize)],
        zeros: &[(usize, usize)],
    ) -> Result<Self> {
        let hasse = Quiver::numbered(n, arrows)?;
        let zs: Vec<_> = zeros
            .iter()
            .map(|&(s, t)| (s.wrapping_sub(1), t.wrapping_sub(1)))
            .collect();
        IncidenceQuotient::from_poset(name, hasse, &zs)
    }

    pub fn hasse(&self) -> &Quiver {
        &self.hasse
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn zeros(&self) -> &[(VertexId, VertexId)] {
        &self.zeros
    }

    pub fn validity(&self) -> &Validity {
        &self.validity
    }

    pub fn is_certified(&self) -> bool {
        self.validity.is_certified()
    }

    pub fn algebra(&self) -> &SchurianAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> SchurianAlgebra {
        self.algebra
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    pub fn hom_support(&self, x: VertexId, y: VertexId) -> bool {
        self.algebra.hom(x, y)
    }

    pub fn opposite(&self) -> IncidenceQuotient {
        let zs: Vec<_> = self.zeros.iter().map(|&(s, t)| (t, s)).collect();
        let name = self.algebra.opposite().name().to_string();
        IncidenceQuotient::from_poset(name, self.hasse.opposite(), &zs)
            .expect("opposite of a valid quotient is valid")
    }
}

fn certify(hasse: &Quiver, order: &Order, zeros: &[(VertexId, VertexId)]) -> Validity {
    let minimal: Vec<_> = zeros
        .iter()
        .copied()
        .filter(|&(x, y)| {
            !zeros
                .iter()
                .any(|&(s, t)| (s, t) != (x, y) && order.geq(x, s) && order.geq(t, y))
        })
        .collect();
    let crown = order.find_convex_crown();
    let contours = if minimal.is_empty() {
        Vec::new()
    } else {
        hasse.irreducible_contours()
    };
    let mut table = PathTable::new(hasse, order);
    let mut bad = Vec::new();
    for (s, t) in minimal {
        let inside = table.paths(s, t).iter().any(|w| {
            contours
                .iter()
                .any(|c| c.p.contains_subpath(w) || c.q.contains_subpath(w))
        });
        if inside {
            bad.push((s, t));
        }
    }
    if bad.is_empty() && crown.is_none() {
        Validity::Certified
    } else {
        Validity::Uncertified {
            zero_pairs: bad,
            crown,
        }
    }
}

/// Worked examples used across tests, documentation and the CLI.
pub mod fixtures {
    use super::IncidenceQuotient;

    /// Six vertices, one commutative square in the middle, zeros `1~>4`, `3~>6`.
    pub fn square_with_zeros() -> IncidenceQuotient {
        IncidenceQuotient::numbered(
            "square-with-zeros",
            6,
            &[(1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6)],
            &[(1, 4), (3, 6)],
        )
        .expect("fixture is valid")
    }

    /// Linear chain on six vertices with zeros `1~>3`, `4~>6`.
    pub fn chain_with_split_zeros() -> IncidenceQuotient {
        IncidenceQuotient::numbered(
            "split-zero-chain",
            6,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
            &[(1, 3), (4, 6)],
        )
        .expect("fixture is valid")
    }

    /// Chain `1->2->3->4` with overlapping zeros `1~>3`, `2~>4`.
    pub fn chain_with_overlapping_zeros() -> IncidenceQuotient {
        IncidenceQuotient::numbered("A1", 4, &[(1, 2), (2, 3), (3, 4)], &[(1, 3), (2, 4)])
            .expect("fixture is valid")
    }

    /// Incidence algebra of the commutative square `1 -> 2,3 -> 4`.
    pub fn commutative_square() -> IncidenceQuotient {
        IncidenceQuotient::numbered("square", 4, &[(1, 2), (1, 3), (2, 4), (3, 4)], &[])
            .expect("fixture is valid")
    }

    /// Linear chain `1 -> ... -> n` without relations.
    pub fn chain(n: usize) -> IncidenceQuotient {
        let arrows: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        IncidenceQuotient::numbered(format!("chain{n}"), n, &arrows, &[]).expect("fixture is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().map(|v| v - 1).collect()
    }

    #[test]
    fn fixtures_are_certified() {
        assert!(square_with_zeros().is_certified());
        assert!(chain_with_split_zeros().is_certified());
        assert!(chain_with_overlapping_zeros().is_certified());
        assert!(commutative_square().is_certified());
    }

    #[test]
    fn relation_on_an_arrow_is_malformed() {
        let err = IncidenceQuotient::numbered("x", 3, &[(1, 2), (2, 3)], &[(1, 2)]).unwrap_err();
        assert!(matches!(err, Error::MalformedRelation(..)));
        let err = IncidenceQuotient::numbered("x", 3, &[(1, 2), (2, 3)], &[(3, 1)]).unwrap_err();
        assert!(matches!(err, Error::MalformedRelation(..)));
    }

    #[test]
    fn bypass_is_rejected() {
        let err = IncidenceQuotient::numbered("x", 3, &[(1, 2), (2, 3), (1, 3)], &[]).unwrap_err();
        assert!(matches!(err, Error::NotAHasseDiagram(..)));
    }

    #[test]
    fn hom_support_examples() {
        let a = square_with_zeros();
        assert!(!a.hom_support(0, 4));
        assert!(a.hom_support(1, 4));
        assert!(!a.hom_support(1, 5));
        for x in 0..6 {
            assert!(a.hom_support(x, x));
        }
    }

    #[test]
    fn skeleton_equals_hasse_for_quotients() {
        for q in [
            square_with_zeros(),
            chain_with_split_zeros(),
            commutative_square(),
        ] {
            assert_eq!(q.algebra().quiver().arrows(), q.hasse().arrows());
        }
    }

    #[test]
    fn full_subcategory_examples() {
        let a = square_with_zeros();
        let b = a.algebra().full_subcategory(set(&[1, 2, 5, 6])).unwrap();
        assert_eq!(b.quiver().arrows(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(b.minimal_zero_pairs(), vec![(0, 2), (1, 3)]);
        let whole = a
            .algebra()
            .full_subcategory(a.algebra().vertices())
            .unwrap();
        assert_eq!(whole.hom_rows(), a.algebra().hom_rows());
        assert_eq!(whole.quiver().arrows(), a.algebra().quiver().arrows());
        assert_eq!(
            a.algebra().full_subcategory(VertexSet::EMPTY),
            Err(Error::EmptySelection)
        );
        let c = chain_with_split_zeros()
            .algebra()
            .full_subcategory(set(&[1, 2, 5, 6]))
            .unwrap();
        assert_eq!(c.minimal_zero_pairs(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn convex_hulls() {
        let a = square_with_zeros();
        assert_eq!(a.algebra().convex_hull_vertices(0, 5), VertexSet::full(6));
        assert_eq!(
            chain_with_split_zeros()
                .algebra()
                .convex_hull_vertices(1, 4),
            set(&[2, 3, 4, 5])
        );
        assert_eq!(chain(3).algebra().convex_hull_vertices(0, 0), set(&[1]));
        assert_eq!(chain(3).algebra().convex_hull_vertices(2, 0), set(&[1, 3]));
    }

    #[test]
    fn opposite_transposes() {
        let a = chain_with_overlapping_zeros().into_algebra();
        let op = a.opposite();
        assert_eq!(op.minimal_zero_pairs(), vec![(2, 0), (3, 1)]);
        assert_eq!(op.opposite(), a);
    }

    #[test]
    fn kill_vertices_examples() {
        let c = chain(3).into_algebra();
        let k = c.kill_vertices(set(&[2])).unwrap();
        assert_eq!(k.vertex_count(), 2);
        assert!(!k.hom(0, 1));
        assert!(k.quiver().arrows().is_empty());

        let sq = commutative_square().into_algebra();
        let k = sq.kill_vertices(set(&[2])).unwrap();
        assert_eq!(k.labels(), &["1", "3", "4"]);
        assert_eq!(k.quiver().arrows(), &[(0, 1), (1, 2)]);
        assert!(k.hom(0, 2));

        assert_eq!(
            sq.kill_vertices(VertexSet::EMPTY).unwrap().hom_rows(),
            sq.hom_rows()
        );
        assert_eq!(sq.kill_vertices(sq.vertices()), Err(Error::EmptySelection));
    }

    #[test]
    fn minimal_relation_examples() {
        let a1 = chain_with_overlapping_zeros().into_algebra();
        assert_eq!(a1.minimal_relation_pairs(), vec![(0, 2), (1, 3)]);
        let sq = commutative_square().into_algebra();
        assert_eq!(sq.minimal_relation_pairs(), vec![(0, 3)]);
        assert!(chain(5).algebra().minimal_relation_pairs().is_empty());
        // the implied zero 1~>4 in the A1 chain is not minimal
        assert_eq!(a1.minimal_relation_count(0, 3), 0);
    }

    #[test]
    fn sources_and_sinks() {
        let a = square_with_zeros();
        assert_eq!(a.algebra().sources(), set(&[1]));
        assert_eq!(a.algebra().sinks(), set(&[6]));
        let one = chain(1).into_algebra();
        assert_eq!(one.sources(), one.sinks());
    }

    #[test]
    fn invalid_supports_are_rejected() {
        let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        // a->b->c->d with hom(a,d)=1 but hom(a,c)=0
        let bad = vec![set(&[1, 2, 4]), set(&[2, 3]), set(&[3, 4]), set(&[4])];
        assert!(matches!(
            SchurianAlgebra::from_hom("bad", labels.clone(), bad),
            Err(Error::InvalidHomSupport(_))
        ));
        let cyclic = vec![set(&[1, 2]), set(&[1, 2]), set(&[3]), set(&[4])];
        assert!(matches!(
            SchurianAlgebra::from_hom("cyc", labels, cyclic),
            Err(Error::InvalidHomSupport(_))
        ));
    }

    #[test]
    fn zero_inside_irreducible_contour_is_uncertified() {
        // square with an extra tail: zero along one side of the square
        let q = IncidenceQuotient::numbered(
            "u",
            5,
            &[(1, 2), (1, 3), (2, 4), (3, 4), (4, 5)],
            &[(1, 4)],
        )
        .unwrap();
        assert_eq!(
            q.validity(),
            &Validity::Uncertified {
                zero_pairs: vec![(0, 3)],
                crown: None
            }
        );
    }
}
