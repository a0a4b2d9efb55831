//! Finite acyclic quivers, reachability orders, paths and contours.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTICES};
use std::collections::HashMap;

/// A finite quiver without loops or multiple arrows, with a vertex name table.
///
/// Acyclicity and the Hasse (bypass-free) property are checked by predicates
/// rather than at construction, so raw arrow sets can be inspected too.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<(VertexId, VertexId)>,
    succ: Vec<VertexSet>,
    pred: Vec<VertexSet>,
}

impl Quiver {
    pub fn new(labels: Vec<String>, arrows: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut succ = vec![VertexSet::EMPTY; n];
        let mut pred = vec![VertexSet::EMPTY; n];
        for &(s, t) in arrows {
            if s >= n {
                return Err(Error::UnknownVertex(s.to_string()));
            }
            if t >= n {
                return Err(Error::UnknownVertex(t.to_string()));
            }
            if s == t {
                return Err(Error::LoopArrow(labels[s].clone()));
            }
            if succ[s].contains(t) {
                return Err(Error::DuplicateArrow(labels[s].clone(), labels[t].clone()));
            }
            succ[s].insert(t);
            pred[t].insert(s);
        }
        let mut sorted = arrows.to_vec();
        sorted.sort_unstable();
        Ok(Quiver {
            labels,
            arrows: sorted,
            succ,
            pred,
        })
    }

    /// Quiver on vertices named `1..=n`.
    pub fn numbered(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let zero_based: Vec<_> = arrows
            .iter()
            .map(|&(s, t)| (s.wrapping_sub(1), t.wrapping_sub(1)))
            .collect();
        Quiver::new(labels, &zero_based)
    }

    /// Quiver from named vertices and named arrows.
    pub fn from_names(names: &[&str], arrows: &[(&str, &str)]) -> Result<Self> {
        let labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |name: &str| {
            labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut ids = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            ids.push((idx(s)?, idx(t)?));
        }
        Quiver::new(labels, &ids)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, name: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn arrows(&self) -> &[(VertexId, VertexId)] {
        &self.arrows
    }

    /// Position of the arrow `s -> t` in [`Quiver::arrows`].
    pub fn arrow_index(&self, s: VertexId, t: VertexId) -> Option<usize> {
        self.arrows.binary_search(&(s, t)).ok()
    }

    pub fn successors(&self, v: VertexId) -> VertexSet {
        self.succ[v]
    }

    pub fn predecessors(&self, v: VertexId) -> VertexSet {
        self.pred[v]
    }

    pub fn has_arrow(&self, s: VertexId, t: VertexId) -> bool {
        self.succ[s].contains(t)
    }

    pub fn sources(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.pred[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.succ[v].is_empty())
            .collect()
    }

    /// Topological order (sources first), or the vertex of a cycle.
    pub fn topological_order(&self) -> Result<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = self.pred.iter().map(|p| p.len()).collect();
        let mut ready: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).rev().collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for w in self.succ[v].iter().collect::<Vec<_>>().into_iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            let stuck = (0..n).find(|&v| indeg[v] > 0).unwrap_or(0);
            Err(Error::TriangularityViolation(self.labels[stuck].clone()))
        }
    }

    pub fn is_triangular(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// `x ≥ y` iff there is a directed path `x ⇝ y`.
    pub fn reachability(&self) -> Result<Order> {
        let order = self.topological_order()?;
        let mut down = vec![VertexSet::EMPTY; self.vertex_count()];
        for &v in order.iter().rev() {
            let mut d = VertexSet::singleton(v);
            for w in self.succ[v] {
                d = d.union(down[w]);
            }
            down[v] = d;
        }
        Ok(Order { down })
    }

    /// True iff some arrow `x -> y` coexists with a longer path `x ⇝ y`.
    pub fn has_bypass(&self) -> bool {
        let Ok(reach) = self.reachability() else {
            // cyclic quivers: a path back around the cycle always exists
            return !self.arrows.is_empty();
        };
        self.arrows
            .iter()
            .any(|&(x, y)| self.succ[x].iter().any(|z| z != y && reach.geq(z, y)))
    }

    pub fn opposite(&self) -> Quiver {
        let arrows: Vec<_> = self.arrows.iter().map(|&(s, t)| (t, s)).collect();
        Quiver::new(self.labels.clone(), &arrows).expect("reversing arrows preserves validity")
    }

    /// The quiver induced on `keep` (arrows with both ends kept), reindexed densely
    /// in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Quiver {
        let old: Vec<VertexId> = keep.to_vec();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let labels = old.iter().map(|&v| self.labels[v].clone()).collect();
        let arrows: Vec<_> = self
            .arrows
            .iter()
            .filter(|&&(s, t)| keep.contains(s) && keep.contains(t))
            .map(|&(s, t)| (new_index[s], new_index[t]))
            .collect();
        Quiver::new(labels, &arrows).expect("induced subquiver is valid")
    }

    /// True iff every directed path between two members of `set` stays inside it.
    pub fn is_convex(&self, set: VertexSet) -> bool {
        let Ok(reach) = self.reachability() else {
            return false;
        };
        let up = reach.up_sets();
        set.iter().all(|x| {
            set.iter().all(|y| {
                if x == y || !reach.geq(x, y) {
                    return true;
                }
                let between = reach.down[x].intersection(up[y]);
                between.is_subset(set)
            })
        })
    }

    /// All directed paths `x ⇝ y`, in lexicographic order of vertex sequences.
    pub fn paths(&self, x: VertexId, y: VertexId) -> Vec<Path> {
        let Ok(reach) = self.reachability() else {
            return Vec::new();
        };
        let mut table = PathTable::new(self, &reach);
        table.paths(x, y).to_vec()
    }

    /// All contours: unordered pairs of distinct parallel paths of positive length,
    /// grouped by endpoint pair.
    pub fn contours(&self) -> Vec<Contour> {
        let Ok(reach) = self.reachability() else {
            return Vec::new();
        };
        let mut table = PathTable::new(self, &reach);
        let mut out = Vec::new();
        for x in 0..self.vertex_count() {
            for y in reach.down[x].iter() {
                if y == x {
                    continue;
                }
                let ps = table.paths(x, y).to_vec();
                for i in 0..ps.len() {
                    for j in i + 1..ps.len() {
                        out.push(Contour {
                            p: ps[i].clone(),
                            q: ps[j].clone(),
                        });
                    }
                }
            }
        }
        out
    }

    /// A contour is irreducible when no chain of pairwise interlaced parallel paths
    /// joins its two paths. Decided by connectivity of the interlacing graph on all
    /// paths between the contour's endpoints.
    pub fn is_irreducible(&self, c: &Contour) -> bool {
        let paths = self.paths(c.source(), c.target());
        let comps = interlacing_components(&paths);
        let pi = paths.iter().position(|p| *p == c.p);
        let qi = paths.iter().position(|p| *p == c.q);
        match (pi, qi) {
            (Some(a), Some(b)) => comps[a] != comps[b],
            _ => false,
        }
    }

    /// Irreducible contours, computed with one interlacing graph per endpoint pair.
    pub fn irreducible_contours(&self) -> Vec<Contour> {
        let Ok(reach) = self.reachability() else {
            return Vec::new();
        };
        let mut table = PathTable::new(self, &reach);
        let mut out = Vec::new();
        for x in 0..self.vertex_count() {
            for y in reach.down[x].iter() {
                if y == x {
                    continue;
                }
                let ps = table.paths(x, y).to_vec();
                if ps.len() < 2 {
                    continue;
                }
                let comps = interlacing_components(&ps);
                for i in 0..ps.len() {
                    for j in i + 1..ps.len() {
                        if comps[i] != comps[j] {
                            out.push(Contour {
                                p: ps[i].clone(),
                                q: ps[j].clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }
}

fn interlacing_components(paths: &[Path]) -> Vec<usize> {
    let n = paths.len();
    let interiors: Vec<VertexSet> = paths.iter().map(|p| p.interior()).collect();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut [usize], mut a: usize) -> usize {
        while comp[a] != a {
            comp[a] = comp[comp[a]];
            a = comp[a];
        }
        a
    }
    for i in 0..n {
        for j in i + 1..n {
            if !interiors[i].intersection(interiors[j]).is_empty() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|i| find(&mut comp, i)).collect()
}

/// Memoized path enumeration for one quiver.
pub struct PathTable<'a> {
    quiver: &'a Quiver,
    reach: &'a Order,
    memo: HashMap<(VertexId, VertexId), Vec<Path>>,
}

impl<'a> PathTable<'a> {
    pub fn new(quiver: &'a Quiver, reach: &'a Order) -> Self {
        PathTable {
            quiver,
            reach,
            memo: HashMap::new(),
        }
    }

    pub fn paths(&mut self, x: VertexId, y: VertexId) -> &[Path] {
        if !self.memo.contains_key(&(x, y)) {
            let computed = if x == y {
                vec![Path::trivial(x)]
            } else if !self.reach.geq(x, y) {
                Vec::new()
            } else {
                let mut out = Vec::new();
                for z in self.quiver.successors(x) {
                    if !self.reach.geq(z, y) {
                        continue;
                    }
                    for tail in self.paths(z, y).to_vec() {
                        let mut vs = Vec::with_capacity(tail.vertices.len() + 1);
                        vs.push(x);
                        vs.extend_from_slice(&tail.vertices);
                        out.push(Path { vertices: vs });
                    }
                }
                out
            };
            self.memo.insert((x, y), computed);
        }
        &self.memo[&(x, y)]
    }
}

/// A directed path, stored as its vertex sequence (arrows are determined by
/// consecutive vertices since there are no multiple arrows).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { vertices: vec![v] }
    }

    pub fn from_vertices(vertices: Vec<VertexId>) -> Self {
        assert!(!vertices.is_empty());
        Path { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn target(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn interior(&self) -> VertexSet {
        if self.vertices.len() <= 2 {
            return VertexSet::EMPTY;
        }
        self.vertices[1..self.vertices.len() - 1]
            .iter()
            .copied()
            .collect()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// True iff `other` occurs as a contiguous piece of this path.
    pub fn contains_subpath(&self, other: &Path) -> bool {
        self.vertices
            .windows(other.vertices.len())
            .any(|w| w == other.vertices.as_slice())
    }
}

/// A pair of distinct parallel paths of positive length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Contour {
    pub p: Path,
    pub q: Path,
}

impl Contour {
    pub fn new(p: Path, q: Path) -> Option<Self> {
        if p.is_empty()
            || q.is_empty()
            || p == q
            || p.source() != q.source()
            || p.target() != q.target()
        {
            return None;
        }
        Some(Contour { p, q })
    }

    pub fn source(&self) -> VertexId {
        self.p.source()
    }

    pub fn target(&self) -> VertexId {
        self.p.target()
    }

    /// The two paths share a vertex besides their endpoints.
    pub fn is_interlaced(&self) -> bool {
        !self.p.interior().intersection(self.q.interior()).is_empty()
    }
}

/// A reflexive order relation given by down-sets: `down[x] = { y : x ≥ y }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Order {
    down: Vec<VertexSet>,
}

impl Order {
    /// Closes the given pairs `(x, y)` meaning `x ≥ y` under reflexivity and
    /// transitivity, rejecting anything that is not antisymmetric.
    pub fn from_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut down: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::UnknownVertex(x.max(y).to_string()));
            }
            down[x].insert(y);
        }
        // Warshall over bitsets
        for k in 0..n {
            for x in 0..n {
                if down[x].contains(k) {
                    down[x] = down[x].union(down[k]);
                }
            }
        }
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    return Err(Error::NotAPartialOrder(format!(
                        "{} and {} are mutually comparable",
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(Order { down })
    }

    pub fn from_down_sets(down: Vec<VertexSet>) -> Self {
        Order { down }
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    #[inline]
    pub fn geq(&self, x: VertexId, y: VertexId) -> bool {
        self.down[x].contains(y)
    }

    pub fn down_set(&self, x: VertexId) -> VertexSet {
        self.down[x]
    }

    pub fn down_sets(&self) -> &[VertexSet] {
        &self.down
    }

    pub fn up_sets(&self) -> Vec<VertexSet> {
        let n = self.down.len();
        let mut up = vec![VertexSet::EMPTY; n];
        for x in 0..n {
            for y in self.down[x] {
                up[y].insert(x);
            }
        }
        up
    }

    /// All pairs `(x, y)` with `x ≥ y`, reflexive pairs included.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (x, d) in self.down.iter().enumerate() {
            for y in d.iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Covering pairs `x > y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for x in 0..self.down.len() {
            let strict = {
                let mut d = self.down[x];
                d.remove(x);
                d
            };
            for y in strict.iter() {
                let between = strict.iter().any(|z| z != y && self.down[z].contains(y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn opposite(&self) -> Order {
        Order {
            down: self.up_sets(),
        }
    }

    pub fn comparable(&self, x: VertexId, y: VertexId) -> bool {
        self.geq(x, y) || self.geq(y, x)
    }

    /// A convex crown: elements `b₁ < a₁ > b₂ < a₂ > … < aₙ > b₁` with `n ≥ 2`,
    /// every listed comparison a cover and no other comparisons among them.
    /// Returned in cycle order starting from a lower element.
    pub fn find_convex_crown(&self) -> Option<Vec<VertexId>> {
        let n = self.down.len();
        let mut lower = vec![VertexSet::EMPTY; n];
        let mut upper = vec![VertexSet::EMPTY; n];
        for (x, y) in self.covers() {
            lower[x].insert(y);
            upper[y].insert(x);
        }
        let mut path = Vec::new();
        (0..n).find_map(|b| {
            path.clear();
            path.push(b);
            self.extend_crown(&lower, &upper, &mut path)
        })
    }

    fn extend_crown(
        &self,
        lower: &[VertexSet],
        upper: &[VertexSet],
        path: &mut Vec<VertexId>,
    ) -> Option<Vec<VertexId>> {
        let start = path[0];
        let last = *path.last().unwrap();
        let going_up = path.len() % 2 == 1;
        let next = if going_up { upper[last] } else { lower[last] };
        'candidates: for v in next.iter() {
            // the start is the least-indexed lower element
            if path.contains(&v) || (!going_up && v < start) {
                continue;
            }
            let mut closes = false;
            for &w in &path[..path.len() - 1] {
                if self.comparable(v, w) {
                    if w == start && going_up && path.len() >= 3 && lower[v].contains(start) {
                        closes = true;
                    } else {
                        continue 'candidates;
                    }
                }
            }
            path.push(v);
            if closes {
                return Some(path.clone());
            }
            if let Some(found) = self.extend_crown(lower, upper, path) {
                return Some(found);
            }
            path.pop();
        }
        None
    }

    /// The order restricted to `keep`, reindexed densely.
    pub fn restrict(&self, keep: VertexSet) -> Order {
        let old = keep.to_vec();
        let down = old
            .iter()
            .map(|&x| {
                old.iter()
                    .enumerate()
                    .filter(|(_, &y)| self.down[x].contains(y))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Order { down }
    }
}

/// Minimal quiver whose reachability is the given order.
pub fn hasse_reduction(labels: Vec<String>, pairs: &[(VertexId, VertexId)]) -> Result<Quiver> {
    let order = Order::from_pairs(labels.len(), pairs)?;
    Quiver::new(labels, &order.covers())
}

/// All posets on `n` elements up to isomorphism, each as an [`Order`] on `0..n`.
///
/// Every poset arises from one on `n - 1` elements by adjoining a new maximal
/// element above some down-closed set; duplicates are removed with a canonical
/// form computed by refinement plus exhaustive relabelling within classes.
pub fn enumerate_posets(n: usize) -> Vec<Order> {
    let mut level: Vec<Order> = vec![Order { down: Vec::new() }];
    for size in 1..=n {
        let mut seen: HashMap<Vec<u64>, Order> = HashMap::new();
        for p in &level {
            let m = size - 1;
            for mask in 0u64..(1u64 << m) {
                let below = VertexSet(mask);
                // must be a down-set
                if !below.iter().all(|y| p.down[y].is_subset(below)) {
                    continue;
                }
                let mut down = p.down.clone();
                down.push(below.union(VertexSet::singleton(m)));
                let q = Order { down };
                let key = crate::iso::canonical_order_key(&q);
                seen.entry(key).or_insert(q);
            }
        }
        let mut next: Vec<(Vec<u64>, Order)> = seen.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, o)| o).collect();
    }
    level
}
