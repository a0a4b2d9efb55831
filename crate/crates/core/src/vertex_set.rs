use serde::{Deserialize, Serialize};
use std::fmt;

/// Maximum number of vertices an algebra may carry; subsets are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Dense vertex index into a quiver's name table.
pub type VertexId = usize;

/// A subset of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<VertexId> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// Iterates all subsets of `universe` with exactly `k` elements, in increasing
/// lexicographic order of their sorted element lists.
pub fn subsets_of_size(universe: VertexSet, k: usize) -> Vec<VertexSet> {
    let elems = universe.to_vec();
    let mut out = Vec::new();
    if k > elems.len() {
        return out;
    }
    let n = elems.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(VertexSet::from_iter(idx.iter().map(|&i| elems[i])));
        let Some(p) = (0..k).rev().find(|&p| idx[p] < p + n - k) else {
            return out;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}
