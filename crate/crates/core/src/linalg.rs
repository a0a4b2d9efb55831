//! Dense exact matrices over the rationals.
//!
//! Everything the homology engine needs reduces to reduced row-echelon form:
//! ranks, nullspaces, subspace sums and coordinates with respect to an
//! echelon basis. Pivots are chosen as the first nonzero entry, so every
//! basis produced here is deterministic.

use num_rational::Rational64;
use num_traits::{One, Zero};
use std::fmt;

pub type Scalar = Rational64;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&e| Scalar::from_integer(e)).collect(),
        }
    }

    /// Builds a matrix whose rows are the given vectors (all of length `cols`).
    pub fn from_row_vectors(cols: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(vectors.len() * cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            data.extend_from_slice(v);
        }
        Matrix {
            rows: vectors.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_column_vectors(rows: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, vectors.len());
        for (c, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = *x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Reduces in place to reduced row-echelon form and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                let v = self[(row, c)];
                self[(row, c)] = v * inv;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self[(r, col)];
                if f.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = self[(row, c)];
                    if !v.is_zero() {
                        self[(r, c)] -= f * v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref_in_place().len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `k^ambient`, kept as an echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::from_row_vectors(ambient, vectors);
        let pivots = m.rref_in_place();
        let basis = Matrix::from_row_vectors(
            ambient,
            &(0..pivots.len())
                .map(|r| m.row(r).to_vec())
                .collect::<Vec<_>>(),
        );
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim())
            .map(|r| self.basis.row(r).to_vec())
            .collect()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p]).collect();
        // reconstruct and compare
        let mut recon = vec![Scalar::zero(); self.ambient];
        for (r, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in recon.iter_mut().zip(self.basis.row(r)) {
                *x += c * b;
            }
        }
        if recon.as_slice() == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient, &vs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    /// Greedily picks vectors of `self` (in echelon order) that extend `inner` to a
    /// basis of `inner + self`. When `inner ⊆ self` these span a complement.
    pub fn complement_of(&self, inner: &Subspace) -> Vec<Vec<Scalar>> {
        let mut acc = inner.clone();
        let mut picked = Vec::new();
        for v in self.basis_vectors() {
            if !acc.contains(&v) {
                acc = Subspace::span(self.ambient, &{
                    let mut vs = acc.basis_vectors();
                    vs.push(v.clone());
                    vs
                });
                picked.push(v);
            }
        }
        picked
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}
