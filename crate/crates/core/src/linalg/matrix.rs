use std::fmt;

use super::field::{PrimeField, Residue};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<Residue>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    /// Same shape as the input; the first `rank` rows are nonzero.
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<Residue>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        for &x in &data {
            field.check(x as u64)?;
        }
        Ok(Self { field, rows, cols, data })
    }

    pub(crate) fn from_raw(field: PrimeField, rows: usize, cols: usize, data: Vec<Residue>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.modulus()));
        Self { field, rows, cols, data }
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from equally long rows.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<Residue>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<Residue>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m.data[i * cols + j] = field.check(x as u64)?;
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[Residue] {
        &self.data
    }
    pub fn into_data(self) -> Vec<Residue> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Residue {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Residue) {
        debug_assert!(x < self.field.modulus());
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Residue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Residue]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Residue> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Residue]) -> Result<Vec<Residue>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self.row_vectors().map(|r| self.field.dot(r, v)).collect())
    }

    /// `v * self` for a row vector `v`.
    pub fn vec_mul(&self, v: &[Residue]) -> Result<Vec<Residue>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(i));
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::AlgebraMismatch);
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                self.field.axpy(dst, self.get(i, k), rhs.row(k));
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, rhs: &Matrix, op: impl Fn(PrimeField, Residue, Residue) -> Residue) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::AlgebraMismatch);
        }
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: rhs.rows * rhs.cols });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| op(self.field, a, b)).collect();
        Ok(Matrix::from_raw(self.field, self.rows, self.cols, data))
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(rhs.row(i));
        }
        Ok(Matrix::from_raw(self.field, self.rows, cols, data))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix::from_raw(self.field, self.rows + rhs.rows, self.cols, data))
    }

    /// Reduced row-echelon form. Pivots are taken as the first nonzero entry
    /// at or below the current row, so the procedure is deterministic.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            f.scale(inv, &mut m.data[r * cols..(r + 1) * cols]);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor != 0 {
                    f.axpy(&mut m.data[i * cols..(i + 1) * cols], f.neg(factor), &pivot_row);
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        Rref { rank: r, reduced: m, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let Rref { rank, reduced, pivot_cols } = self.rref();
        let f = self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(n - rank);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; n];
            v[free] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = f.neg(reduced.get(i, free));
            }
            basis.push(v);
        }
        Subspace::from_spanning(f, n, &basis).expect("dimensions agree")
    }

    /// `{c : c * self = 0}`. A vector `v` lies in the column space of `self`
    /// exactly when every basis row of this subspace annihilates it.
    pub fn left_nullspace(&self) -> Subspace {
        self.transpose().nullspace()
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_matrix(&self.transpose())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(self)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n)).ok()?;
        let Rref { reduced, pivot_cols, .. } = aug.rref();
        if pivot_cols.len() < n || pivot_cols[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&reduced.row(i)[n..]);
        }
        Some(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}[", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(p: u64, rows: &[&[u32]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(gf(p), cols, &rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(mat(2, &[&[1, 1], &[1, 1]]).rank(), 1);
        let id = Matrix::identity(gf(3), 3);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
        // second row is twice the first mod 5
        assert_eq!(mat(5, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        let ns = mat(2, &[&[1, 1]]).nullspace();
        assert_eq!(ns.dim(), 1);
        assert_eq!(ns.basis().row(0), &[1, 1]);
        assert_eq!(Matrix::identity(gf(7), 4).nullspace().dim(), 0);
        assert_eq!(mat(5, &[&[1, 2, 3]]).nullspace().dim(), 2);
    }

    #[test]
    fn left_nullspace_examples() {
        let ln = mat(2, &[&[1], &[0]]).left_nullspace();
        assert_eq!(ln.dim(), 1);
        assert_eq!(ln.basis().row(0), &[0, 1]);
        assert_eq!(Matrix::identity(gf(3), 3).left_nullspace().dim(), 0);
        // columns (1,1,0) and (0,1,1): the only annihilating row is (1,1,1),
        // found by checking all 8 candidate rows.
        let m = Matrix::from_columns(gf(2), 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let brute: Vec<Vec<u32>> = (1u32..8)
            .map(|bits| vec![bits >> 2 & 1, bits >> 1 & 1, bits & 1])
            .filter(|c| m.vec_mul(c).unwrap().iter().all(|&x| x == 0))
            .collect();
        assert_eq!(brute, vec![vec![1, 1, 1]]);
        let ln = m.left_nullspace();
        assert_eq!(ln.dim(), 1);
        assert_eq!(ln.basis().row(0), &[1, 1, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(7, &[&[2, 1], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(gf(7), 2));
        assert!(mat(5, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rejects_unreduced_entries() {
        assert!(Matrix::new(gf(3), 1, 2, vec![1, 3]).is_err());
        assert!(Matrix::new(gf(3), 1, 2, vec![1]).is_err());
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zeros(gf(2), 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace().dim(), 3);
        let m = Matrix::zeros(gf(2), 3, 0);
        assert_eq!(m.left_nullspace().dim(), 3);
        assert_eq!(m.column_space().dim(), 0);
    }
}
