//! Incremental span accumulation.
//!
//! The builder keeps a fully reduced row-echelon basis at all times, so its
//! state after any sequence of insertions depends only on the span, never on
//! the order. Over GF(2) rows are packed 64 coordinates per word and row
//! operations become word-wise XORs; other primes use dense residue rows.

use super::field::{PrimeField, Residue};
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Rows {
    Dense(Vec<Vec<Residue>>),
    Packed(Vec<Vec<u64>>),
}

/// Incrementally built subspace of `GF(p)^n`.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: PrimeField,
    ambient_dim: usize,
    /// Sorted ascending; `rows[i]` has its leading 1 at `pivots[i]`.
    pivots: Vec<usize>,
    rows: Rows,
    scratch: Vec<u64>,
}

#[inline]
fn words(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
fn bit(row: &[u64], i: usize) -> bool {
    row[i >> 6] >> (i & 63) & 1 == 1
}

impl SpanBuilder {
    pub fn new(field: PrimeField, ambient_dim: usize) -> Self {
        let rows = if field.is_binary() { Rows::Packed(Vec::new()) } else { Rows::Dense(Vec::new()) };
        Self { field, ambient_dim, pivots: Vec::new(), rows, scratch: vec![0; words(ambient_dim)] }
    }

    /// Seeds a builder with an existing subspace.
    pub fn from_subspace(s: &Subspace) -> Self {
        let mut sb = Self::new(s.field(), s.ambient_dim());
        for v in s.basis_vectors() {
            sb.add_vector(v).expect("dimension matches");
        }
        sb
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    fn check(&self, v: &[Residue]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }

    /// Adds `v` to the span; returns whether the rank increased.
    pub fn add_vector(&mut self, v: &[Residue]) -> Result<bool> {
        self.check(v)?;
        Ok(match &mut self.rows {
            Rows::Dense(rows) => add_dense(self.field, &mut self.pivots, rows, v.to_vec()),
            Rows::Packed(rows) => {
                let mut packed = vec![0u64; words(self.ambient_dim)];
                for (i, &x) in v.iter().enumerate() {
                    if x & 1 == 1 {
                        packed[i >> 6] |= 1 << (i & 63);
                    }
                }
                add_packed(&mut self.pivots, rows, packed)
            }
        })
    }

    /// Adds the outer product `left ⊗ right`, i.e. the vector with entry
    /// `left[r] * right[s]` at position `r * right.len() + s`.
    pub fn add_outer(&mut self, left: &[Residue], right: &[Residue]) -> Result<bool> {
        let n = left.len() * right.len();
        if n != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: n });
        }
        match &mut self.rows {
            Rows::Packed(rows) => {
                let mut packed = std::mem::take(&mut self.scratch);
                packed.iter_mut().for_each(|w| *w = 0);
                let s = right.len();
                for (r, &a) in left.iter().enumerate() {
                    if a & 1 == 0 {
                        continue;
                    }
                    for (j, &b) in right.iter().enumerate() {
                        if b & 1 == 1 {
                            let i = r * s + j;
                            packed[i >> 6] |= 1 << (i & 63);
                        }
                    }
                }
                let added = add_packed(&mut self.pivots, rows, packed.clone());
                self.scratch = packed;
                Ok(added)
            }
            Rows::Dense(rows) => {
                let mut v = Vec::with_capacity(n);
                for &a in left {
                    v.extend(right.iter().map(|&b| self.field.mul(a, b)));
                }
                Ok(add_dense(self.field, &mut self.pivots, rows, v))
            }
        }
    }

    pub fn contains(&self, v: &[Residue]) -> Result<bool> {
        self.check(v)?;
        Ok(match &self.rows {
            Rows::Dense(rows) => {
                let mut v = v.to_vec();
                reduce_dense(self.field, &self.pivots, rows, &mut v);
                v.iter().all(|&x| x == 0)
            }
            Rows::Packed(rows) => {
                let mut packed = vec![0u64; words(self.ambient_dim)];
                for (i, &x) in v.iter().enumerate() {
                    if x & 1 == 1 {
                        packed[i >> 6] |= 1 << (i & 63);
                    }
                }
                reduce_packed(&self.pivots, rows, &mut packed);
                packed.iter().all(|&w| w == 0)
            }
        })
    }

    /// Adds every basis row of `other` into `self`.
    pub fn merge(&mut self, other: &SpanBuilder) -> Result<()> {
        if other.ambient_dim != self.ambient_dim || other.field != self.field {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        for v in other.rows_dense() {
            self.add_vector(&v)?;
        }
        Ok(())
    }

    fn rows_dense(&self) -> Vec<Vec<Residue>> {
        match &self.rows {
            Rows::Dense(rows) => rows.clone(),
            Rows::Packed(rows) => {
                rows.iter().map(|r| (0..self.ambient_dim).map(|i| bit(r, i) as Residue).collect()).collect()
            }
        }
    }

    pub fn to_subspace(&self) -> Subspace {
        let data: Vec<Residue> = self.rows_dense().into_iter().flatten().collect();
        let basis = Matrix::from_raw(self.field, self.rank(), self.ambient_dim, data);
        Subspace::from_rref_unchecked(basis, self.pivots.clone())
    }
}

fn reduce_dense(f: PrimeField, pivots: &[usize], rows: &[Vec<Residue>], v: &mut [Residue]) {
    for (&pc, row) in pivots.iter().zip(rows) {
        let c = v[pc];
        if c != 0 {
            f.axpy(v, f.neg(c), row);
        }
    }
}

fn add_dense(f: PrimeField, pivots: &mut Vec<usize>, rows: &mut Vec<Vec<Residue>>, mut v: Vec<Residue>) -> bool {
    reduce_dense(f, pivots, rows, &mut v);
    let Some(lead) = v.iter().position(|&x| x != 0) else {
        return false;
    };
    let inv = f.inv(v[lead]).expect("nonzero lead");
    f.scale(inv, &mut v);
    for row in rows.iter_mut() {
        let c = row[lead];
        if c != 0 {
            f.axpy(row, f.neg(c), &v);
        }
    }
    let at = pivots.partition_point(|&p| p < lead);
    pivots.insert(at, lead);
    rows.insert(at, v);
    true
}

fn reduce_packed(pivots: &[usize], rows: &[Vec<u64>], v: &mut [u64]) {
    for (&pc, row) in pivots.iter().zip(rows) {
        if bit(v, pc) {
            for (w, &r) in v.iter_mut().zip(row) {
                *w ^= r;
            }
        }
    }
}

fn add_packed(pivots: &mut Vec<usize>, rows: &mut Vec<Vec<u64>>, mut v: Vec<u64>) -> bool {
    reduce_packed(pivots, rows, &mut v);
    let Some(lead) = v.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    else {
        return false;
    };
    for row in rows.iter_mut() {
        if bit(row, lead) {
            for (w, &x) in row.iter_mut().zip(&v) {
                *w ^= x;
            }
        }
    }
    let at = pivots.partition_point(|&p| p < lead);
    pivots.insert(at, lead);
    rows.insert(at, v);
    true
}
