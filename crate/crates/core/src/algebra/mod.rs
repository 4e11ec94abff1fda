//! Finite-dimensional unital associative algebras given by structure constants.
//!
//! Elements are plain coordinate vectors with respect to the algebra's basis
//! `e_0, ..., e_{d-1}`; the product is `e_i e_j = sum_k c[i][j][k] e_k`.

mod enumerate;
mod ideals;
mod idempotent;

pub use enumerate::{check_cap, AllVectors, ProjectivePoints, DEFAULT_CAP};
pub use ideals::{enumerate_subspaces, subspace_count};
pub use idempotent::{Corner, IdempotentReport, PeirceSplit};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Residue, SpanBuilder, Subspace};

/// Structure-constant algebra over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    /// `structure[(i * dim + j) * dim + k] = c[i][j][k]`.
    structure: Vec<Residue>,
    unit: Vec<Residue>,
}

impl Algebra {
    /// Builds and validates an algebra.
    pub fn new(field: PrimeField, dim: usize, structure: Vec<Residue>, unit: Vec<Residue>) -> Result<Self> {
        let a = Self::from_parts_unchecked(field, dim, structure, unit)?;
        a.validate()?;
        Ok(a)
    }

    /// Checks only shapes and residue ranges; the axioms are left to
    /// [`Algebra::validate`].
    pub fn from_parts_unchecked(
        field: PrimeField,
        dim: usize,
        structure: Vec<Residue>,
        unit: Vec<Residue>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: structure.len() });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: unit.len() });
        }
        for &x in structure.iter().chain(&unit) {
            field.check(x as u64)?;
        }
        Ok(Self { field, dim, structure, unit })
    }

    /// Builds an algebra from a product rule on basis indices.
    pub(crate) fn from_basis_products(
        field: PrimeField,
        dim: usize,
        unit: Vec<Residue>,
        mut product: impl FnMut(usize, usize) -> Vec<Residue>,
    ) -> Result<Self> {
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                debug_assert_eq!(v.len(), dim);
                structure.extend(v);
            }
        }
        Self::new(field, dim, structure, unit)
    }

    /// Checks the unit axioms on every basis vector and associativity on
    /// every basis triple; by multilinearity that is sufficient.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitAxiomViolated(i));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul_by_basis_right(ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_by_basis_left(i, jk);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }
    #[inline]
    pub fn unit(&self) -> &[Residue] {
        &self.unit
    }
    #[inline]
    pub fn structure(&self) -> &[Residue] {
        &self.structure
    }
    #[inline]
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Residue {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i e_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[Residue] {
        let d = self.dim;
        &self.structure[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Residue> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero(&self) -> Vec<Residue> {
        vec![0; self.dim]
    }

    fn check_element(&self, a: &[Residue]) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: a.len() });
        }
        for &x in a {
            self.field.check(x as u64)?;
        }
        Ok(())
    }

    pub fn multiply(&self, a: &[Residue], b: &[Residue]) -> Result<Vec<Residue>> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    /// Product without argument checks.
    pub(crate) fn mul(&self, a: &[Residue], b: &[Residue]) -> Vec<Residue> {
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                self.field.axpy(&mut out, self.field.mul(ai, bj), self.basis_product(i, j));
            }
        }
        out
    }

    fn mul_by_basis_right(&self, a: &[Residue], k: usize) -> Vec<Residue> {
        let mut out = vec![0; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            self.field.axpy(&mut out, ai, self.basis_product(i, k));
        }
        out
    }

    fn mul_by_basis_left(&self, i: usize, b: &[Residue]) -> Vec<Residue> {
        let mut out = vec![0; self.dim];
        for (j, &bj) in b.iter().enumerate() {
            self.field.axpy(&mut out, bj, self.basis_product(i, j));
        }
        out
    }

    /// Matrix of `x -> a x`.
    pub fn left_mul_matrix(&self, a: &[Residue]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            let col = self.mul_by_basis_right(a, i);
            for (k, &x) in col.iter().enumerate() {
                m.set(k, i, x);
            }
        }
        m
    }

    /// Matrix of `x -> x a`. Its column space is the principal left ideal `Aa`.
    pub fn right_mul_matrix(&self, a: &[Residue]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            let col = self.mul_by_basis_left(i, a);
            for (k, &x) in col.iter().enumerate() {
                m.set(k, i, x);
            }
        }
        m
    }

    pub fn add(&self, a: &[Residue], b: &[Residue]) -> Vec<Residue> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Residue], b: &[Residue]) -> Vec<Residue> {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    /// `1 - a`.
    pub fn complement(&self, a: &[Residue]) -> Vec<Residue> {
        self.sub(&self.unit, a)
    }

    pub fn is_idempotent(&self, e: &[Residue]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_zero(&self, a: &[Residue]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// `span{ left * e_i * right : i }`.
    pub fn sandwich_span(&self, left: &[Residue], right: &[Residue]) -> Subspace {
        let mut sb = SpanBuilder::new(self.field, self.dim);
        for i in 0..self.dim {
            let inner = self.mul_by_basis_left(i, right);
            sb.add_vector(&self.mul(left, &inner)).expect("dimension matches");
        }
        sb.to_subspace()
    }

    /// The principal left ideal `Aa = span{e_i a}`.
    pub fn principal_left_ideal(&self, a: &[Residue]) -> Subspace {
        self.right_mul_matrix(a).column_space()
    }

    /// Matrix of the multiplication map `A ⊗ A -> A` with `a ⊗ b` vectorized
    /// at index `i * dim + j`.
    pub fn multiplication_matrix(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                for (k, &x) in self.basis_product(i, j).iter().enumerate() {
                    m.set(k, i * d + j, x);
                }
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }
}
