use super::field::{PrimeField, Residue};
use super::matrix::Matrix;
use super::span::SpanBuilder;
use crate::error::{Error, Result};

/// A subspace of `GF(p)^n` held as its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces of the same ambient space are
/// equal exactly when their basis matrices are entry-identical; the derived
/// `PartialEq` is therefore subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::identity(field, ambient_dim), pivots: (0..ambient_dim).collect() }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        let n = m.cols();
        let data = r.reduced.data()[..r.rank * n].to_vec();
        Self { ambient_dim: n, basis: Matrix::from_raw(m.field(), r.rank, n, data), pivots: r.pivot_cols }
    }

    pub fn from_spanning(field: PrimeField, ambient_dim: usize, vectors: &[Vec<Residue>]) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient_dim, vectors)?;
        Ok(Self::from_matrix(&m))
    }

    /// Wraps a matrix already known to be in reduced row-echelon form with no
    /// zero rows.
    pub(crate) fn from_rref_unchecked(basis: Matrix, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(basis.rows(), pivots.len());
        Self { ambient_dim: basis.cols(), basis, pivots }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    #[inline]
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Residue]> + '_ {
        self.basis.row_vectors()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: len });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. For a reduced basis the coordinates are read off the
    /// pivot columns.
    pub fn coordinates(&self, v: &[Residue]) -> Result<Option<Vec<Residue>>> {
        self.check_len(v.len())?;
        let coords: Vec<Residue> = self.pivots.iter().map(|&c| v[c]).collect();
        let back = self.basis.vec_mul(&coords)?;
        Ok((back == v).then_some(coords))
    }

    pub fn contains(&self, v: &[Residue]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Is `self` a subspace of `other`?
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_len(self.ambient_dim)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        let mut sb = SpanBuilder::from_subspace(self);
        for v in other.basis_vectors() {
            sb.add_vector(v)?;
        }
        Ok(sb.to_subspace())
    }

    /// `{c : c . v = 0 for every v in self}`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.nullspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        let constraints = self.annihilator().basis().vstack(other.annihilator().basis())?;
        Ok(constraints.nullspace())
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        let imgs = self.basis_vectors().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Subspace::from_spanning(self.field(), m.rows(), &imgs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let f = gf(2);
        let s = Subspace::from_spanning(f, 2, &[vec![1, 1]]).unwrap();
        assert!(s.contains(&[1, 1]).unwrap());
        assert!(!s.contains(&[1, 0]).unwrap());
        let plane = Subspace::from_spanning(f, 2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(plane, Subspace::full(f, 2));
        assert!(s.contains(&[1]).is_err());
    }

    #[test]
    fn containment_of_spans() {
        let f = gf(3);
        let small = Subspace::from_spanning(f, 2, &[vec![1, 2]]).unwrap();
        let big = Subspace::from_spanning(f, 2, &[vec![1, 2], vec![0, 1]]).unwrap();
        assert!(small.is_subspace_of(&big).unwrap());
        assert!(!big.is_subspace_of(&small).unwrap());
        assert_eq!(small.sum(&big).unwrap(), big);
    }

    #[test]
    fn intersection_and_annihilator() {
        let f = gf(5);
        let a = Subspace::from_spanning(f, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = Subspace::from_spanning(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::from_spanning(f, 3, &[vec![0, 1, 0]]).unwrap());
        assert_eq!(a.annihilator(), Subspace::from_spanning(f, 3, &[vec![0, 0, 1]]).unwrap());
    }

    #[test]
    fn coordinates_use_pivots() {
        let f = gf(7);
        let s = Subspace::from_spanning(f, 3, &[vec![1, 2, 3], vec![0, 1, 4]]).unwrap();
        let w = {
            let mut w = s.basis().row(0).to_vec();
            f.scale(3, &mut w);
            f.axpy(&mut w, 5, s.basis().row(1));
            w
        };
        assert_eq!(s.coordinates(&w).unwrap(), Some(vec![3, 5]));
    }
}
