//! Idempotents, left semicentrality, Peirce corners and the triangular split
//! induced by a left semicentral idempotent.

use super::enumerate::AllVectors;
use super::Algebra;
use crate::constructions::triangular;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Residue, Subspace};
use crate::module::Bimodule;

/// All idempotents found by exhaustive search, with the left semicentral
/// ones singled out (`Ae = eAe`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub idempotents: Vec<Vec<Residue>>,
    pub left_semicentral: Vec<Vec<Residue>>,
    /// True when `p^dim` exceeded the cap and only a prefix of the element
    /// list was searched.
    pub truncated: bool,
}

/// The corner algebra `eAe` with unit `e`, together with its embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub algebra: Algebra,
    /// `dim(A) x dim(eAe)`; column `t` is the `t`-th corner basis element.
    pub embed: Matrix,
    pub space: Subspace,
}

impl Corner {
    /// Corner coordinates of an element of `A`, if it lies in the corner.
    pub fn to_local(&self, v: &[Residue]) -> Option<Vec<Residue>> {
        self.space.coordinates(v).ok().flatten()
    }

    pub fn to_ambient(&self, c: &[Residue]) -> Vec<Residue> {
        self.embed.mul_vec(c).expect("corner coordinates")
    }
}

/// The three Peirce pieces of `A` at a nontrivial left semicentral `e`:
/// `eAe`, the `(eAe, (1-e)A(1-e))`-bimodule `eA(1-e)`, and `(1-e)A(1-e)`.
#[derive(Clone, Debug)]
pub struct PeirceSplit {
    pub idempotent: Vec<Residue>,
    pub corner: Corner,
    pub offdiag: Subspace,
    pub bimodule: Bimodule,
    pub co_corner: Corner,
}

impl Algebra {
    /// Exhaustively searches for idempotents among the first `cap` elements
    /// in lexicographic order.
    pub fn idempotents(&self, cap: u64) -> IdempotentReport {
        let total = self.field().power_count(self.dim());
        let truncated = total.is_none_or(|n| n > cap);
        let limit = if truncated { cap } else { total.unwrap_or(cap) };
        let idempotents: Vec<Vec<Residue>> =
            AllVectors::new(self.field(), self.dim()).take(limit as usize).filter(|e| self.is_idempotent(e)).collect();
        let left_semicentral = idempotents.iter().filter(|e| self.left_semicentral_unchecked(e)).cloned().collect();
        IdempotentReport { idempotents, left_semicentral, truncated }
    }

    fn left_semicentral_unchecked(&self, e: &[Residue]) -> bool {
        self.sandwich_span(self.unit(), e) == self.sandwich_span(e, e)
    }

    /// `Ae = eAe` as subspaces.
    pub fn is_left_semicentral(&self, e: &[Residue]) -> Result<bool> {
        self.multiply(e, e)?;
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        Ok(self.left_semicentral_unchecked(e))
    }

    /// The corner algebra `eAe`. Its basis is the reduced basis of
    /// `span{e e_i e}` and its unit is `e`.
    pub fn corner_algebra(&self, e: &[Residue]) -> Result<Corner> {
        self.multiply(e, e)?;
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        if self.is_zero(e) {
            return Err(Error::ZeroIdempotent);
        }
        let space = self.sandwich_span(e, e);
        let basis: Vec<Vec<Residue>> = space.basis_vectors().map(<[Residue]>::to_vec).collect();
        let k = basis.len();
        let embed = Matrix::from_columns(self.field(), self.dim(), &basis)?;
        let unit = space.coordinates(e)?.expect("e lies in eAe");
        let algebra = Algebra::from_basis_products(self.field(), k, unit, |s, t| {
            let prod = self.mul(&basis[s], &basis[t]);
            space.coordinates(&prod).expect("shape").expect("corner is closed")
        })?;
        Ok(Corner { algebra, embed, space })
    }

    /// Splits `A` along a nontrivial left semicentral idempotent.
    pub fn peirce_split(&self, e: &[Residue]) -> Result<PeirceSplit> {
        self.multiply(e, e)?;
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        if self.is_zero(e) || e == self.unit() {
            return Err(Error::NontrivialRequired);
        }
        let f = self.complement(e);
        if !self.left_semicentral_unchecked(e) || self.sandwich_span(&f, e).dim() != 0 {
            return Err(Error::NotLeftSemicentral);
        }
        let corner = self.corner_algebra(e)?;
        let co_corner = self.corner_algebra(&f)?;
        let offdiag = self.sandwich_span(e, &f);
        let m_basis: Vec<Vec<Residue>> = offdiag.basis_vectors().map(<[Residue]>::to_vec).collect();
        let to_m = |v: Vec<Residue>| offdiag.coordinates(&v).expect("shape").expect("eA(1-e) is a bimodule");
        let bimodule = Bimodule::from_actions(
            corner.algebra.clone(),
            co_corner.algebra.clone(),
            m_basis.len(),
            |i, j| to_m(self.mul(&corner.to_ambient(&unit_vec(corner.algebra.dim(), i)), &m_basis[j])),
            |i, j| to_m(self.mul(&m_basis[i], &co_corner.to_ambient(&unit_vec(co_corner.algebra.dim(), j)))),
        )?;
        Ok(PeirceSplit { idempotent: e.to_vec(), corner, offdiag, bimodule, co_corner })
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Residue> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl PeirceSplit {
    /// Square matrix whose columns are the corner, off-diagonal and
    /// co-corner bases in that order. It maps block coordinates `(a, m, b)`
    /// to coordinates in `A`.
    pub fn change_of_basis(&self) -> Matrix {
        let mut cols: Vec<Vec<Residue>> = Vec::new();
        cols.extend(self.corner.space.basis_vectors().map(<[Residue]>::to_vec));
        cols.extend(self.offdiag.basis_vectors().map(<[Residue]>::to_vec));
        cols.extend(self.co_corner.space.basis_vectors().map(<[Residue]>::to_vec));
        let d = self.corner.embed.rows();
        Matrix::from_columns(self.corner.embed.field(), d, &cols).expect("columns have length dim")
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.corner.algebra.dim(), self.bimodule.dim(), self.co_corner.algebra.dim())
    }

    /// Reassembles `Tri(eAe, eA(1-e), (1-e)A(1-e))` and checks that the
    /// change of basis is a unital algebra isomorphism onto `a`.
    pub fn verify_reassembly(&self, a: &Algebra) -> Result<bool> {
        let (t, _) = triangular(&self.corner.algebra, &self.bimodule, &self.co_corner.algebra)?;
        let p = self.change_of_basis();
        if p.rows() != a.dim() || p.cols() != t.dim() || p.inverse().is_none() {
            return Ok(false);
        }
        if p.mul_vec(t.unit())? != a.unit() {
            return Ok(false);
        }
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                let lhs = p.mul_vec(t.basis_product(i, j))?;
                let rhs = a.mul(&p.column(i), &p.column(j));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matn, scalar_field, tn, u_dual_numbers};

    fn gf2() -> Algebra {
        scalar_field(2).unwrap()
    }

    /// Brute-force oracle: `Ae == eAe` by listing all products.
    fn semicentral_by_products(a: &Algebra, e: &[u32]) -> bool {
        let all: Vec<Vec<u32>> = AllVectors::new(a.field(), a.dim()).collect();
        let ae: std::collections::BTreeSet<Vec<u32>> = all.iter().map(|x| a.mul(x, e)).collect();
        let eae: std::collections::BTreeSet<Vec<u32>> = all.iter().map(|x| a.mul(&a.mul(e, x), e)).collect();
        ae == eae
    }

    #[test]
    fn t2_idempotents() {
        // T2(GF(2)) basis: E11, E12, E22
        let t2 = tn(&gf2(), 2).unwrap();
        let rep = t2.idempotents(1 << 20);
        assert!(!rep.truncated);
        assert_eq!(rep.idempotents.len(), 6);
        let mut sc = rep.left_semicentral.clone();
        sc.sort();
        let mut expected = vec![vec![0, 0, 0], vec![1, 0, 1], vec![1, 0, 0], vec![1, 1, 0]];
        expected.sort();
        assert_eq!(sc, expected);
        for e in &rep.idempotents {
            assert_eq!(t2.is_left_semicentral(e).unwrap(), semicentral_by_products(&t2, e));
        }
    }

    #[test]
    fn field_idempotents() {
        let f3 = scalar_field(3).unwrap();
        let rep = f3.idempotents(1 << 20);
        assert_eq!(rep.idempotents, vec![vec![0], vec![1]]);
    }

    #[test]
    fn m2_unit_matrix_not_semicentral() {
        let m2 = matn(&gf2(), 2).unwrap();
        let e11 = vec![1, 0, 0, 0];
        assert!(!m2.is_left_semicentral(&e11).unwrap());
        assert_eq!(m2.sandwich_span(m2.unit(), &e11).dim(), 2);
        assert_eq!(m2.sandwich_span(&e11, &e11).dim(), 1);
    }

    #[test]
    fn truncation_is_reported() {
        let m2 = matn(&gf2(), 2).unwrap();
        let rep = m2.idempotents(8);
        assert!(rep.truncated);
    }

    #[test]
    fn corners() {
        let t2 = tn(&gf2(), 2).unwrap();
        let c = t2.corner_algebra(&[1, 0, 0]).unwrap();
        assert_eq!(c.algebra.dim(), 1);
        let whole = t2.corner_algebra(t2.unit()).unwrap();
        assert_eq!(whole.algebra, t2);
        let m2 = matn(&gf2(), 2).unwrap();
        assert_eq!(m2.corner_algebra(&[1, 0, 0, 0]).unwrap().algebra.dim(), 1);
        assert_eq!(t2.corner_algebra(&[0, 1, 0]), Err(Error::NotIdempotent));
        assert_eq!(t2.corner_algebra(&[0, 0, 0]), Err(Error::ZeroIdempotent));
    }

    #[test]
    fn peirce_split_dims_and_reassembly() {
        let t2 = tn(&gf2(), 2).unwrap();
        let s = t2.peirce_split(&[1, 0, 0]).unwrap();
        assert_eq!(s.dims(), (1, 1, 1));
        assert!(s.verify_reassembly(&t2).unwrap());

        let t3 = tn(&gf2(), 3).unwrap();
        let mut e11 = vec![0; 6];
        e11[0] = 1;
        let s = t3.peirce_split(&e11).unwrap();
        assert_eq!(s.dims(), (1, 2, 3));
        assert!(s.verify_reassembly(&t3).unwrap());

        assert_eq!(t2.peirce_split(t2.unit()).unwrap_err(), Error::NontrivialRequired);
        assert_eq!(t2.peirce_split(&[0, 0, 0]).unwrap_err(), Error::NontrivialRequired);
        // E22 is idempotent but not left semicentral
        assert_eq!(t2.peirce_split(&[0, 0, 1]).unwrap_err(), Error::NotLeftSemicentral);
    }

    #[test]
    fn every_semicentral_idempotent_kills_the_lower_corner() {
        for a in [tn(&gf2(), 3).unwrap(), u_dual_numbers(3).unwrap(), matn(&gf2(), 2).unwrap()] {
            for e in a.idempotents(1 << 20).left_semicentral {
                let f = a.complement(&e);
                assert_eq!(a.sandwich_span(&f, &e).dim(), 0);
                if !a.is_zero(&e) {
                    a.corner_algebra(&e).unwrap().algebra.validate().unwrap();
                }
            }
        }
    }
}
