//! Generated subalgebras, two-sided ideals and the full lattice of left
//! ideals (the latter by brute force over every subspace).

use super::enumerate::{check_cap, AllVectors};
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Residue, SpanBuilder, Subspace};

impl Algebra {
    /// Smallest subalgebra containing `1` and `gens`: the span is closed
    /// under products of basis pairs until a fixed point is reached.
    pub fn subalgebra_generated_by(&self, gens: &[Vec<Residue>]) -> Result<Subspace> {
        let mut sb = SpanBuilder::new(self.field(), self.dim());
        sb.add_vector(self.unit())?;
        for g in gens {
            self.multiply(g, g)?;
            sb.add_vector(g)?;
        }
        loop {
            let current = sb.to_subspace();
            let basis: Vec<&[Residue]> = current.basis_vectors().collect();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    grew |= sb.add_vector(&self.mul(x, y))?;
                }
            }
            if !grew {
                return Ok(current);
            }
        }
    }

    /// Whether the idempotents generate `A` as an algebra.
    pub fn is_idempotent_generated(&self, cap: u64) -> Result<bool> {
        check_cap(self.field(), self.dim(), cap)?;
        let idems = self.idempotents(cap).idempotents;
        Ok(self.subalgebra_generated_by(&idems)?.dim() == self.dim())
    }

    /// The two-sided ideal `span{e_i v e_j}`.
    pub fn two_sided_ideal(&self, v: &[Residue]) -> Result<Subspace> {
        self.multiply(v, v)?;
        let mut sb = SpanBuilder::new(self.field(), self.dim());
        for i in 0..self.dim() {
            let left = self.mul(&self.basis_vector(i), v);
            for j in 0..self.dim() {
                sb.add_vector(&self.mul(&left, &self.basis_vector(j)))?;
            }
        }
        Ok(sb.to_subspace())
    }

    /// `e_i J ⊆ J` for every basis element.
    pub fn is_left_ideal(&self, j: &Subspace) -> Result<bool> {
        if j.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: j.ambient_dim() });
        }
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            for v in j.basis_vectors() {
                if !j.contains(&self.mul(&e, v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_right_ideal(&self, j: &Subspace) -> Result<bool> {
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            for v in j.basis_vectors() {
                if !j.contains(&self.mul(v, &e))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every left ideal of `A`, found by testing every subspace of the
    /// underlying vector space. `cap` bounds the number of subspaces.
    pub fn enumerate_left_ideals(&self, cap: u64) -> Result<Vec<Subspace>> {
        let subspaces = enumerate_subspaces(self.field(), self.dim(), cap)?;
        let mut out = Vec::new();
        for s in subspaces {
            if self.is_left_ideal(&s)? {
                out.push(s);
            }
        }
        Ok(out)
    }
}

/// Number of subspaces of `GF(p)^n` (sum of Gaussian binomials).
pub fn subspace_count(field: PrimeField, n: usize) -> u128 {
    let q = field.modulus() as u128;
    // Gaussian binomials via the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
    let mut row: Vec<u128> = vec![1];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for k in 1..m {
            next[k] = row[k - 1].saturating_add(q.saturating_pow(k as u32).saturating_mul(row[k]));
        }
        row = next;
    }
    row.into_iter().fold(0u128, u128::saturating_add)
}

/// Every subspace of `GF(p)^n`, each produced directly in reduced
/// row-echelon form: for each pivot set, every assignment of the free
/// entries to the right of the pivots.
pub fn enumerate_subspaces(field: PrimeField, n: usize, cap: u64) -> Result<Vec<Subspace>> {
    let count = subspace_count(field, n);
    if count > cap as u128 {
        return Err(Error::LatticeCapExceeded { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0u64..(1u64 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
        let k = pivots.len();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| ((pc + 1)..n).filter(|c| mask >> c & 1 == 0).map(move |c| (r, c)))
            .collect();
        for assignment in AllVectors::new(field, free.len()) {
            let mut m = Matrix::zeros(field, k, n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, 1);
            }
            for (&(r, c), &x) in free.iter().zip(&assignment) {
                m.set(r, c, x);
            }
            out.push(Subspace::from_rref_unchecked(m, pivots.clone()));
        }
    }
    out.sort_by(|a, b| (a.dim(), a.basis().data()).cmp(&(b.dim(), b.basis().data())));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matn, scalar_field, u_dual_numbers};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(subspace_count(gf(2), 2), 5);
        assert_eq!(subspace_count(gf(2), 4), 67);
        assert_eq!(subspace_count(gf(2), 6), 2825);
        assert_eq!(subspace_count(gf(3), 2), 6);
        for (p, n) in [(2u64, 5usize), (3, 3), (5, 2)] {
            let all = enumerate_subspaces(gf(p), n, 1 << 20).unwrap();
            assert_eq!(all.len() as u128, subspace_count(gf(p), n));
            let distinct: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn subspace_enumeration_matches_spans_of_pairs() {
        // independent route for GF(2)^3: every subspace is spanned by at most
        // three vectors, so spans of all triples give the lattice
        let f = gf(2);
        let vecs: Vec<Vec<u32>> = AllVectors::new(f, 3).collect();
        let mut spans = std::collections::HashSet::new();
        for a in &vecs {
            for b in &vecs {
                for c in &vecs {
                    spans.insert(Subspace::from_spanning(f, 3, &[a.clone(), b.clone(), c.clone()]).unwrap());
                }
            }
        }
        let listed: std::collections::HashSet<_> = enumerate_subspaces(f, 3, 1000).unwrap().into_iter().collect();
        assert_eq!(spans, listed);
    }

    #[test]
    fn left_ideal_lattices() {
        let u = u_dual_numbers(2).unwrap();
        let ideals = u.enumerate_left_ideals(1000).unwrap();
        assert_eq!(ideals.len(), 3);
        assert!(ideals.contains(&Subspace::from_spanning(gf(2), 2, &[vec![0, 1]]).unwrap()));
        assert_eq!(scalar_field(2).unwrap().enumerate_left_ideals(10).unwrap().len(), 2);

        let m2 = matn(&scalar_field(2).unwrap(), 2).unwrap();
        let ideals = m2.enumerate_left_ideals(1000).unwrap();
        // brute-force reference: filter all 67 subspaces by closure under
        // left multiplication by every one of the 16 elements
        let all = enumerate_subspaces(gf(2), 4, 1000).unwrap();
        let elements: Vec<Vec<u32>> = AllVectors::new(gf(2), 4).collect();
        let closed: Vec<_> = all
            .into_iter()
            .filter(|s| {
                elements.iter().all(|x| {
                    AllVectors::new(gf(2), s.dim()).all(|c| {
                        let v = s.basis().vec_mul(&c).unwrap();
                        s.contains(&m2.mul(x, &v)).unwrap()
                    })
                })
            })
            .collect();
        assert_eq!(ideals, closed);
        // 0, the whole algebra, and one column-type ideal per line of GF(2)^2
        assert_eq!(ideals.len(), 5);
        assert!(matches!(m2.enumerate_left_ideals(10), Err(Error::LatticeCapExceeded { .. })));
    }

    #[test]
    fn generated_subalgebras() {
        let m2 = matn(&scalar_field(2).unwrap(), 2).unwrap();
        assert!(m2.is_idempotent_generated(1 << 20).unwrap());
        let u = u_dual_numbers(2).unwrap();
        assert!(!u.is_idempotent_generated(1 << 20).unwrap());
        assert_eq!(u.subalgebra_generated_by(&[]).unwrap().dim(), 1);
        assert!(scalar_field(2).unwrap().is_idempotent_generated(16).unwrap());
    }

    #[test]
    fn two_sided_ideals() {
        let u = u_dual_numbers(2).unwrap();
        assert_eq!(u.two_sided_ideal(u.unit()).unwrap().dim(), 2);
        let i = u.two_sided_ideal(&[0, 1]).unwrap();
        assert_eq!(i, Subspace::from_spanning(gf(2), 2, &[vec![0, 1]]).unwrap());
        let m2 = matn(&scalar_field(2).unwrap(), 2).unwrap();
        let i = m2.two_sided_ideal(&[1, 0, 0, 0]).unwrap();
        assert_eq!(i.dim(), 4);
        assert!(m2.is_left_ideal(&i).unwrap() && m2.is_right_ideal(&i).unwrap());
    }
}
