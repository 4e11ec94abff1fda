//! Deterministic enumeration of field vectors.

use crate::error::{Error, Result};
use crate::linalg::{PrimeField, Residue};

/// Default bound on `p^dim` for operations that enumerate elements.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Fails unless `p^dim <= cap`; returns `p^dim`.
pub fn check_cap(field: PrimeField, dim: usize, cap: u64) -> Result<u64> {
    match field.power_count(dim) {
        Some(n) if n <= cap => Ok(n),
        _ => Err(Error::EnumerationCapExceeded { p: field.modulus(), dim, cap }),
    }
}

/// All vectors of `GF(p)^n` in lexicographic order, starting at zero.
#[derive(Clone, Debug)]
pub struct AllVectors {
    p: Residue,
    current: Option<Vec<Residue>>,
}

impl AllVectors {
    pub fn new(field: PrimeField, n: usize) -> Self {
        Self { p: field.modulus(), current: Some(vec![0; n]) }
    }
}

/// Lexicographic successor in place; returns false on wrap-around.
fn increment(v: &mut [Residue], p: Residue) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

impl Iterator for AllVectors {
    type Item = Vec<Residue>;

    fn next(&mut self) -> Option<Vec<Residue>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if increment(&mut next, self.p) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// One representative per one-dimensional subspace of `GF(p)^n`, normalized
/// so the first nonzero coordinate is 1, in lexicographic order.
///
/// There are `(p^n - 1) / (p - 1)` of them. Since `A(λa) = Aa` for `λ ≠ 0`,
/// these points suffice for every "for all a" constraint that is invariant
/// under scaling.
#[derive(Clone, Debug)]
pub struct ProjectivePoints {
    p: Residue,
    n: usize,
    /// Position of the leading 1; counts down from `n - 1` to 0.
    lead: usize,
    tail: Vec<Residue>,
    done: bool,
}

impl ProjectivePoints {
    pub fn new(field: PrimeField, n: usize) -> Self {
        Self { p: field.modulus(), n, lead: n.saturating_sub(1), tail: Vec::new(), done: n == 0 }
    }

    /// Number of points for the given field and dimension.
    pub fn count(field: PrimeField, n: usize) -> Option<u64> {
        field.power_count(n).map(|q| (q - 1) / (field.modulus() as u64 - 1))
    }
}

impl Iterator for ProjectivePoints {
    type Item = Vec<Residue>;

    fn next(&mut self) -> Option<Vec<Residue>> {
        if self.done {
            return None;
        }
        let mut v = vec![0; self.n];
        v[self.lead] = 1;
        v[self.lead + 1..].copy_from_slice(&self.tail);
        if !increment(&mut self.tail, self.p) {
            if self.lead == 0 {
                self.done = true;
            } else {
                self.lead -= 1;
                self.tail = vec![0; self.n - self.lead - 1];
            }
        }
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn projective_examples() {
        let pts: Vec<_> = ProjectivePoints::new(gf(2), 2).collect();
        assert_eq!(pts, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(ProjectivePoints::new(gf(3), 2).count(), 4);
        assert_eq!(ProjectivePoints::new(gf(2), 5).count(), 31);
        assert_eq!(ProjectivePoints::count(gf(2), 14), Some(16383));
    }

    #[test]
    fn projective_points_are_sorted_normalized_and_cover_all_lines() {
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2), (7, 1)] {
            let f = gf(p);
            let pts: Vec<_> = ProjectivePoints::new(f, n).collect();
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            for v in &pts {
                assert_eq!(v.iter().find(|&&x| x != 0), Some(&1));
            }
            // every nonzero vector is a scalar multiple of exactly one point
            for v in AllVectors::new(f, n).skip(1) {
                let lead = *v.iter().find(|&&x| x != 0).unwrap();
                let inv = f.inv(lead).unwrap();
                let normal: Vec<u32> = v.iter().map(|&x| f.mul(inv, x)).collect();
                assert_eq!(pts.iter().filter(|q| **q == normal).count(), 1);
            }
        }
    }

    #[test]
    fn all_vectors_count() {
        assert_eq!(AllVectors::new(gf(3), 3).count(), 27);
        assert_eq!(AllVectors::new(gf(2), 0).count(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(check_cap(gf(2), 10, 1024), Ok(1024));
        assert!(matches!(check_cap(gf(2), 11, 1024), Err(Error::EnumerationCapExceeded { .. })));
        assert!(check_cap(gf(65521), 40, u64::MAX).is_err());
    }
}
