use std::fmt;

use crate::error::{Error, Result};

/// A residue modulo the field's prime, always stored in `[0, p)`.
pub type Residue = u32;

/// Largest modulus accepted; products of two residues then fit in a `u64`
/// with room to spare.
pub const MAX_MODULUS: u64 = 1 << 16;

/// The prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Self { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.p == 2
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn reduce(self, x: u64) -> Residue {
        (x % self.p as u64) as Residue
    }

    /// Maps a signed integer to its residue.
    pub fn from_i64(self, x: i64) -> Residue {
        x.rem_euclid(self.p as i64) as Residue
    }

    /// Checks that `x` is already reduced.
    pub fn check(self, x: u64) -> Result<Residue> {
        if x < self.p as u64 {
            Ok(x as Residue)
        } else {
            Err(Error::UnreducedResidue { value: x, modulus: self.p })
        }
    }

    #[inline]
    pub fn add(self, a: Residue, b: Residue) -> Residue {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Residue, b: Residue) -> Residue {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: Residue) -> Residue {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: Residue, b: Residue) -> Residue {
        ((a as u64 * b as u64) % self.p as u64) as Residue
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: Residue) -> Result<Residue> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.from_i64(t0))
    }

    /// `y += c * x` elementwise.
    #[inline]
    pub fn axpy(self, y: &mut [Residue], c: Residue, x: &[Residue]) {
        if c == 0 {
            return;
        }
        let p = self.p as u64;
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = ((*yi as u64 + c as u64 * xi as u64) % p) as Residue;
        }
    }

    /// Dot product of two residue slices.
    pub fn dot(self, a: &[Residue], b: &[Residue]) -> Residue {
        let p = self.p as u64;
        let mut acc = 0u64;
        for (&x, &y) in a.iter().zip(b) {
            acc = (acc + x as u64 * y as u64) % p;
        }
        acc as Residue
    }

    pub fn scale(self, c: Residue, x: &mut [Residue]) {
        for xi in x {
            *xi = self.mul(c, *xi);
        }
    }

    /// `p^n`, or `None` on overflow of `u64`.
    pub fn power_count(self, n: usize) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..n {
            acc = acc.checked_mul(self.p as u64)?;
        }
        Some(acc)
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_must_be_prime() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(65521).is_ok());
        assert_eq!(PrimeField::new(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NonPrimeModulus(1)));
        assert_eq!(PrimeField::new(65537), Err(Error::NonPrimeModulus(65537)));
    }

    #[test]
    fn small_identities() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.add(2, 3), 0);
        assert_eq!(f5.sub(1, 3), 3);
        assert_eq!(f5.neg(2), 3);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(f2.inv(1), Ok(1));
        assert_eq!(f2.inv(0), Err(Error::DivisionByZero(2)));
    }

    #[test]
    fn inverse_matches_exhaustive_search() {
        for p in [3u64, 5, 7, 11, 13, 251] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p as u32 {
                let brute = (1..p as u32).find(|&x| (a as u64 * x as u64) % p == 1).unwrap();
                assert_eq!(f.inv(a).unwrap(), brute, "p={p} a={a}");
            }
        }
        // GF(7): 3 * 5 = 15 = 1 mod 7
        assert_eq!(PrimeField::new(7).unwrap().inv(3), Ok(5));
    }
}
