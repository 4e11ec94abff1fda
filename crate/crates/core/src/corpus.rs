//! A fixed collection of small algebras and triangular triples over GF(2)
//! and GF(3), used by the reproduction suite and the property tests.

use crate::algebra::Algebra;
use crate::constructions::*;
use crate::error::Result;
use crate::linalg::Residue;
use crate::module::{Bimodule, RightModule};

/// A named algebra.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub algebra: Algebra,
}

/// `Tri(A, M, B)` with its pieces and the idempotent `(1_A, 0, 0)`.
#[derive(Clone, Debug)]
pub struct TriangularEntry {
    pub name: String,
    pub a: Algebra,
    pub m: Bimodule,
    pub b: Algebra,
    pub t: Algebra,
    pub e: Vec<Residue>,
}

impl TriangularEntry {
    pub fn new(name: impl Into<String>, m: Bimodule) -> Result<Self> {
        let (a, b) = (m.left().clone(), m.right().clone());
        let (t, e) = triangular(&a, &m, &b)?;
        Ok(Self { name: name.into(), a, m, b, t, e })
    }

    /// `M` as a right `B`-module.
    pub fn right_module(&self) -> RightModule {
        self.m.as_right_module()
    }
}

fn entry(name: impl Into<String>, algebra: Algebra) -> Entry {
    Entry { name: name.into(), algebra }
}

fn block(a: &Algebra, kbar: &[usize]) -> Result<Algebra> {
    Ok(block_upper(a, &BlockShape::new(kbar.to_vec())?)?.0)
}

/// Algebras that are not themselves listed as triangular triples.
fn plain_algebras() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let f = scalar_field(p)?;
        let u = u_dual_numbers(p)?;
        out.push(entry(format!("GF({p})"), f.clone()));
        out.push(entry(format!("U({p})"), u.clone()));
        out.push(entry(format!("GF({p})[x]/(x^3)"), truncated_polynomial(p, 3)?));
        out.push(entry(format!("M2(GF({p}))"), matn(&f, 2)?));
        out.push(entry(format!("M3(GF({p}))"), matn(&f, 3)?));
        out.push(entry(format!("T2(GF({p}))"), tn(&f, 2)?));
        out.push(entry(format!("T3(GF({p}))"), tn(&f, 3)?));
        out.push(entry(format!("T2(U({p}))"), tn(&u, 2)?));
        out.push(entry(format!("M2(U({p}))"), matn(&u, 2)?));
        out.push(entry(format!("GF({p})xU({p})"), direct_product(&f, &u)?));
        out.push(entry(format!("B3(1,2)(GF({p}))"), block(&f, &[1, 2])?));
        out.push(entry(format!("B3(2,1)(GF({p}))"), block(&f, &[2, 1])?));
    }
    let f2 = scalar_field(2)?;
    let u2 = u_dual_numbers(2)?;
    let m2 = matn(&f2, 2)?;
    out.push(entry("GF(2)xGF(2)", direct_product(&f2, &f2)?));
    out.push(entry("U(2)xU(2)", direct_product(&u2, &u2)?));
    out.push(entry("M2(GF(2))xU(2)", direct_product(&m2, &u2)?));
    out.push(entry("M2(GF(2))xM2(GF(2))", direct_product(&m2, &m2)?));
    out.push(entry("T4(GF(2))", tn(&f2, 4)?));
    out.push(entry("B4(1,1,2)(GF(2))", block(&f2, &[1, 1, 2])?));
    out.push(entry("B4(2,2)(GF(2))", block(&f2, &[2, 2])?));
    out.push(entry("B3(1,2)(U(2))", block(&u2, &[1, 2])?));
    out.push(entry("B3(2,1)(U(2))", block(&u2, &[2, 1])?));
    Ok(out)
}

/// Triangular triples, built directly and through Peirce splits.
pub fn triangular_entries() -> Result<Vec<TriangularEntry>> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let f = scalar_field(p)?;
        let u = u_dual_numbers(p)?;
        let m2 = matn(&f, 2)?;
        let fp = format!("GF({p})");
        let up = format!("U({p})");
        out.push(TriangularEntry::new(format!("Tri({fp}, 0, {fp})"), zero_bimodule(&f, &f)?)?);
        out.push(TriangularEntry::new(format!("Tri({up}, {up}, {fp})"), scalar_right_bimodule(&u)?)?);
        out.push(TriangularEntry::new(format!("Tri({up}, {up}, {up})"), regular_bimodule(&u)?)?);
        out.push(TriangularEntry::new(format!("Tri({fp}, {up}, {up})"), scalar_left_bimodule(&u)?)?);
        out.push(TriangularEntry::new(format!("Tri(M2({fp}), col, {fp})"), matrix_bimodule(&f, 2, 1)?)?);
        out.push(TriangularEntry::new(format!("Tri({fp}, row, M2({fp}))"), matrix_bimodule(&f, 1, 2)?)?);
        out.push(TriangularEntry::new(format!("Tri(M2({fp}), M2({fp}), M2({fp}))"), regular_bimodule(&m2)?)?);
    }
    let f2 = scalar_field(2)?;
    let u2 = u_dual_numbers(2)?;
    let m2 = matn(&f2, 2)?;
    let t2 = tn(&f2, 2)?;
    out.push(TriangularEntry::new("Tri(T2(GF(2)), T2(GF(2)), T2(GF(2)))", regular_bimodule(&t2)?)?);
    out.push(TriangularEntry::new("Tri(U(2), row, M2(U(2)))", matrix_bimodule(&u2, 1, 2)?)?);
    out.push(TriangularEntry::new("Tri(M2(U(2)), col, U(2))", matrix_bimodule(&u2, 2, 1)?)?);
    out.push(TriangularEntry::new("Tri(M2(GF(2))xU(2), M2(GF(2)), M2(GF(2)))", mixed_bimodule(&m2, &u2)?)?);

    for (name, x) in endomorphism_pairs()? {
        let end = x.endomorphism_algebra()?;
        out.push(TriangularEntry::new(format!("Tri(End({name}), M, B)"), end.bimodule)?);
    }

    for (name, alg, e) in [
        ("T3(GF(2))", tn(&f2, 3)?, {
            let mut e = vec![0; 6];
            e[0] = 1;
            e
        }),
        ("T3(GF(3))", tn(&scalar_field(3)?, 3)?, {
            let mut e = vec![0; 6];
            e[0] = 1;
            e[3] = 1;
            e
        }),
        ("B3(1,2)(U(2))", block(&u2, &[1, 2])?, block_upper(&u2, &BlockShape::new(vec![1, 2])?)?.1[0].clone()),
        ("B3(2,1)(U(2))", block(&u2, &[2, 1])?, block_upper(&u2, &BlockShape::new(vec![2, 1])?)?.1[0].clone()),
        ("B4(1,1,2)(GF(2))", block(&f2, &[1, 1, 2])?, {
            let f = block_upper(&f2, &BlockShape::new(vec![1, 1, 2])?)?.1;
            f2_sum(&f[0], &f[1])
        }),
    ] {
        let split = alg.peirce_split(&e)?;
        out.push(TriangularEntry::new(format!("Peirce[{name}]"), split.bimodule)?);
    }
    Ok(out)
}

fn f2_sum(a: &[Residue], b: &[Residue]) -> Vec<Residue> {
    a.iter().zip(b).map(|(x, y)| (x + y) % 2).collect()
}

/// Right modules `(B, M)` for the endomorphism route `Tri(End_B(M), M, B)`.
pub fn endomorphism_pairs() -> Result<Vec<(String, RightModule)>> {
    let f2 = scalar_field(2)?;
    let u2 = u_dual_numbers(2)?;
    Ok(vec![
        ("GF(2)^2 over GF(2)".into(), matrix_bimodule(&f2, 2, 1)?.as_right_module()),
        ("U(2) over U(2)".into(), RightModule::regular(&u2)),
        ("GF(2)^(1x2) over M2(GF(2))".into(), matrix_bimodule(&f2, 1, 2)?.as_right_module()),
    ])
}

/// Every algebra of dimension at most 14: the plain algebras followed by
/// the triangular ones.
pub fn algebras() -> Result<Vec<Entry>> {
    let mut out = plain_algebras()?;
    for t in triangular_entries()? {
        out.push(entry(t.name, t.t));
    }
    out.retain(|e| e.algebra.dim() <= 14);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let algs = algebras().unwrap();
        assert!(algs.len() >= 30);
        for e in &algs {
            assert!(e.algebra.dim() <= 14, "{}", e.name);
            assert!([2, 3].contains(&e.algebra.field().modulus()));
            e.algebra.validate().unwrap();
            assert!(
                e.algebra.field().power_count(e.algebra.dim()).unwrap() <= crate::algebra::DEFAULT_CAP,
                "{}",
                e.name
            );
        }
        let names: std::collections::HashSet<_> = algs.iter().map(|e| &e.name).collect();
        assert_eq!(names.len(), algs.len());
        for t in triangular_entries().unwrap() {
            assert!(t.t.is_left_semicentral(&t.e).unwrap());
        }
    }
}
