//! Randomized invariants. Algebras are small constructions seen through a
//! random change of basis, so the structure constants are far from the
//! tidy matrix-unit form the constructions produce.

use proptest::prelude::*;
use sliplab::algebra::Algebra;
use sliplab::constructions::*;
use sliplab::io;
use sliplab::linalg::{Matrix, PrimeField, Residue, Subspace};
use sliplab::slip::{self, LinearMap, SlipOptions};
use sliplab::zpd::{self, ZpdOptions};

fn base(kind: usize, p: u64) -> Algebra {
    let f = scalar_field(p).unwrap();
    let u = u_dual_numbers(p).unwrap();
    match kind % 9 {
        0 => f,
        1 => u,
        2 => truncated_polynomial(p, 3).unwrap(),
        3 => tn(&f, 2).unwrap(),
        4 => direct_product(&f, &u).unwrap(),
        5 => matn(&f, 2).unwrap(),
        6 => triangular(&u, &scalar_right_bimodule(&u).unwrap(), &f).unwrap().0,
        7 => direct_product(&u, &u).unwrap(),
        _ => direct_product(&f, &f).unwrap(),
    }
}

fn modp(x: i64, p: i64) -> Residue {
    x.rem_euclid(p) as Residue
}

/// Gauss-Jordan inverse mod p, written out here so it does not share code
/// with the library.
fn inverse_mod(m: &[Vec<Residue>], p: u32) -> Option<Vec<Vec<Residue>>> {
    let n = m.len();
    let p64 = p as i64;
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<i64> = r.iter().map(|&x| x as i64).collect();
            row.extend((0..n).map(|j| (i == j) as i64));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0)?;
        a.swap(c, piv);
        let inv = (1..p64).find(|&t| (a[c][c] * t) % p64 == 1)?;
        for x in a[c].iter_mut() {
            *x = (*x * inv) % p64;
        }
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let k = a[r][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - k * y).rem_euclid(p64);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].iter().map(|&x| modp(x, p64)).collect()).collect())
}

fn row_times(v: &[Residue], m: &[Vec<Residue>], p: u32) -> Vec<Residue> {
    let n = m[0].len();
    (0..n).map(|j| (v.iter().zip(m).map(|(&x, r)| x as u64 * r[j] as u64).sum::<u64>() % p as u64) as Residue).collect()
}

/// The same algebra in the basis whose vectors are the rows of `pm`.
fn rebased(a: &Algebra, pm: &[Vec<Residue>]) -> Option<Algebra> {
    let p = a.field().modulus();
    let inv = inverse_mod(pm, p)?;
    let d = a.dim();
    let mut structure = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            let prod = a.multiply(&pm[i], &pm[j]).unwrap();
            structure.extend(row_times(&prod, &inv, p));
        }
    }
    let unit = row_times(a.unit(), &inv, p);
    Some(Algebra::new(a.field(), d, structure, unit).expect("an isomorphic copy is valid"))
}

fn algebra_strategy(max_dim: usize) -> impl Strategy<Value = (Algebra, Algebra)> {
    (0usize..9, prop_oneof![Just(2u64), Just(3u64)], any::<u64>())
        .prop_map(|(k, p, seed)| (base(k, p), seed))
        .prop_filter("small enough for the lattice oracle", move |(a, _)| {
            a.dim() <= max_dim && a.field().power_count(a.dim()).is_some_and(|n| n <= 1 << 10)
        })
        .prop_filter_map("invertible change of basis", |(a, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = a.field().modulus();
            let d = a.dim();
            let pm: Vec<Vec<Residue>> = (0..d).map(|_| (0..d).map(|_| rng.gen_range(0..p)).collect()).collect();
            rebased(&a, &pm).map(|b| (a, b))
        })
}

fn full_opts() -> SlipOptions {
    SlipOptions { early_stop: false, ..SlipOptions::default() }
}

fn random_matrix(field: PrimeField, rows: usize, cols: usize, seed: u64) -> Matrix {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    // bias toward zeros so low ranks show up
    let data = (0..rows * cols).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..p) }).collect();
    Matrix::new(field, rows, cols, data).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn isomorphic_copies_agree((a, b) in algebra_strategy(6)) {
        let ra = slip::is_slip(&a, SlipOptions::default()).unwrap();
        let rb = slip::is_slip(&b, SlipOptions::default()).unwrap();
        prop_assert_eq!(ra.is_slip, rb.is_slip);
        prop_assert_eq!(ra.multiplier_dim, rb.multiplier_dim);
        if !ra.early_stop && !rb.early_stop {
            prop_assert_eq!(ra.lip_dim, rb.lip_dim);
        }
        let za = zpd::is_zpd(&a, ZpdOptions::default()).unwrap();
        let zb = zpd::is_zpd(&b, ZpdOptions::default()).unwrap();
        prop_assert_eq!(za.is_zpd, zb.is_zpd);
        prop_assert_eq!(za.kernel_dim, zb.kernel_dim);
    }

    #[test]
    fn projective_full_and_lattice_spaces_coincide((_, b) in algebra_strategy(5)) {
        let proj = slip::lip_space(&b, full_opts()).unwrap().space;
        let full = slip::lip_space(&b, SlipOptions { projective: false, ..full_opts() }).unwrap().space;
        let early = slip::lip_space(&b, SlipOptions::default()).unwrap().space;
        prop_assert_eq!(&proj, &full);
        prop_assert_eq!(&proj, &early);
        prop_assert_eq!(&proj, &slip::lattice_lip_space(&b, 1 << 20).unwrap());
    }

    #[test]
    fn multipliers_are_lip_and_lip_is_closed(((_, b), coeffs) in (algebra_strategy(5), prop::collection::vec(0u32..3, 36))) {
        let mult = slip::left_multiplier_space(&b);
        let lip = slip::lip_space(&b, full_opts()).unwrap().space;
        prop_assert_eq!(mult.dim(), b.dim());
        prop_assert!(mult.is_subspace_of(&lip).unwrap());
        // a random combination of LIP basis maps is LIP, and passes the pointwise check
        let p = b.field().modulus();
        let d = b.dim();
        let mut acc = vec![0; d * d];
        for (psi, &c) in lip.basis().iter().zip(&coeffs) {
            for (x, y) in acc.iter_mut().zip(psi.vectorized()) {
                *x = (*x + (c % p) * y) % p;
            }
        }
        let combo = LinearMap::from_vectorized(b.field(), d, d, &acc).unwrap();
        prop_assert!(slip::is_lip(&b, &combo, 1 << 20).unwrap());
        prop_assert!(slip::lip_check_full(&b, &combo, 1 << 20).unwrap());
    }

    #[test]
    fn zpd_implies_slip_and_witnesses_verify((_, b) in algebra_strategy(6)) {
        let z = zpd::is_zpd(&b, ZpdOptions::default()).unwrap();
        let r = slip::is_slip(&b, SlipOptions::default()).unwrap();
        prop_assert!(z.span_dim <= z.kernel_dim);
        prop_assert_eq!(z.kernel_dim, b.dim() * b.dim() - b.dim());
        if z.is_zpd {
            prop_assert!(r.is_slip);
        }
        prop_assert_eq!(r.is_slip, r.witness.is_none());
        if let Some(w) = r.witness {
            prop_assert!(slip::lip_check_full(&b, &w, 1 << 20).unwrap());
            prop_assert!(!slip::is_left_multiplier(&b, &w).unwrap());
        }
    }

    #[test]
    fn zero_products_lie_in_the_kernel((_, b) in algebra_strategy(4)) {
        // every a (x) c with ac = 0 is killed by multiplication
        let d = b.dim();
        let mu = b.multiplication_matrix();
        let elems: Vec<Vec<Residue>> = sliplab::algebra::AllVectors::new(b.field(), d).collect();
        for a in &elems {
            for c in &elems {
                if b.is_zero(&b.multiply(a, c).unwrap()) {
                    let p = b.field();
                    let t: Vec<Residue> = a.iter().flat_map(|&x| c.iter().map(move |&y| p.mul(x, y))).collect();
                    prop_assert!(mu.mul_vec(&t).unwrap().iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn algebra_text_round_trips((_, b) in algebra_strategy(6)) {
        let text = io::serialize_algebra(&b);
        let back = io::parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &b);
        prop_assert_eq!(io::serialize_algebra(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(p in prop_oneof![Just(2u64), Just(3), Just(7), Just(65521)], rows in 1usize..9, cols in 1usize..9, seed: u64) {
        let f = PrimeField::new(p).unwrap();
        let m = random_matrix(f, rows, cols, seed);
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.dim(), cols);
        for v in null.basis_vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.left_nullspace().dim(), rows - m.rank());
    }

    #[test]
    fn annihilator_is_an_involution(p in prop_oneof![Just(2u64), Just(5)], rows in 0usize..7, n in 1usize..9, seed: u64) {
        let f = PrimeField::new(p).unwrap();
        let vs: Vec<Vec<Residue>> = if rows == 0 { vec![] } else { random_matrix(f, rows, n, seed).row_vectors().map(<[Residue]>::to_vec).collect() };
        let s = Subspace::from_spanning(f, n, &vs).unwrap();
        let ann = s.annihilator();
        prop_assert_eq!(s.dim() + ann.dim(), n);
        prop_assert_eq!(&ann.annihilator(), &s);
        for v in &vs {
            prop_assert!(s.contains(v).unwrap());
        }
    }

    #[test]
    fn inverse_matches_the_test_oracle(p in prop_oneof![Just(2u64), Just(3), Just(11)], n in 1usize..7, seed: u64) {
        let f = PrimeField::new(p).unwrap();
        let m = random_matrix(f, n, n, seed);
        let rows: Vec<Vec<Residue>> = m.row_vectors().map(<[Residue]>::to_vec).collect();
        let ours = inverse_mod(&rows, f.modulus());
        match m.inverse() {
            None => prop_assert!(ours.is_none()),
            Some(inv) => {
                let inv_rows: Vec<Vec<Residue>> = inv.row_vectors().map(<[Residue]>::to_vec).collect();
                prop_assert_eq!(Some(inv_rows), ours);
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, n));
            }
        }
    }
}
