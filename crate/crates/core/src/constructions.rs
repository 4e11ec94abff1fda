//! Builders for the algebra and bimodule families used throughout the crate.
//!
//! Matrix-type bases list positions in row-major order with the base
//! algebra's basis innermost: index `pos * dim(A) + t` stands for
//! `E_pos ⊗ e_t`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{PrimeField, Residue};
use crate::module::{Bimodule, RightModule};

/// `GF(p)` as a one-dimensional algebra.
pub fn scalar_field(p: u64) -> Result<Algebra> {
    let f = PrimeField::new(p)?;
    Algebra::new(f, 1, vec![1], vec![1])
}

/// `GF(p)[x]/(x^2)` with basis `(1, x)`; isomorphic to the algebra of
/// 2x2 matrices `[[λ, μ], [0, λ]]`.
pub fn u_dual_numbers(p: u64) -> Result<Algebra> {
    let f = PrimeField::new(p)?;
    #[rustfmt::skip]
    let s = vec![
        1, 0,   0, 1,
        0, 1,   0, 0,
    ];
    Algebra::new(f, 2, s, vec![1, 0])
}

/// `GF(p)[x]/(x^n)` with basis `(1, x, ..., x^{n-1})`.
pub fn truncated_polynomial(p: u64, n: usize) -> Result<Algebra> {
    let f = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::EmptyAlgebra);
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    Algebra::from_basis_products(f, n, unit, |i, j| {
        let mut out = vec![0; n];
        if i + j < n {
            out[i + j] = 1;
        }
        out
    })
}

/// Block sizes `(k_1, ..., k_m)` of a block upper triangular pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockShape {
    kbar: Vec<usize>,
}

impl BlockShape {
    pub fn new(kbar: Vec<usize>) -> Result<Self> {
        if kbar.is_empty() || kbar.contains(&0) {
            return Err(Error::InvalidBlockShape);
        }
        Ok(Self { kbar })
    }

    pub fn kbar(&self) -> &[usize] {
        &self.kbar
    }

    pub fn n(&self) -> usize {
        self.kbar.iter().sum()
    }

    /// Block index of each row.
    fn block_of(&self) -> Vec<usize> {
        self.kbar.iter().enumerate().flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect()
    }

    /// In-pattern positions `(row, col)` in row-major order.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let block = self.block_of();
        let n = self.n();
        (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).filter(|&(r, c)| block[r] <= block[c]).collect()
    }
}

impl std::fmt::Display for BlockShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.kbar.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Product of `E_{p} ⊗ x` and `E_{q} ⊗ y` written into `out` at the slot of
/// the resulting position, if any.
fn matrix_unit_product(
    a: &Algebra,
    left: (usize, usize),
    right: (usize, usize),
    i: usize,
    j: usize,
    index_of: impl Fn(usize, usize) -> Option<usize>,
    out: &mut [Residue],
) {
    if left.1 != right.0 {
        return;
    }
    let d = a.dim();
    let pos = index_of(left.0, right.1).expect("pattern is closed under products");
    out[pos * d..(pos + 1) * d].copy_from_slice(a.basis_product(i, j));
}

/// The block upper triangular algebra `B_n^k(A)` and its canonical left
/// triangulating idempotents `F_1, ..., F_m`.
pub fn block_upper(a: &Algebra, shape: &BlockShape) -> Result<(Algebra, Vec<Vec<Residue>>)> {
    let positions = shape.positions();
    let n = shape.n();
    let d = a.dim();
    let mut lookup = vec![None; n * n];
    for (idx, &(r, c)) in positions.iter().enumerate() {
        lookup[r * n + c] = Some(idx);
    }
    let index_of = |r: usize, c: usize| lookup[r * n + c];
    let dim = positions.len() * d;

    let mut unit = vec![0; dim];
    for r in 0..n {
        let pos = index_of(r, r).expect("diagonal");
        unit[pos * d..(pos + 1) * d].copy_from_slice(a.unit());
    }
    let algebra = Algebra::from_basis_products(a.field(), dim, unit, |s, t| {
        let mut out = vec![0; dim];
        matrix_unit_product(a, positions[s / d], positions[t / d], s % d, t % d, index_of, &mut out);
        out
    })?;

    let mut idems = Vec::new();
    let mut row = 0;
    for &k in shape.kbar() {
        let mut e = vec![0; dim];
        for r in row..row + k {
            let pos = index_of(r, r).expect("diagonal");
            e[pos * d..(pos + 1) * d].copy_from_slice(a.unit());
        }
        idems.push(e);
        row += k;
    }
    Ok((algebra, idems))
}

/// `M_n(A)`.
pub fn matn(a: &Algebra, n: usize) -> Result<Algebra> {
    Ok(block_upper(a, &BlockShape::new(vec![n])?)?.0)
}

/// Upper triangular `T_n(A)`.
pub fn tn(a: &Algebra, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidBlockShape);
    }
    Ok(block_upper(a, &BlockShape::new(vec![1; n])?)?.0)
}

/// The triangular algebra `Tri(A, M, B)` with basis `A`, then `M`, then `B`,
/// and the left semicentral idempotent `(1_A, 0, 0)`.
pub fn triangular(a: &Algebra, m: &Bimodule, b: &Algebra) -> Result<(Algebra, Vec<Residue>)> {
    if m.left() != a || m.right() != b {
        return Err(Error::AlgebraMismatch);
    }
    let (da, dm, db) = (a.dim(), m.dim(), b.dim());
    let dim = da + dm + db;
    let mut unit = vec![0; dim];
    unit[..da].copy_from_slice(a.unit());
    unit[da + dm..].copy_from_slice(b.unit());
    let e_m = |i: usize| {
        let mut v = vec![0; dm];
        v[i] = 1;
        v
    };
    let t = Algebra::from_basis_products(a.field(), dim, unit, |s, u| {
        let mut out = vec![0; dim];
        match (s, u) {
            (s, u) if s < da && u < da => out[..da].copy_from_slice(a.basis_product(s, u)),
            (s, u) if s < da && u >= da && u < da + dm => {
                out[da..da + dm].copy_from_slice(&m.act_left(&a.basis_vector(s), &e_m(u - da)))
            }
            (s, u) if (da..da + dm).contains(&s) && u >= da + dm => {
                out[da..da + dm].copy_from_slice(&m.act_right(&e_m(s - da), &b.basis_vector(u - da - dm)))
            }
            (s, u) if s >= da + dm && u >= da + dm => {
                out[da + dm..].copy_from_slice(b.basis_product(s - da - dm, u - da - dm))
            }
            _ => {}
        }
        out
    })?;
    let mut e = vec![0; dim];
    e[..da].copy_from_slice(a.unit());
    Ok((t, e))
}

/// `A × B` with basis `A` then `B`.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::AlgebraMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let mut unit = a.unit().to_vec();
    unit.extend_from_slice(b.unit());
    Algebra::from_basis_products(a.field(), da + db, unit, |s, t| {
        let mut out = vec![0; da + db];
        if s < da && t < da {
            out[..da].copy_from_slice(a.basis_product(s, t));
        } else if s >= da && t >= da {
            out[da..].copy_from_slice(b.basis_product(s - da, t - da));
        }
        out
    })
}

/// `A` as an `(A × B, A)`-bimodule with `(a, b) x = a x`.
pub fn mixed_bimodule(a: &Algebra, b: &Algebra) -> Result<Bimodule> {
    let ab = direct_product(a, b)?;
    let da = a.dim();
    Bimodule::from_actions(
        ab,
        a.clone(),
        da,
        |i, j| if i < da { a.basis_product(i, j).to_vec() } else { vec![0; da] },
        |i, j| a.basis_product(i, j).to_vec(),
    )
}

/// `A` as an `(A × A, A)`-bimodule with `(a, b) x = a x`.
pub fn e3_bimodule(a: &Algebra) -> Result<Bimodule> {
    mixed_bimodule(a, a)
}

/// `A` as an `(A, A)`-bimodule under multiplication.
pub fn regular_bimodule(a: &Algebra) -> Result<Bimodule> {
    Bimodule::from_actions(
        a.clone(),
        a.clone(),
        a.dim(),
        |i, j| a.basis_product(i, j).to_vec(),
        |i, j| a.basis_product(i, j).to_vec(),
    )
}

/// `A` as an `(A, GF(p))`-bimodule: left multiplication, scalar right action.
pub fn scalar_right_bimodule(a: &Algebra) -> Result<Bimodule> {
    let f = scalar_field(a.field().modulus() as u64)?;
    Bimodule::from_actions(a.clone(), f, a.dim(), |i, j| a.basis_product(i, j).to_vec(), |i, _| a.basis_vector(i))
}

/// `B` as a `(GF(p), B)`-bimodule: scalar left action, right multiplication.
pub fn scalar_left_bimodule(b: &Algebra) -> Result<Bimodule> {
    let f = scalar_field(b.field().modulus() as u64)?;
    Bimodule::from_actions(f, b.clone(), b.dim(), |_, j| b.basis_vector(j), |i, j| b.basis_product(i, j).to_vec())
}

/// The zero `(A, B)`-bimodule.
pub fn zero_bimodule(a: &Algebra, b: &Algebra) -> Result<Bimodule> {
    Bimodule::from_actions(a.clone(), b.clone(), 0, |_, _| Vec::new(), |_, _| Vec::new())
}

fn rect_positions(r: usize, s: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (0..s).map(move |j| (i, j))).collect()
}

/// `M_{r×s}(A)` as an `(M_r(A), M_s(A))`-bimodule under matrix products.
pub fn matrix_bimodule(a: &Algebra, r: usize, s: usize) -> Result<Bimodule> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidBlockShape);
    }
    let d = a.dim();
    let left = matn(a, r)?;
    let right = matn(a, s)?;
    let sq_r = rect_positions(r, r);
    let sq_s = rect_positions(s, s);
    let rect = rect_positions(r, s);
    let mdim = rect.len() * d;
    let rect_index = |i: usize, j: usize| Some(i * s + j);
    Bimodule::from_actions(
        left,
        right,
        mdim,
        |x, y| {
            let mut out = vec![0; mdim];
            matrix_unit_product(a, sq_r[x / d], rect[y / d], x % d, y % d, rect_index, &mut out);
            out
        },
        |x, y| {
            let mut out = vec![0; mdim];
            matrix_unit_product(a, rect[x / d], sq_s[y / d], x % d, y % d, rect_index, &mut out);
            out
        },
    )
}

/// `M_{r×s}(A)` as a right `A`-module under entrywise right multiplication.
pub fn matrix_right_module(a: &Algebra, r: usize, s: usize) -> Result<RightModule> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidBlockShape);
    }
    let d = a.dim();
    let mdim = r * s * d;
    RightModule::from_action(a.clone(), mdim, |x, y| {
        let mut out = vec![0; mdim];
        let pos = x / d;
        out[pos * d..(pos + 1) * d].copy_from_slice(a.basis_product(x % d, y));
        out
    })
}

/// Checks that `idems` is a set of left triangulating idempotents:
/// (i) idempotents summing to 1, (ii) the first is left semicentral,
/// (iii) each next one lies in the remaining corner `f_k A f_k` and is left
/// semicentral there.
pub fn verify_triangulating(a: &Algebra, idems: &[Vec<Residue>]) -> Result<()> {
    let fail = |msg: String| Err(Error::NotTriangulating(msg));
    if idems.is_empty() {
        return fail("(i) empty idempotent list".into());
    }
    let mut sum = a.zero();
    for (k, e) in idems.iter().enumerate() {
        if e.len() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: e.len() });
        }
        a.multiply(e, e)?;
        if !a.is_idempotent(e) {
            return fail(format!("(i) element {k} is not idempotent"));
        }
        sum = a.add(&sum, e);
    }
    if sum != a.unit() {
        return fail("(i) idempotents do not sum to 1".into());
    }
    if !a.is_left_semicentral(&idems[0])? {
        return fail("(ii) first idempotent is not left semicentral".into());
    }
    let mut partial = a.zero();
    for k in 0..idems.len() - 1 {
        partial = a.add(&partial, &idems[k]);
        let f = a.complement(&partial);
        let next = &idems[k + 1];
        if a.is_zero(&f) {
            return fail(format!("(iii) corner after element {k} is zero"));
        }
        let corner = a.corner_algebra(&f)?;
        let Some(local) = corner.to_local(next) else {
            return fail(format!("(iii) element {} is not in the corner f A f", k + 1));
        };
        if !corner.algebra.is_left_semicentral(&local)? {
            return fail(format!("(iii) element {} is not left semicentral in its corner", k + 1));
        }
    }
    Ok(())
}
