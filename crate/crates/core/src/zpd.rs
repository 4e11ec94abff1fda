//! Zero product determined algebras.
//!
//! For a finite-dimensional unital algebra `A`, `A` is zero product
//! determined exactly when the zero-product tensors `a ⊗ b` with `ab = 0`
//! span the kernel of the multiplication map `μ: A ⊗ A -> A`.
//!
//! Proof sketch. A bilinear `φ: A × A -> X` is a linear map `Φ` on `A ⊗ A`.
//! It vanishes on zero products iff `Φ` kills `Z = span{a ⊗ b : ab = 0}`,
//! and it factors as `L ∘ μ` iff `Φ` kills `ker μ`. Always `Z ⊆ ker μ`. If
//! `Z = ker μ` the two conditions coincide. Otherwise take `X = (A ⊗ A)/Z`
//! and `Φ` the quotient map: it vanishes on zero products but not on
//! `ker μ`, so it does not factor. Since `A` is unital, `μ` is onto and
//! `dim ker μ = dim² - dim`.

use crate::algebra::{check_cap, Algebra, ProjectivePoints, DEFAULT_CAP};
use crate::error::Result;
use crate::linalg::SpanBuilder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZpdReport {
    /// `dim span{a ⊗ b : ab = 0}`.
    pub span_dim: usize,
    /// `dim ker μ = dim² - dim`.
    pub kernel_dim: usize,
    pub is_zpd: bool,
    pub points_processed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZpdOptions {
    pub cap: u64,
    pub early_stop: bool,
}

impl Default for ZpdOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, early_stop: true }
    }
}

/// Collects `v ⊗ k` for each point `v` and each `k` in a basis of
/// `ker L_v`; since `ab = 0` iff `b ∈ ker L_a` this reaches every zero
/// product up to scaling of `a`.
pub fn is_zpd(a: &Algebra, opts: ZpdOptions) -> Result<ZpdReport> {
    let f = a.field();
    let d = a.dim();
    check_cap(f, d, opts.cap)?;
    let kernel_dim = d * d - d;
    let mut span = SpanBuilder::new(f, d * d);
    let mut processed = 0u64;
    for v in ProjectivePoints::new(f, d) {
        if opts.early_stop && span.rank() == kernel_dim {
            break;
        }
        processed += 1;
        for k in a.left_mul_matrix(&v).nullspace().basis_vectors() {
            span.add_outer(&v, k)?;
        }
    }
    let span_dim = span.rank();
    Ok(ZpdReport { span_dim, kernel_dim, is_zpd: span_dim == kernel_dim, points_processed: processed })
}
