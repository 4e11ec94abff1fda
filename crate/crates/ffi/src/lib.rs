//! C interface to `sliplab`.
//!
//! Algebras are opaque handles created by one of the `sliplab_algebra_*`
//! constructors and released with [`sliplab_algebra_free`]. Every fallible
//! call returns a [`SliplabStatus`]; on failure the message is available
//! from [`sliplab_last_error`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sliplab::algebra::{Algebra, DEFAULT_CAP};
use sliplab::constructions::{self as cons, BlockShape};
use sliplab::linalg::PrimeField;
use sliplab::slip::{self, SlipOptions};
use sliplab::zpd::{self, ZpdOptions};
use sliplab::{io, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliplabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Validation = 4,
    CapExceeded = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// An algebra over GF(p). Only ever handled through pointers.
pub struct SliplabAlgebra {
    inner: Algebra,
}

/// Outcome of [`sliplab_check_slip`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct SliplabSlipReport {
    pub multiplier_dim: usize,
    pub lip_dim: usize,
    pub is_slip: bool,
    pub points_processed: u64,
    pub early_stop: bool,
}

/// Outcome of [`sliplab_check_zpd`].
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct SliplabZpdReport {
    pub span_dim: usize,
    pub kernel_dim: usize,
    pub is_zpd: bool,
    pub points_processed: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> SliplabStatus {
    match e {
        Error::EnumerationCapExceeded { .. } | Error::LatticeCapExceeded { .. } => SliplabStatus::CapExceeded,
        Error::NonPrimeModulus(_)
        | Error::UnreducedResidue { .. }
        | Error::DimensionMismatch { .. }
        | Error::AlgebraMismatch
        | Error::EmptyAlgebra
        | Error::InvalidBlockShape => SliplabStatus::InvalidArgument,
        _ => SliplabStatus::Validation,
    }
}

struct Failure(SliplabStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SliplabStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure and turns panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SliplabStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SliplabStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SliplabStatus::Panic
        }
    }
}

unsafe fn algebra_ref<'a>(a: *const SliplabAlgebra) -> Result<&'a Algebra, Failure> {
    a.as_ref().map(|h| &h.inner).ok_or_else(|| null("algebra"))
}

unsafe fn store(out: *mut *mut SliplabAlgebra, a: Algebra) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(SliplabAlgebra { inner: a }));
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn cap_or_default(cap: u64) -> u64 {
    if cap == 0 {
        DEFAULT_CAP
    } else {
        cap
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next `sliplab_*` call on the same thread.
#[no_mangle]
pub extern "C" fn sliplab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds an algebra from structure constants (`dim^3` entries, `c[(i*dim+j)*dim+k]`
/// is the coefficient of `e_k` in `e_i e_j`) and a unit (`dim` entries).
///
/// # Safety
/// `structure` and `unit` must point to `dim^3` and `dim` readable values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_new(
    p: u64,
    dim: usize,
    structure: *const u32,
    unit: *const u32,
    out: *mut *mut SliplabAlgebra,
) -> SliplabStatus {
    guard(|| {
        let field = PrimeField::new(p)?;
        let cube = dim
            .checked_mul(dim)
            .and_then(|d| d.checked_mul(dim))
            .ok_or_else(|| Failure(SliplabStatus::InvalidArgument, "dimension too large".into()))?;
        let s = slice(structure, cube, "structure")?.to_vec();
        let u = slice(unit, dim, "unit")?.to_vec();
        store(out, Algebra::new(field, dim, s, u)?)
    })
}

/// Parses the text algebra format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_parse(text: *const c_char, out: *mut *mut SliplabAlgebra) -> SliplabStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| Failure(SliplabStatus::Parse, "text is not UTF-8".into()))?;
        let a = io::parse_algebra(s).map_err(|e| {
            let status = match e.core_error() {
                Some(core) => status_of(core),
                None => SliplabStatus::Parse,
            };
            Failure(status, e.to_string())
        })?;
        store(out, a)
    })
}

/// GF(p) as a one-dimensional algebra.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_field(p: u64, out: *mut *mut SliplabAlgebra) -> SliplabStatus {
    guard(|| store(out, cons::scalar_field(p)?))
}

/// GF(p)[x]/(x^2) with basis 1, x.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_dual_numbers(p: u64, out: *mut *mut SliplabAlgebra) -> SliplabStatus {
    guard(|| store(out, cons::u_dual_numbers(p)?))
}

/// Block upper triangular matrices over `a` with the given block sizes.
///
/// # Safety
/// `a` must be a live handle, `sizes` must point to `len` values and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_block_upper(
    a: *const SliplabAlgebra,
    sizes: *const usize,
    len: usize,
    out: *mut *mut SliplabAlgebra,
) -> SliplabStatus {
    guard(|| {
        let a = algebra_ref(a)?;
        let shape = BlockShape::new(slice(sizes, len, "sizes")?.to_vec())?;
        store(out, cons::block_upper(a, &shape)?.0)
    })
}

/// Direct product `a x b`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_product(
    a: *const SliplabAlgebra,
    b: *const SliplabAlgebra,
    out: *mut *mut SliplabAlgebra,
) -> SliplabStatus {
    guard(|| store(out, cons::direct_product(algebra_ref(a)?, algebra_ref(b)?)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_free(a: *mut SliplabAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Dimension over GF(p), or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_dim(a: *const SliplabAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.inner.dim())
}

/// The characteristic p, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_characteristic(a: *const SliplabAlgebra) -> u32 {
    a.as_ref().map_or(0, |h| h.inner.field().modulus())
}

/// Text form of the algebra; release with [`sliplab_string_free`].
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_algebra_serialize(a: *const SliplabAlgebra, out: *mut *mut c_char) -> SliplabStatus {
    guard(|| {
        let a = algebra_ref(a)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CString::new(io::serialize_algebra(a))
            .map_err(|_| Failure(SliplabStatus::Panic, "NUL in output".into()))?;
        *out = s.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sliplab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Decides SLIP. `cap` of 0 means the default cap. When `witness` is
/// non-null and the algebra is not SLIP, a LIP map that is not a left
/// multiplier is written there row-major (`dim * dim` entries, `witness_len`
/// must be at least that).
///
/// # Safety
/// `a` must be a live handle, `report` writable, and `witness` null or
/// writable for `witness_len` values.
#[no_mangle]
pub unsafe extern "C" fn sliplab_check_slip(
    a: *const SliplabAlgebra,
    cap: u64,
    early_stop: bool,
    report: *mut SliplabSlipReport,
    witness: *mut u32,
    witness_len: usize,
) -> SliplabStatus {
    guard(|| {
        let a = algebra_ref(a)?;
        if report.is_null() {
            return Err(null("report"));
        }
        let d = a.dim();
        if !witness.is_null() && witness_len < d * d {
            return Err(Failure(SliplabStatus::BufferTooSmall, format!("witness buffer needs {} entries", d * d)));
        }
        let opts = SlipOptions { cap: cap_or_default(cap), early_stop, projective: true };
        let r = slip::is_slip(a, opts)?;
        if let (Some(w), false) = (&r.witness, witness.is_null()) {
            std::slice::from_raw_parts_mut(witness, d * d).copy_from_slice(w.vectorized());
        }
        *report = SliplabSlipReport {
            multiplier_dim: r.multiplier_dim,
            lip_dim: r.lip_dim,
            is_slip: r.is_slip,
            points_processed: r.points_processed,
            early_stop: r.early_stop,
        };
        Ok(())
    })
}

/// Decides the zero product determined property. `cap` of 0 means the
/// default cap.
///
/// # Safety
/// `a` must be a live handle and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn sliplab_check_zpd(
    a: *const SliplabAlgebra,
    cap: u64,
    early_stop: bool,
    report: *mut SliplabZpdReport,
) -> SliplabStatus {
    guard(|| {
        let a = algebra_ref(a)?;
        if report.is_null() {
            return Err(null("report"));
        }
        let r = zpd::is_zpd(a, ZpdOptions { cap: cap_or_default(cap), early_stop })?;
        *report = SliplabZpdReport {
            span_dim: r.span_dim,
            kernel_dim: r.kernel_dim,
            is_zpd: r.is_zpd,
            points_processed: r.points_processed,
        };
        Ok(())
    })
}
