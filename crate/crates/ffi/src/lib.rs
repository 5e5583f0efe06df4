//! C ABI over the affcodes library.
//!
//! Objects are opaque handles created by `aff_*_new`-style constructors and released by the
//! matching `aff_*_free`. Every fallible call returns an [`AffStatus`]; on failure the
//! message is available from [`aff_last_error`] until the next failing call on the same
//! thread. Field elements cross the boundary as their integer index (base-p digits of the
//! polynomial representation, constant term least significant).

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use affcodes::codes::{
    weight_distribution_brute, weight_distribution_closed_for, weight_distribution_moments, EnumOptions, LinearCode,
    WeightDistribution,
};
use affcodes::gf::{Elem, FieldCtx};
use affcodes::linearized::{affine_root_count, AffinePoly};
use affcodes::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// An enumeration or size limit would be exceeded.
    ResourceBound = 3,
    /// The requested method does not apply to these parameters.
    NotApplicable = 4,
    /// A value does not fit the output type.
    Overflow = 5,
    /// A panic was caught at the boundary.
    Internal = 6,
}

/// Weight-distribution method for [`aff_weights_compute`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffMethod {
    Brute = 0,
    Closed = 1,
    Moments = 2,
}

/// A finite field GF(p^m) with the Conway modulus.
pub struct AffField(FieldCtx);

/// A constructed linear code.
pub struct AffCode(LinearCode);

/// A weight distribution, as (weight, count) entries in increasing weight.
pub struct AffWeights(Vec<(u32, u128)>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(status: AffStatus, msg: impl Into<String>) -> AffStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> AffStatus {
    let status = match e {
        Error::EnumerationBound { .. } | Error::FieldTooLarge { .. } => AffStatus::ResourceBound,
        Error::Hypothesis(_) => AffStatus::NotApplicable,
        _ => AffStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`AffStatus::Internal`].
fn guard(f: impl FnOnce() -> AffStatus) -> AffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(AffStatus::Internal, "panic inside affcodes"),
    }
}

fn put<T>(out: *mut *mut T, value: T) -> AffStatus {
    // SAFETY: callers check `out` for null before producing a value.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    AffStatus::Ok
}

/// Message of the last failing call on this thread; empty if none. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn aff_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn aff_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates GF(p^m) with the Conway modulus.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn aff_field_new(p: u32, m: u32, out: *mut *mut AffField) -> AffStatus {
    if out.is_null() {
        return fail(AffStatus::NullPointer, "out is null");
    }
    guard(|| match FieldCtx::conway(p, m) {
        Ok(f) => put(out, AffField(f)),
        Err(e) => from_error(e),
    })
}

/// Releases a field; null is ignored.
///
/// # Safety
/// `field` must be null or a handle from [`aff_field_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn aff_field_free(field: *mut AffField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aff_field_order(field: *const AffField) -> u32 {
    field.as_ref().map_or(0, |f| f.0.order())
}

unsafe fn binary_op(
    field: *const AffField,
    a: u32,
    b: u32,
    out: *mut u32,
    op: impl FnOnce(&FieldCtx, Elem, Elem) -> Result<Elem, Error>,
) -> AffStatus {
    let (Some(f), false) = (field.as_ref(), out.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle or output");
    };
    guard(|| {
        let f = &f.0;
        let (x, y) = match (f.element(a), f.element(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return from_error(e),
        };
        match op(f, x, y) {
            Ok(z) => {
                *out = z.0;
                AffStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// `*out = a + b`.
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_field_add(field: *const AffField, a: u32, b: u32, out: *mut u32) -> AffStatus {
    binary_op(field, a, b, out, |f, x, y| Ok(f.add(x, y)))
}

/// `*out = a * b`.
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_field_mul(field: *const AffField, a: u32, b: u32, out: *mut u32) -> AffStatus {
    binary_op(field, a, b, out, |f, x, y| Ok(f.mul(x, y)))
}

/// `*out = a^-1`; fails for zero.
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_field_inv(field: *const AffField, a: u32, out: *mut u32) -> AffStatus {
    binary_op(field, a, 0, out, |f, x, _| f.inv(x))
}

/// `*out` = index of the generator raised to `k` (negative exponents allowed).
///
/// # Safety
/// `field` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_field_alpha_pow(field: *const AffField, k: i64, out: *mut u32) -> AffStatus {
    let (Some(f), false) = (field.as_ref(), out.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle or output");
    };
    *out = f.0.alpha_pow(k).0;
    AffStatus::Ok
}

/// Roots in GF(q) of `constant + sum coeffs[i] x^(p^i)`.
///
/// # Safety
/// `coeffs` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_root_count(
    field: *const AffField,
    constant: u32,
    coeffs: *const u32,
    len: usize,
    out: *mut u64,
) -> AffStatus {
    let (Some(f), false, false) = (field.as_ref(), coeffs.is_null(), out.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle, coefficients or output");
    };
    let raw = std::slice::from_raw_parts(coeffs, len);
    guard(|| {
        let f = &f.0;
        let elems: Result<Vec<Elem>, Error> = raw.iter().map(|&c| f.element(c)).collect();
        let count = elems
            .and_then(|cs| Ok((f.element(constant)?, cs)))
            .and_then(|(c, cs)| AffinePoly::new(f, c, cs))
            .and_then(|g| affine_root_count(&g));
        match count {
            Ok(n) => {
                *out = n;
                AffStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

unsafe fn new_code(out: *mut *mut AffCode, build: impl FnOnce() -> Result<LinearCode, Error>) -> AffStatus {
    if out.is_null() {
        return fail(AffStatus::NullPointer, "out is null");
    }
    guard(|| match build() {
        Ok(c) => put(out, AffCode(c)),
        Err(e) => from_error(e),
    })
}

/// Extended code of length p^m spanned by 1 and x^(p^i), i = 0..=h.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_code_extended(p: u32, m: u32, h: u32, out: *mut *mut AffCode) -> AffStatus {
    new_code(out, || LinearCode::extended(p, m, h))
}

/// Unit-circle code of length p^m + 1 over GF(p^(2m)).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_code_circle(p: u32, m: u32, s: u32, out: *mut *mut AffCode) -> AffStatus {
    new_code(out, || LinearCode::circle(p, m, s))
}

/// Releases a code; null is ignored.
///
/// # Safety
/// `code` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aff_code_free(code: *mut AffCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length, dimension and alphabet size. Any output pointer may be null.
///
/// # Safety
/// `code` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn aff_code_params(
    code: *const AffCode,
    n: *mut usize,
    k: *mut usize,
    alphabet: *mut u64,
) -> AffStatus {
    let Some(c) = code.as_ref() else {
        return fail(AffStatus::NullPointer, "code is null");
    };
    if let Some(n) = n.as_mut() {
        *n = c.0.n();
    }
    if let Some(k) = k.as_mut() {
        *k = c.0.k();
    }
    if let Some(a) = alphabet.as_mut() {
        *a = c.0.alphabet_size();
    }
    AffStatus::Ok
}

/// Encodes a message of `k` symbols into `word` of `n` symbols.
///
/// # Safety
/// `msg` must hold `k` readable values and `word` `n` writable ones.
#[no_mangle]
pub unsafe extern "C" fn aff_code_encode(
    code: *const AffCode,
    msg: *const u32,
    k: usize,
    word: *mut u32,
    n: usize,
) -> AffStatus {
    let (Some(c), false, false) = (code.as_ref(), msg.is_null(), word.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle, message or output");
    };
    let c = &c.0;
    if k != c.k() || n != c.n() {
        return fail(AffStatus::InvalidArgument, format!("expected k = {}, n = {}", c.k(), c.n()));
    }
    let msg = std::slice::from_raw_parts(msg, k);
    let word = std::slice::from_raw_parts_mut(word, n);
    guard(|| {
        let f = c.field();
        let elems: Result<Vec<Elem>, Error> = msg.iter().map(|&x| f.element(x)).collect();
        match elems.and_then(|m| c.encode(&m)) {
            Ok(w) => {
                for (o, e) in word.iter_mut().zip(w) {
                    *o = e.0;
                }
                AffStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Weight distribution of `code` by `method` with `workers` threads (0 means 1).
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_weights_compute(
    code: *const AffCode,
    method: AffMethod,
    workers: u32,
    out: *mut *mut AffWeights,
) -> AffStatus {
    let (Some(c), false) = (code.as_ref(), out.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle or output");
    };
    let opts = EnumOptions::with_workers(workers.max(1) as usize);
    guard(|| {
        let wd: Result<WeightDistribution, Error> = match method {
            AffMethod::Brute => weight_distribution_brute(&c.0, &opts),
            AffMethod::Closed => weight_distribution_closed_for(c.0.family()),
            AffMethod::Moments => weight_distribution_moments(&c.0, &opts),
        };
        match wd {
            Ok(d) => put(out, AffWeights(d.counts.into_iter().collect())),
            Err(e) => from_error(e),
        }
    })
}

/// Number of (weight, count) entries, including weight 0; 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aff_weights_len(w: *const AffWeights) -> usize {
    w.as_ref().map_or(0, |w| w.0.len())
}

/// Entry `i` in increasing weight order.
///
/// # Safety
/// `w` must be a live handle; `weight` and `count` writable.
#[no_mangle]
pub unsafe extern "C" fn aff_weights_entry(
    w: *const AffWeights,
    i: usize,
    weight: *mut u32,
    count: *mut u64,
) -> AffStatus {
    let (Some(w), false, false) = (w.as_ref(), weight.is_null(), count.is_null()) else {
        return fail(AffStatus::NullPointer, "null handle or output");
    };
    let Some(&(wt, c)) = w.0.get(i) else {
        return fail(AffStatus::InvalidArgument, format!("index {i} out of range 0..{}", w.0.len()));
    };
    let Ok(c) = u64::try_from(c) else {
        return fail(AffStatus::Overflow, format!("count {c} exceeds 64 bits"));
    };
    *weight = wt;
    *count = c;
    AffStatus::Ok
}

/// Releases a distribution; null is ignored.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aff_weights_free(w: *mut AffWeights) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}
