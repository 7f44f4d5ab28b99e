//! C interface to the qosp engine.
//!
//! Objects are opaque heap handles created and destroyed through this API.
//! Every fallible call returns a [`QospStatus`]; on failure a description is
//! available from [`qosp_last_error_message`] on the same thread. Strings
//! returned by the library must be released with [`qosp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qosp::algebra::{Algebra, Element};
use qosp::hc_center::{solve_central, upsilon, Character};
use qosp::parse::{parse_element, parse_scalar};
use qosp::verma::annihilation_criterion;
use qosp::weights::{GammaElement, RhoConvention, Weight};
use qosp::zhang::{in_bar, psi};
use qosp::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QospStatus {
    Ok = 0,
    /// A required pointer argument was null.
    Null = 1,
    /// The expression text did not parse.
    Parse = 2,
    /// An argument was out of range or of the wrong rank.
    Invalid = 3,
    /// The computation itself failed (no solution, division by zero, ...).
    Math = 4,
    /// A string argument was not valid UTF-8.
    Utf8 = 5,
    /// The library panicked; the handle arguments should be considered poisoned.
    Panic = 6,
}

/// Algebra handle for a fixed rank and ρ convention.
pub struct QospAlgebra {
    inner: Algebra,
}

/// Element handle, tied to the rank of the algebra that produced it.
pub struct QospElement {
    rank: usize,
    inner: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

struct Fail(QospStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => QospStatus::Parse,
            Error::Range(_)
            | Error::RankZero
            | Error::RankMismatch { .. }
            | Error::InvalidIndex(_)
            | Error::NotInLattice(..) => QospStatus::Invalid,
            _ => QospStatus::Math,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QospStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QospStatus::Ok
        }
        Ok(Err(Fail(s, m))) => {
            set_error(m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            QospStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(QospStatus::Null, "null pointer argument".into()))
}

unsafe fn out_ptr<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(QospStatus::Null, "null output pointer".into()))
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(QospStatus::Null, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail(QospStatus::Utf8, e.to_string()))
}

fn same_rank(alg: &QospAlgebra, x: &QospElement) -> Result<(), Fail> {
    if alg.inner.rank() != x.rank {
        return Err(Error::RankMismatch { expected: alg.inner.rank(), got: x.rank }.into());
    }
    Ok(())
}

fn new_element(rank: usize, inner: Element) -> *mut QospElement {
    Box::into_raw(Box::new(QospElement { rank, inner }))
}

/// Creates the algebra of rank `rank`; `literal_rho` selects ρ as the full
/// sum of positive roots instead of the half sum.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qosp_algebra_new(rank: u32, literal_rho: bool, out: *mut *mut QospAlgebra) -> QospStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let conv = if literal_rho { RhoConvention::LiteralSum } else { RhoConvention::HalfSum };
        let inner = Algebra::new(rank as usize, conv)?;
        *out = Box::into_raw(Box::new(QospAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be null or a handle from [`qosp_algebra_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qosp_algebra_free(alg: *mut QospAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live algebra handle, `expr` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_element_parse(
    alg: *const QospAlgebra,
    expr: *const c_char,
    out: *mut *mut QospElement,
) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let s = c_str(expr)?;
        let out = out_ptr(out)?;
        let x = parse_element(&alg.inner, s)?;
        *out = new_element(alg.inner.rank(), x);
        Ok(())
    })
}

/// # Safety
/// `x` must be null or a live element handle.
#[no_mangle]
pub unsafe extern "C" fn qosp_element_free(x: *mut QospElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Canonical text of `x`; release with [`qosp_string_free`].
///
/// # Safety
/// `x` must be a live element handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_element_to_string(x: *const QospElement, out: *mut *mut c_char) -> QospStatus {
    guard(|| {
        let x = borrow(x)?;
        let out = out_ptr(out)?;
        *out = CString::new(x.inner.to_string()).expect("no interior NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qosp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// All handles must be live and belong to algebras of the same rank.
#[no_mangle]
pub unsafe extern "C" fn qosp_element_mul(
    alg: *const QospAlgebra,
    a: *const QospElement,
    b: *const QospElement,
    out: *mut *mut QospElement,
) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let (a, b) = (borrow(a)?, borrow(b)?);
        let out = out_ptr(out)?;
        same_rank(alg, a)?;
        same_rank(alg, b)?;
        *out = new_element(a.rank, alg.inner.mul(&a.inner, &b.inner));
        Ok(())
    })
}

/// Zhang transformation `Ψ(x)`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_psi(
    alg: *const QospAlgebra,
    x: *const QospElement,
    out: *mut *mut QospElement,
) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let x = borrow(x)?;
        let out = out_ptr(out)?;
        same_rank(alg, x)?;
        *out = new_element(x.rank, psi(&alg.inner, &x.inner));
        Ok(())
    })
}

/// Harish-Chandra projection of `x` onto its torus part.
///
/// # Safety
/// `x` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_upsilon(x: *const QospElement, out: *mut *mut QospElement) -> QospStatus {
    guard(|| {
        let x = borrow(x)?;
        let out = out_ptr(out)?;
        *out = new_element(x.rank, upsilon(&x.inner).to_element());
        Ok(())
    })
}

/// # Safety
/// `x` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_element_is_zero(x: *const QospElement, out: *mut bool) -> QospStatus {
    guard(|| {
        let x = borrow(x)?;
        *out_ptr(out)? = x.inner.is_zero();
        Ok(())
    })
}

/// Whether `x` lies in the image `Ψ(U)`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_in_bar(alg: *const QospAlgebra, x: *const QospElement, out: *mut bool) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let x = borrow(x)?;
        let out = out_ptr(out)?;
        same_rank(alg, x)?;
        *out = in_bar(&alg.inner, &x.inner);
        Ok(())
    })
}

/// Central element `z_{2λ}` for `2λ` given by `len` twice-coordinates,
/// solved on the window of the given height.
///
/// # Safety
/// `two_lambda` must point to `len` readable integers; `alg` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_casimir(
    alg: *const QospAlgebra,
    two_lambda: *const i32,
    len: usize,
    height: u32,
    out: *mut *mut QospElement,
) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let coords = std::slice::from_raw_parts(borrow(two_lambda)?, len);
        let out = out_ptr(out)?;
        if len != alg.inner.rank() {
            return Err(Error::RankMismatch { expected: alg.inner.rank(), got: len }.into());
        }
        let sol = solve_central(&alg.inner, &Weight::from_twice(coords), height as usize)?;
        if !sol.certified {
            return Err(Fail(QospStatus::Math, "solution is not central".into()));
        }
        *out = new_element(len, sol.element);
        Ok(())
    })
}

/// Annihilation criterion for the character with `Λ(K_{β_i}) = values[i]`
/// (scalar expressions) and `θ` given by the low `rank` bits of `theta_mask`.
///
/// # Safety
/// `values` must point to `len` NUL-terminated strings; `alg` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qosp_annihilation_criterion(
    alg: *const QospAlgebra,
    values: *const *const c_char,
    len: usize,
    theta_mask: u32,
    out: *mut bool,
) -> QospStatus {
    guard(|| {
        let alg = borrow(alg)?;
        let ptrs = std::slice::from_raw_parts(borrow(values)?, len);
        let out = out_ptr(out)?;
        let l = alg.inner.rank();
        let mut vals = Vec::with_capacity(len);
        for &p in ptrs {
            vals.push(parse_scalar(&alg.inner, c_str(p)?)?);
        }
        let chi = Character::new(vals, GammaElement::from_mask(theta_mask & ((1u32 << l) - 1), l))?;
        *out = annihilation_criterion(&alg.inner, &chi);
        Ok(())
    })
}

/// Message for the last failed call on this thread (empty after a success).
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn qosp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
