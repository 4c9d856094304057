//! C ABI over `ci-ideal-lab`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`CiStatus`]; on anything but `CI_STATUS_OK` a message is kept per thread
//! and can be fetched with [`ci_last_error`]. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`ci_string_free`]. No call unwinds across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ci_ideal_lab::budget::Budget;
use ci_ideal_lab::grid::{GridParams, ZeroSet};
use ci_ideal_lab::groebner::{verify_gb, GroebnerBasis};
use ci_ideal_lab::hypergraph::{build_hs, closure};
use ci_ideal_lab::ideals::{
    build_f_empty, build_fjs, build_fs, build_hypergraph_ideal, build_ic, build_next_minors, IdealPresentation,
};
use ci_ideal_lab::poly::{Polynomial, TermOrder};
use ci_ideal_lab::Error;

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CiStatus {
    Ok = 0,
    /// Malformed text, out-of-range parameters or an unknown name.
    InvalidArgument = 1,
    NullPointer = 2,
    /// A resource cap stopped the computation.
    Budget = 3,
    /// The inputs fall outside the hypotheses of the requested construction.
    Hypothesis = 4,
    /// An internal panic was caught.
    Internal = 5,
}

pub struct CiPolynomial {
    inner: Polynomial,
}

pub struct CiIdeal {
    inner: IdealPresentation,
}

/// A reduced lexicographic Gröbner basis.
pub struct CiGroebner {
    inner: GroebnerBasis,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg.into()));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> CiStatus {
    match e {
        Error::Budget(_) => CiStatus::Budget,
        Error::Hypothesis(_) | Error::Unverified => CiStatus::Hypothesis,
        _ => CiStatus::InvalidArgument,
    }
}

/// Runs `f`, mapping errors and panics to a status.
fn guard<F: FnOnce() -> Result<(), (CiStatus, String)>>(f: F) -> CiStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CiStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CiStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (CiStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CiStatus, String) {
    (CiStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CiStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (CiStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CiStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut *mut T, what: &str) -> Result<&'a mut *mut T, (CiStatus, String)> {
    let slot = p.as_mut().ok_or_else(|| null(what))?;
    *slot = ptr::null_mut();
    Ok(slot)
}

unsafe fn budget_arg(p: *const c_char) -> Result<Budget, (CiStatus, String)> {
    if p.is_null() {
        return Budget::from_env().map_err(lib_err);
    }
    text(p, "budget")?.parse().map_err(lib_err)
}

fn c_string(s: &str) -> *mut c_char {
    // library text never holds NUL
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Library version, a static string (do not free).
#[no_mangle]
pub extern "C" fn ci_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the calling thread's last error message, or null when the last
/// call succeeded. Free with `ci_string_free`.
#[no_mangle]
pub extern "C" fn ci_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_deref().map_or(ptr::null_mut(), c_string))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `x_1_1_1*x_2_2_1 - x_1_2_1*x_2_1_1` style text.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ci_polynomial_parse(src: *const c_char, out_poly: *mut *mut CiPolynomial) -> CiStatus {
    guard(|| {
        let slot = out(out_poly, "out")?;
        let f: Polynomial = text(src, "src")?.parse().map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(CiPolynomial { inner: f }));
        Ok(())
    })
}

/// Canonical text of a polynomial, or null for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_polynomial_to_string(poly: *const CiPolynomial) -> *mut c_char {
    match poly.as_ref() {
        Some(p) => c_string(&p.inner.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `poly` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ci_polynomial_free(poly: *mut CiPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Builds a named generator list on the `d x (k1*k2)` grid matrix.
///
/// `kind` is one of `ic`, `empty`, `fs`, `fjs`, `next`, `hypergraph`;
/// `zeros` is `"r,c;r,c"` (null or empty for the empty set).
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_new(
    kind: *const c_char,
    d: usize,
    k1: usize,
    k2: usize,
    t: usize,
    zeros: *const c_char,
    out_ideal: *mut *mut CiIdeal,
) -> CiStatus {
    guard(|| {
        let slot = out(out_ideal, "out")?;
        let kind = text(kind, "kind")?;
        let zeros = if zeros.is_null() { "" } else { text(zeros, "zeros")? };
        let p = GridParams::new(d, k1, k2, t).map_err(lib_err)?;
        let s = ZeroSet::parse(p, zeros).map_err(lib_err)?;
        let ideal = match kind {
            "ic" => Ok(build_ic(&p)),
            "empty" => build_f_empty(&p),
            "fs" => build_fs(&s),
            "fjs" => build_fjs(&s),
            "next" => Ok(build_next_minors(&s)),
            "hypergraph" => build_hypergraph_ideal(&closure(&build_hs(&s))),
            other => return Err((CiStatus::InvalidArgument, format!("unknown ideal kind {other:?}"))),
        }
        .map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(CiIdeal { inner: ideal }));
        Ok(())
    })
}

/// An ad-hoc ideal from `n` polynomial handles (copied; zeros and repeats
/// dropped). The grid parameters only label the result.
///
/// # Safety
/// `polys` must point to `n` live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_from_polynomials(
    polys: *const *const CiPolynomial,
    n: usize,
    d: usize,
    k1: usize,
    k2: usize,
    t: usize,
    out_ideal: *mut *mut CiIdeal,
) -> CiStatus {
    guard(|| {
        let slot = out(out_ideal, "out")?;
        let p = GridParams::new(d, k1, k2, t).map_err(lib_err)?;
        if polys.is_null() && n > 0 {
            return Err(null("polys"));
        }
        let mut gens = Vec::with_capacity(n);
        for i in 0..n {
            gens.push(handle(*polys.add(i), "polynomial")?.inner.clone());
        }
        let ideal = IdealPresentation::from_polynomials("adhoc", p, gens);
        *slot = Box::into_raw(Box::new(CiIdeal { inner: ideal }));
        Ok(())
    })
}

/// Number of generators; 0 for a null handle.
///
/// # Safety
/// `ideal` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_len(ideal: *const CiIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.inner.len())
}

/// A fresh copy of generator `index`, or null when out of range.
///
/// # Safety
/// `ideal` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_generator(ideal: *const CiIdeal, index: usize) -> *mut CiPolynomial {
    match ideal.as_ref().and_then(|i| i.inner.generators.get(index)) {
        Some(f) => Box::into_raw(Box::new(CiPolynomial { inner: f.clone() })),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `ideal` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_free(ideal: *mut CiIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Buchberger's criterion on the generators as given (lexicographic order).
/// `budget` uses the CLI syntax; null means the environment default.
///
/// # Safety
/// `ideal` live; `budget` null or NUL-terminated; both out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ci_ideal_verify_gb(
    ideal: *const CiIdeal,
    budget: *const c_char,
    is_groebner: *mut bool,
    leading_squarefree: *mut bool,
) -> CiStatus {
    guard(|| {
        let ideal = handle(ideal, "ideal")?;
        if is_groebner.is_null() || leading_squarefree.is_null() {
            return Err(null("out"));
        }
        let b = budget_arg(budget)?;
        let v = verify_gb(&ideal.inner.generators, TermOrder::Lex, &b).map_err(lib_err)?;
        *is_groebner = v.is_groebner;
        *leading_squarefree = v.all_leading_squarefree;
        Ok(())
    })
}

/// Reduced lexicographic Gröbner basis of an ideal.
///
/// # Safety
/// `ideal` live; `budget` null or NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_compute(
    ideal: *const CiIdeal,
    budget: *const c_char,
    out_basis: *mut *mut CiGroebner,
) -> CiStatus {
    guard(|| {
        let slot = out(out_basis, "out")?;
        let ideal = handle(ideal, "ideal")?;
        let b = budget_arg(budget)?;
        let gb = GroebnerBasis::compute(&ideal.inner.generators, TermOrder::Lex, &b).map_err(lib_err)?;
        *slot = Box::into_raw(Box::new(CiGroebner { inner: gb }));
        Ok(())
    })
}

/// Number of basis elements; 0 for a null handle.
///
/// # Safety
/// `basis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_len(basis: *const CiGroebner) -> usize {
    basis.as_ref().map_or(0, |g| g.inner.len())
}

/// A fresh copy of basis element `index`, or null when out of range.
///
/// # Safety
/// `basis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_element(basis: *const CiGroebner, index: usize) -> *mut CiPolynomial {
    match basis.as_ref().and_then(|g| g.inner.basis().get(index)) {
        Some(f) => Box::into_raw(Box::new(CiPolynomial { inner: f.clone() })),
        None => ptr::null_mut(),
    }
}

/// Ideal membership of `poly`.
///
/// # Safety
/// Handles live; `member` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_contains(
    basis: *const CiGroebner,
    poly: *const CiPolynomial,
    member: *mut bool,
) -> CiStatus {
    guard(|| {
        let g = handle(basis, "basis")?;
        let f = handle(poly, "poly")?;
        let member = member.as_mut().ok_or_else(|| null("member"))?;
        *member = g.inner.contains(&f.inner);
        Ok(())
    })
}

/// Remainder of `poly` on division by the basis.
///
/// # Safety
/// Handles live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_normal_form(
    basis: *const CiGroebner,
    poly: *const CiPolynomial,
    out_poly: *mut *mut CiPolynomial,
) -> CiStatus {
    guard(|| {
        let slot = out(out_poly, "out")?;
        let g = handle(basis, "basis")?;
        let f = handle(poly, "poly")?;
        *slot = Box::into_raw(Box::new(CiPolynomial { inner: g.inner.normal_form(&f.inner) }));
        Ok(())
    })
}

/// # Safety
/// `basis` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn ci_groebner_free(basis: *mut CiGroebner) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Runs one command-line invocation in process. `argv[0]` is the program
/// name. Returns the exit code (0 pass, 1 fail, 2 budget, 3 usage) or -1 on
/// a null argument or internal panic. The captured streams are written to
/// `out_stdout` / `out_stderr` when those are non-null.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; out pointers null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ci_run(
    argc: c_int,
    argv: *const *const c_char,
    out_stdout: *mut *mut c_char,
    out_stderr: *mut *mut c_char,
) -> c_int {
    let mut code = -1;
    let status = guard(|| {
        if argc < 0 || (argv.is_null() && argc > 0) {
            return Err(null("argv"));
        }
        let mut args = Vec::with_capacity(argc as usize);
        for i in 0..argc as usize {
            args.push(text(*argv.add(i), "argv entry")?.to_string());
        }
        let outcome = ci_ideal_lab::cli::run(args);
        if let Some(slot) = out_stdout.as_mut() {
            *slot = c_string(&outcome.stdout);
        }
        if let Some(slot) = out_stderr.as_mut() {
            *slot = c_string(&outcome.stderr);
        }
        code = outcome.code;
        Ok(())
    });
    if status == CiStatus::Ok {
        code
    } else {
        -1
    }
}
