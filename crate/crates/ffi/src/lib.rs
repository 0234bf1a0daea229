//! C ABI over the `kolchin` crate.
//!
//! Every fallible function returns a [`KolchinStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`kolchin_last_error`]. Handles are opaque and must be released
//! with the matching `*_free` function; strings returned through `char **`
//! must be released with [`kolchin_string_free`].

use std::cell::RefCell;
use std::cmp::Ordering;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kolchin::diffrank::{compare_rank, parse_monomial};
use kolchin::expsets::{parse_exponent_set, ExponentSet};
use kolchin::lindiff::{self, parse_system};
use kolchin::{bounds, Error, Limits, LinearDiffSystem, NumericalPolynomial};
use num_bigint::BigInt;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KolchinStatus {
    Ok = 0,
    /// A precondition of the operation does not hold.
    DomainError = 1,
    /// A null pointer, a non-UTF-8 string or an out-of-range argument.
    InvalidArgument = 2,
    /// A configured cap was hit.
    ResourceLimit = 3,
    /// Malformed input text.
    ParseError = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

/// A numerical polynomial.
pub struct KolchinPoly(NumericalPolynomial);

/// A subset of `N^m`, kept as its generators.
pub struct KolchinExpSet(ExponentSet);

/// A linear constant-coefficient differential system.
pub struct KolchinSystem(LinearDiffSystem);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(KolchinStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ResourceLimit(_) => KolchinStatus::ResourceLimit,
            Error::Parse { .. } => KolchinStatus::ParseError,
            _ => KolchinStatus::DomainError,
        };
        Failure(status, e.to_string())
    }
}

fn invalid(msg: &str) -> Failure {
    Failure(KolchinStatus::InvalidArgument, msg.to_owned())
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F>(f: F) -> KolchinStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            KolchinStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_owned());
            set_last_error(format!("internal panic: {msg}"));
            KolchinStatus::Panic
        }
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| invalid(&format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| invalid("result contains a nul byte"))?;
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

unsafe fn int_slice<'a>(p: *const i64, len: usize) -> Result<&'a [i64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(invalid("array pointer is null"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn ordering_code(o: Ordering) -> i32 {
    match o {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn kolchin_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kolchin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- numerical polynomials ----

/// Parses a polynomial from JSON or a comma-separated list of standard
/// coefficients, highest first (`"0,2,-1"`).
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_parse(
    text: *const c_char,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| {
        let p = NumericalPolynomial::parse(c_str(text, "text")?)?;
        write_handle(out, KolchinPoly(p))
    })
}

/// Builds a polynomial from `len` standard coefficients, highest first.
///
/// # Safety
/// `coeffs` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_from_coeffs(
    coeffs: *const i64,
    len: usize,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| {
        let c = int_slice(coeffs, len)?;
        if c.is_empty() {
            return Err(invalid("at least one coefficient is required"));
        }
        let p = NumericalPolynomial::from_standard(c.iter().copied())?;
        write_handle(out, KolchinPoly(p))
    })
}

/// Interpolates the polynomial of degree at most `m` through `values[k]` at
/// `start + k`.
///
/// # Safety
/// `values` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_interpolate(
    values: *const i64,
    len: usize,
    start: u64,
    m: usize,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| {
        let v: Vec<BigInt> = int_slice(values, len)?
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let p = NumericalPolynomial::interpolate(&v, start, m)?;
        write_handle(out, KolchinPoly(p))
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_free(p: *mut KolchinPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_degree_bound(
    p: *const KolchinPoly,
    out: *mut usize,
) -> KolchinStatus {
    guard(|| write(out, handle(p, "polynomial")?.0.degree_bound()))
}

/// Value at `s` as a decimal string.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_evaluate(
    p: *const KolchinPoly,
    s: u64,
    out: *mut *mut c_char,
) -> KolchinStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.evaluate_u64(s).to_string()))
}

/// Eventual comparison: writes -1, 0 or 1.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_compare(
    a: *const KolchinPoly,
    b: *const KolchinPoly,
    out: *mut i32,
) -> KolchinStatus {
    guard(|| {
        let o = handle(a, "a")?.0.compare_eventual(&handle(b, "b")?.0);
        write(out, ordering_code(o))
    })
}

/// JSON form `{"m": m, "standard_coeffs": [...]}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_to_json(
    p: *const KolchinPoly,
    out: *mut *mut c_char,
) -> KolchinStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.to_json()))
}

/// Human-readable form such as `2*t + 1`.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_poly_to_string(
    p: *const KolchinPoly,
    out: *mut *mut c_char,
) -> KolchinStatus {
    guard(|| write_string(out, handle(p, "polynomial")?.0.to_string()))
}

// ---- exponent sets ----

/// Parses an exponent set, one generator per line. `m = 0` infers the
/// ambient dimension from the tuples.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_expset_parse(
    text: *const c_char,
    m: usize,
    out: *mut *mut KolchinExpSet,
) -> KolchinStatus {
    guard(|| {
        let set = parse_exponent_set(c_str(text, "text")?, (m > 0).then_some(m))?;
        write_handle(out, KolchinExpSet(set))
    })
}

/// # Safety
/// `e` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kolchin_expset_free(e: *mut KolchinExpSet) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Dimension polynomial of the set.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_expset_omega(
    e: *const KolchinExpSet,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| write_handle(out, KolchinPoly(handle(e, "set")?.0.dimension_polynomial())))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_expset_stability_bound(
    e: *const KolchinExpSet,
    out: *mut u64,
) -> KolchinStatus {
    guard(|| write(out, handle(e, "set")?.0.stability_bound()))
}

/// Number of vectors of order at most `s` outside the set, by enumeration
/// (`inclusion_exclusion = false`) or by inclusion-exclusion.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_expset_volume(
    e: *const KolchinExpSet,
    s: u64,
    inclusion_exclusion: bool,
    out: *mut *mut c_char,
) -> KolchinStatus {
    guard(|| {
        let set = &handle(e, "set")?.0;
        let v = if inclusion_exclusion {
            set.volume_ie(s)?
        } else {
            set.volume(s)?
        };
        write_string(out, v.to_string())
    })
}

// ---- linear systems ----

/// Parses a system in the `m = ..`, `n = ..`, `eq: ..` format.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_parse(
    text: *const c_char,
    out: *mut *mut KolchinSystem,
) -> KolchinStatus {
    guard(|| {
        let sys = parse_system(c_str(text, "text")?)?;
        write_handle(out, KolchinSystem(sys))
    })
}

/// # Safety
/// `sys` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_free(sys: *mut KolchinSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Kolchin polynomial from the leaders of the Groebner basis.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_omega(
    sys: *const KolchinSystem,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| {
        write_handle(
            out,
            KolchinPoly(lindiff::kolchin_polynomial(&handle(sys, "system")?.0)),
        )
    })
}

/// Kolchin polynomial from sampled prolongation dimensions.
///
/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_omega_via_prolongation(
    sys: *const KolchinSystem,
    out: *mut *mut KolchinPoly,
) -> KolchinStatus {
    guard(|| {
        let p = lindiff::kolchin_via_prolongation(&handle(sys, "system")?.0)?;
        write_handle(out, KolchinPoly(p))
    })
}

/// # Safety
/// `sys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_prolongation_dimension(
    sys: *const KolchinSystem,
    s: u64,
    margin: u64,
    out: *mut u64,
) -> KolchinStatus {
    guard(|| {
        let d = lindiff::prolongation_dimension_with(
            &handle(sys, "system")?.0,
            s,
            margin,
            &Limits::default(),
        )?;
        write(out, d)
    })
}

/// Whether the Kolchin polynomial eventually dominates or equals `p`.
///
/// # Safety
/// `sys`, `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_omega_at_least(
    sys: *const KolchinSystem,
    p: *const KolchinPoly,
    out: *mut bool,
) -> KolchinStatus {
    guard(|| {
        write(
            out,
            lindiff::omega_at_least(&handle(sys, "system")?.0, &handle(p, "polynomial")?.0),
        )
    })
}

/// Whether the Kolchin polynomial equals `p`.
///
/// # Safety
/// `sys`, `p` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_system_omega_equals(
    sys: *const KolchinSystem,
    p: *const KolchinPoly,
    out: *mut bool,
) -> KolchinStatus {
    guard(|| {
        write(
            out,
            lindiff::omega_equals(&handle(sys, "system")?.0, &handle(p, "polynomial")?.0),
        )
    })
}

// ---- bounds and ranking ----

/// JSON object with `C`, `D`, `s0`, `s1` and `coeff_bound` as decimal strings.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_bounds_json(
    r: u64,
    m: u64,
    n: u64,
    out: *mut *mut c_char,
) -> KolchinStatus {
    guard(|| {
        bounds::BoundInputs::new(r, m, n)?;
        write_string(out, bounds::s1(r, m, n)?.to_json().to_string())
    })
}

/// Compares two monomials such as `d[1,0]x1` under the orderly ranking;
/// writes -1, 0 or 1.
///
/// # Safety
/// `a`, `b` must be valid C strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kolchin_rank_compare(
    a: *const c_char,
    b: *const c_char,
    out: *mut i32,
) -> KolchinStatus {
    guard(|| {
        let a = parse_monomial(c_str(a, "a")?, None)?;
        let b = parse_monomial(c_str(b, "b")?, None)?;
        write(out, ordering_code(compare_rank(&a, &b)?))
    })
}
