//! C ABI for quadrep.
//!
//! Every fallible call returns a [`QuadrepStatus`]. On anything but
//! `QUADREP_STATUS_OK`, [`quadrep_last_error`] describes the problem. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`quadrep_string_free`]; handles are released with their `_free`
//! function. Passing NULL to a `_free` function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use quadrep::descent_int::{descend, DescentError};
use quadrep::descent_poly::{descend_poly_form, PolyDescentError};
use quadrep::forms::{resolve_form, QuadraticForm, Representation};
use quadrep::lift::{lift, verify_root};
use quadrep::rings::{DivConvention, Element, Ring};

/// Result of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrepStatus {
    Ok = 0,
    /// The algorithm ran and reported failure, e.g. a step limit.
    Failure = 1,
    InvalidInput = 2,
    Internal = 3,
    NullPointer = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrepRing {
    Integers = 0,
    /// Polynomials over F_p; pass the prime separately.
    PolyFp = 1,
    PolyRationals = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrepConvention {
    Floor = 0,
    LeastAbs = 1,
}

/// A form `x² + gxy + hy²` over one ring.
pub struct QuadrepForm {
    form: QuadraticForm,
}

/// A representation `m = u·Q(x, y)`, plus the descent trace for integers.
pub struct QuadrepRepresentation {
    rep: Representation,
    trace_json: Option<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

struct Fail(QuadrepStatus, String);

fn invalid(e: impl std::fmt::Display) -> Fail {
    Fail(QuadrepStatus::InvalidInput, e.to_string())
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QuadrepStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            QuadrepStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside quadrep");
            QuadrepStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(QuadrepStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid(format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(QuadrepStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(QuadrepStatus::NullPointer, format!("{what} is NULL")));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn element(ring: Ring, s: &str, what: &str) -> Result<Element, Fail> {
    ring.parse(s).map_err(|e| invalid(format!("{what}: {e}")))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn quadrep_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failing call on this thread; empty after a
/// successful call. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn quadrep_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quadrep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the form `x² + gxy + hy²`. `prime` is read only for
/// `QUADREP_RING_POLY_FP`. Coefficients use the text syntax, e.g. `"1+2*X"`.
///
/// # Safety
/// `g` and `h` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn quadrep_form_new(
    ring: QuadrepRing,
    prime: u64,
    g: *const c_char,
    h: *const c_char,
    out: *mut *mut QuadrepForm,
) -> QuadrepStatus {
    guard(|| {
        let ring = match ring {
            QuadrepRing::Integers => Ring::Integers,
            QuadrepRing::PolyFp => Ring::poly_fp(prime).map_err(invalid)?,
            QuadrepRing::PolyRationals => Ring::PolyOverRationals,
        };
        let g = element(ring, text(g, "g")?, "g")?;
        let h = element(ring, text(h, "h")?, "h")?;
        let form = QuadraticForm::new(g, h).map_err(invalid)?;
        put(out, Box::into_raw(Box::new(QuadrepForm { form })), "out")
    })
}

/// # Safety
/// `form` must come from [`quadrep_form_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quadrep_form_free(form: *mut QuadrepForm) {
    if !form.is_null() {
        drop(Box::from_raw(form));
    }
}

/// Writes `Q(x, y)` to `out`.
///
/// # Safety
/// Pointers must be valid; `out` receives a string to free with
/// [`quadrep_string_free`].
#[no_mangle]
pub unsafe extern "C" fn quadrep_form_evaluate(
    form: *const QuadrepForm,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> QuadrepStatus {
    guard(|| {
        let form = &handle(form, "form")?.form;
        let ring = form.ring();
        let v = form
            .evaluate(&element(ring, text(x, "x")?, "x")?, &element(ring, text(y, "y")?, "y")?)
            .map_err(invalid)?;
        put(out, owned(v.to_string()), "out")
    })
}

/// Lifts `m = u·Q(x, y)` to a root `z0` of `Q(z, 1)` modulo `m`.
///
/// # Safety
/// Pointers must be valid; `out_m` and `out_z0` receive strings to free
/// with [`quadrep_string_free`].
#[no_mangle]
pub unsafe extern "C" fn quadrep_lift(
    form: *const QuadrepForm,
    x: *const c_char,
    y: *const c_char,
    u: *const c_char,
    out_m: *mut *mut c_char,
    out_z0: *mut *mut c_char,
) -> QuadrepStatus {
    guard(|| {
        let form = &handle(form, "form")?.form;
        let ring = form.ring();
        let rep = Representation::new(
            element(ring, text(x, "x")?, "x")?,
            element(ring, text(y, "y")?, "y")?,
            element(ring, text(u, "u")?, "u")?,
        );
        let l = lift(form, &rep).map_err(invalid)?;
        if out_m.is_null() || out_z0.is_null() {
            return Err(Fail(QuadrepStatus::NullPointer, "output pointer is NULL".into()));
        }
        put(out_m, owned(l.m.to_string()), "out_m")?;
        put(out_z0, owned(l.z0.to_string()), "out_z0")
    })
}

/// Sets `*out` to whether `m` divides `Q(z, 1)`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn quadrep_verify_root(
    form: *const QuadrepForm,
    m: *const c_char,
    z: *const c_char,
    out: *mut bool,
) -> QuadrepStatus {
    guard(|| {
        let form = &handle(form, "form")?.form;
        let ring = form.ring();
        let ok = verify_root(form, &element(ring, text(m, "m")?, "m")?, &element(ring, text(z, "z")?, "z")?);
        put(out, ok, "out")
    })
}

/// Descends from a root `z` of `Q(z, 1)` modulo `m` to `m = u·Q(x, y)`.
/// Integer forms must be catalog forms; `max_steps = 0` picks the default
/// limit. Returns `QUADREP_STATUS_FAILURE` when the algorithm gives up.
///
/// # Safety
/// Pointers must be valid; `out` receives a handle to free with
/// [`quadrep_representation_free`].
#[no_mangle]
pub unsafe extern "C" fn quadrep_descend(
    form: *const QuadrepForm,
    m: *const c_char,
    z: *const c_char,
    convention: QuadrepConvention,
    max_steps: u64,
    out: *mut *mut QuadrepRepresentation,
) -> QuadrepStatus {
    guard(|| {
        let form = &handle(form, "form")?.form;
        let ring = form.ring();
        let (m, z) = (text(m, "m")?, text(z, "z")?);
        let result = if ring == Ring::Integers {
            let small = |e: &Element| e.as_int().and_then(|v| i64::try_from(v).ok());
            let entry = small(form.g())
                .zip(small(form.h()))
                .and_then(|(g, h)| resolve_form(g, h))
                .ok_or_else(|| invalid("the form is not in the catalogs"))?;
            let parse = |s: &str, what: &str| s.trim().parse::<BigInt>().map_err(|e| invalid(format!("{what}: {e}")));
            let conv = match convention {
                QuadrepConvention::Floor => DivConvention::Floor,
                QuadrepConvention::LeastAbs => DivConvention::LeastAbs,
            };
            let limit = (max_steps > 0).then_some(max_steps);
            let outcome = descend(&entry, &parse(m, "m")?, &parse(z, "z")?, conv, limit).map_err(|e| match e {
                DescentError::WrongSignClass(_) => Fail(QuadrepStatus::Internal, e.to_string()),
                other => invalid(other),
            })?;
            let trace_json = Some(outcome.trace.to_json().to_string());
            match outcome.result {
                Ok(rep) => QuadrepRepresentation { rep, trace_json },
                Err(f) => return Err(Fail(QuadrepStatus::Failure, f.to_string())),
            }
        } else {
            let rep = descend_poly_form(form, &element(ring, m, "m")?, &element(ring, z, "z")?).map_err(|e| match e {
                PolyDescentError::NotRepresentable(_) => Fail(QuadrepStatus::Failure, e.to_string()),
                other => invalid(other),
            })?;
            QuadrepRepresentation { rep, trace_json: None }
        };
        put(out, Box::into_raw(Box::new(result)), "out")
    })
}

/// # Safety
/// `rep` must come from [`quadrep_descend`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn quadrep_representation_free(rep: *mut QuadrepRepresentation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Which component [`quadrep_representation_get`] returns.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrepComponent {
    X = 0,
    Y = 1,
    U = 2,
    /// JSON trace of an integer descent; NULL for polynomial rings.
    TraceJson = 3,
}

/// A component of `rep` as a new string (free with
/// [`quadrep_string_free`]), or NULL if `rep` is NULL or has no trace.
///
/// # Safety
/// `rep` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn quadrep_representation_get(
    rep: *const QuadrepRepresentation,
    component: QuadrepComponent,
) -> *mut c_char {
    let Some(r) = rep.as_ref() else { return ptr::null_mut() };
    match component {
        QuadrepComponent::X => owned(r.rep.x.to_string()),
        QuadrepComponent::Y => owned(r.rep.y.to_string()),
        QuadrepComponent::U => owned(r.rep.u.to_string()),
        QuadrepComponent::TraceJson => r.trace_json.clone().map(owned).unwrap_or(ptr::null_mut()),
    }
}
