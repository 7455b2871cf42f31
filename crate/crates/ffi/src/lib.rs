//! C ABI for the eulergamma library.
//!
//! All entry points return an [`EgStatus`]; values come back through out
//! pointers. Rich evaluations return an opaque `EgReport*` that must be
//! released with [`eg_report_free`].

use eulergamma::beta_relations::{beta, gamma_reflection, BetaMode};
use eulergamma::constants::{euler_gamma, GammaMethod};
use eulergamma::curve_analysis::find_minimum;
use eulergamma::finite_differences::{diff_sum_closed, diff_sum_direct, DiffSumSpec};
use eulergamma::gamma_reprs::{factorial, log_factorial, MethodId};
use eulergamma::Error;
use std::ffi::{c_char, CStr};

/// Status of a library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgStatus {
    Ok = 0,
    /// Argument outside the operation's domain.
    Domain = 1,
    /// Evaluation at a pole of the factorial.
    Pole = 2,
    /// Requested index beyond a table capacity.
    Capacity = 3,
    /// Budget exhausted before convergence.
    Budget = 4,
    /// Iteration failed to converge.
    NonConvergence = 5,
    /// Incomplete caller-supplied specification.
    Specification = 6,
    /// Curvature undefined (vanishing second derivative).
    DegenerateCurvature = 7,
    /// Fractional-derivative order at a denominator pole.
    DegenerateOrder = 8,
    /// Overflow risk in an alternating power sum.
    Overflow = 9,
    /// Null pointer or unparseable string argument.
    InvalidArgument = 10,
}

fn status_of(e: &Error) -> EgStatus {
    match e {
        Error::Domain(_) => EgStatus::Domain,
        Error::Pole(_) => EgStatus::Pole,
        Error::Capacity(_) => EgStatus::Capacity,
        Error::BudgetExceeded { .. } => EgStatus::Budget,
        Error::NonConvergence { .. } => EgStatus::NonConvergence,
        Error::Specification(_) => EgStatus::Specification,
        Error::DegenerateCurvature(_) => EgStatus::DegenerateCurvature,
        Error::DegenerateOrder(_) => EgStatus::DegenerateOrder,
        Error::Overflow => EgStatus::Overflow,
    }
}

/// Human-readable name of a status code (static storage, never freed).
#[no_mangle]
pub extern "C" fn eg_status_name(status: EgStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        EgStatus::Ok => b"ok\0",
        EgStatus::Domain => b"domain error\0",
        EgStatus::Pole => b"pole\0",
        EgStatus::Capacity => b"capacity exceeded\0",
        EgStatus::Budget => b"budget exceeded\0",
        EgStatus::NonConvergence => b"no convergence\0",
        EgStatus::Specification => b"specification error\0",
        EgStatus::DegenerateCurvature => b"degenerate curvature\0",
        EgStatus::DegenerateOrder => b"degenerate order\0",
        EgStatus::Overflow => b"overflow risk\0",
        EgStatus::InvalidArgument => b"invalid argument\0",
    };
    s.as_ptr() as *const c_char
}

/// Opaque evaluation report (value, truncation index, error estimate).
pub struct EgReport {
    value: f64,
    terms_used: usize,
    error_estimate: f64,
}

/// x! = Gamma(x+1).
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_factorial(x: f64, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    match factorial(x) {
        Ok(v) => {
            *out = v;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// log(x!) by a named representation ("F1".."F7", "gauss_limit",
/// "weierstrass", "integral_exp", "integral_log", "auto"); `terms` = 0 picks
/// the method's asymptotic/default truncation where applicable.
///
/// # Safety
/// `method` must be a NUL-terminated string; `out` receives an owned report
/// pointer that the caller must pass to [`eg_report_free`].
#[no_mangle]
pub unsafe extern "C" fn eg_log_factorial(
    x: f64,
    method: *const c_char,
    terms: usize,
    out: *mut *mut EgReport,
) -> EgStatus {
    if method.is_null() || out.is_null() {
        return EgStatus::InvalidArgument;
    }
    let Ok(name) = CStr::from_ptr(method).to_str() else {
        return EgStatus::InvalidArgument;
    };
    let Some(m) = MethodId::parse(name) else {
        return EgStatus::InvalidArgument;
    };
    let terms = if terms == 0 && !matches!(m, MethodId::F7Stirling | MethodId::Auto) {
        100_000
    } else {
        terms
    };
    match log_factorial(x, m, terms) {
        Ok(r) => {
            *out = Box::into_raw(Box::new(EgReport {
                value: r.value,
                terms_used: r.terms_used,
                error_estimate: r.error_estimate,
            }));
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// # Safety
/// `report` must be a live pointer from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_report_value(report: *const EgReport) -> f64 {
    if report.is_null() {
        return f64::NAN;
    }
    (*report).value
}

/// # Safety
/// `report` must be a live pointer from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_report_error_estimate(report: *const EgReport) -> f64 {
    if report.is_null() {
        return f64::NAN;
    }
    (*report).error_estimate
}

/// # Safety
/// `report` must be a live pointer from this library.
#[no_mangle]
pub unsafe extern "C" fn eg_report_terms(report: *const EgReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).terms_used
}

/// Release a report returned by [`eg_log_factorial`]. Null is ignored.
///
/// # Safety
/// `report` must be a pointer previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn eg_report_free(report: *mut EgReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// B(x, y) through the gamma route.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_beta(x: f64, y: f64, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    match beta(x, y, BetaMode::ViaGamma) {
        Ok(v) => {
            *out = v;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Gamma(x) Gamma(1-x).
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_gamma_reflection(x: f64, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    match gamma_reflection(x) {
        Ok(v) => {
            *out = v;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Alternating m-th difference sum of x^(m+lambda): direct summation.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_diff_sum_direct(m: u32, lambda: u32, x: f64, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    match diff_sum_direct(&DiffSumSpec { m, lambda, x }) {
        Ok(v) => {
            *out = v;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Alternating m-th difference sum: closed-form transform evaluation.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_diff_sum_closed(m: u32, lambda: u32, x: f64, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    match diff_sum_closed(&DiffSumSpec { m, lambda, x }) {
        Ok(v) => {
            *out = v;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Smallest-ordinate point of Gamma(x+1) on (0, 1): abscissa, ordinate and
/// curvature radius.
///
/// # Safety
/// All three out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn eg_find_minimum(
    tol: f64,
    out_x: *mut f64,
    out_y: *mut f64,
    out_radius: *mut f64,
) -> EgStatus {
    if out_x.is_null() || out_y.is_null() || out_radius.is_null() {
        return EgStatus::InvalidArgument;
    }
    match find_minimum(tol) {
        Ok(pt) => {
            *out_x = pt.x;
            *out_y = pt.y;
            *out_radius = pt.curvature_radius.unwrap_or(f64::NAN);
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Euler-Mascheroni constant: route 0 = alternating zeta series,
/// 1 = shifted zeta series, 2 = integral.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn eg_euler_gamma(route: u32, terms: usize, out: *mut f64) -> EgStatus {
    if out.is_null() {
        return EgStatus::InvalidArgument;
    }
    let method = match route {
        0 => GammaMethod::ZetaAlternating,
        1 => GammaMethod::ZetaShifted,
        2 => GammaMethod::Integral,
        _ => return EgStatus::InvalidArgument,
    };
    match euler_gamma(method, terms) {
        Ok(e) => {
            *out = e.value;
            EgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
