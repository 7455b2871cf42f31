//! Differential geometry of the curve y = Gamma(x+1): digamma / polygamma
//! series, tangent tables, point propagation, the minimum point with Euler's
//! quadratic refinement, and curvature.

use crate::constants::EULER_MASCHERONI;
use crate::error::{Error, Result};
use crate::gamma_reprs::{factorial, near_pole};

/// Default truncation for the digamma / polygamma series.
pub const DEFAULT_SERIES_TERMS: usize = 100_000;

/// One point of the curve with its tangent data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub x: f64,
    /// Ordinate y = Gamma(x+1).
    pub y: f64,
    /// tan(phi) = dy/dx.
    pub slope: f64,
    pub curvature_radius: Option<f64>,
}

/// d/dx log(x!) = -Delta + sum_{k>=1} x/(k(k+x)), with the two-term
/// Euler-Maclaurin tail x/N - x(x+1)/(2N^2). Arguments below -1 are reached
/// by differentiating the recurrence.
pub fn digamma_factorial(x: f64, terms: usize) -> Result<f64> {
    if near_pole(x) {
        return Err(Error::Pole(x));
    }
    if terms == 0 {
        return Err(Error::Domain("term count must be at least 1".into()));
    }
    if x < -1.0 {
        // D(x) = D(x+1) - 1/(x+1)
        let shift = (-1.0 - x).ceil() as usize;
        let mut v = digamma_factorial(x + shift as f64, terms)?;
        for j in 0..shift {
            v -= 1.0 / (x + 1.0 + j as f64);
        }
        return Ok(v);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in (1..=terms).rev() {
        let kf = k as f64;
        let t = x / (kf * (kf + x));
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let n = terms as f64;
    let tail = x / n - x * (x + 1.0) / (2.0 * n * n);
    Ok(-EULER_MASCHERONI + sum + tail)
}

/// sum_{k>=1} 1/(k+p)^m with an Euler-Maclaurin tail (m >= 2, p > -1).
pub fn polygamma_sum(m: u32, p: f64, terms: usize) -> Result<f64> {
    if m < 2 {
        return Err(Error::Domain("polygamma order starts at 2".into()));
    }
    if !(p > -1.0) {
        return Err(Error::Domain(format!("polygamma sums need p > -1, got {p}")));
    }
    if terms == 0 {
        return Err(Error::Domain("term count must be at least 1".into()));
    }
    let mf = m as f64;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in (1..=terms).rev() {
        let t = (k as f64 + p).powi(-(m as i32));
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let a = terms as f64 + 1.0 + p;
    let tail = a.powf(1.0 - mf) / (mf - 1.0) + 0.5 * a.powf(-mf) + mf * a.powf(-mf - 1.0) / 12.0
        - mf * (mf + 1.0) * (mf + 2.0) * a.powf(-mf - 3.0) / 720.0;
    Ok(sum + tail)
}

/// Ordinate and tangent slope at x.
pub fn curve_point(x: f64) -> Result<CurvePoint> {
    let y = factorial(x)?;
    let slope = y * digamma_factorial(x, DEFAULT_SERIES_TERMS)?;
    Ok(CurvePoint { x, y, slope, curvature_radius: None })
}

/// Direction of one recurrence step along the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Exact recurrence propagation: no series are evaluated.
/// Forward from (p, q, r): (p+1, q(p+1), r(p+1) + q).
/// Backward: (p-1, q/p, r/p - q/p^2), requiring p != 0.
pub fn propagate(pt: &CurvePoint, direction: Direction) -> Result<CurvePoint> {
    match direction {
        Direction::Forward => Ok(CurvePoint {
            x: pt.x + 1.0,
            y: pt.y * (pt.x + 1.0),
            slope: pt.slope * (pt.x + 1.0) + pt.y,
            curvature_radius: None,
        }),
        Direction::Backward => {
            if pt.x == 0.0 {
                return Err(Error::Domain("backward propagation undefined at p = 0".into()));
            }
            Ok(CurvePoint {
                x: pt.x - 1.0,
                y: pt.y / pt.x,
                slope: pt.slope / pt.x - pt.y / (pt.x * pt.x),
                curvature_radius: None,
            })
        }
    }
}

/// The local constants of the expansion around abscissa p:
/// P = d/dx log(x!) at p, and Q..W the polygamma sums of orders 2..7.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalConstants {
    pub p: f64,
    /// P, Q, R, S, T, V, W in order.
    pub values: [f64; 7],
}

impl LocalConstants {
    pub const NAMES: [&'static str; 7] = ["P", "Q", "R", "S", "T", "V", "W"];
}

pub fn local_constants(p: f64) -> Result<LocalConstants> {
    let mut values = [0.0f64; 7];
    values[0] = digamma_factorial(p, DEFAULT_SERIES_TERMS)?;
    for (i, v) in values.iter_mut().enumerate().skip(1) {
        *v = polygamma_sum(i as u32 + 1, p, DEFAULT_SERIES_TERMS)?;
    }
    Ok(LocalConstants { p, values })
}

/// Taylor coefficients c_1..c_order of psi/q around p, where
/// log(1 + psi/q) = P w + Q/2 w^2 - R/3 w^3 + S/4 w^4 - ... and
/// psi/q = exp(...) - 1 by exact power-series composition.
///
/// The printed letters of the source table carry alternating signs:
/// the series there reads c_1 w + c_2 w^2 - (-c_3) w^3 + c_4 w^4 - (-c_5) w^5.
pub fn ratio_series(p: f64, order: usize) -> Result<Vec<f64>> {
    if order > 8 {
        return Err(Error::Capacity("ratio series supports order <= 8".into()));
    }
    if order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    // log-series coefficients g_1..g_order
    let mut g = vec![0.0f64; order + 1];
    g[1] = digamma_factorial(p, DEFAULT_SERIES_TERMS)?;
    for j in 2..=order {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        g[j] = sign * polygamma_sum(j as u32, p, DEFAULT_SERIES_TERMS)? / j as f64;
    }
    // exp composition: n c_n = sum_{j=1}^{n} j g_j c_{n-j}, c_0 = 1
    let mut c = vec![0.0f64; order + 1];
    c[0] = 1.0;
    for n in 1..=order {
        let mut acc = 0.0;
        for j in 1..=n {
            acc += j as f64 * g[j] * c[n - j];
        }
        c[n] = acc / n as f64;
    }
    Ok(c[1..].to_vec())
}

/// Newton iteration for the smallest-ordinate point, started at x = 1/2 with
/// bisection fallback on [0.4, 0.5] if a step leaves (0, 1).
pub fn find_minimum(tol: f64) -> Result<CurvePoint> {
    if !(tol > 0.0) {
        return Err(Error::Domain("tol must be positive".into()));
    }
    let mut x = 0.5f64;
    let (mut lo, mut hi) = (0.4f64, 0.5f64);
    for _ in 0..50 {
        let d = digamma_factorial(x, DEFAULT_SERIES_TERMS)?;
        if d.abs() < tol {
            let y = factorial(x)?;
            let r = curvature_radius(x)?;
            return Ok(CurvePoint { x, y, slope: y * d, curvature_radius: Some(r) });
        }
        if d > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let dprime = polygamma_sum(2, x, DEFAULT_SERIES_TERMS)?;
        let next = x - d / dprime;
        x = if next > 0.0 && next < 1.0 { next } else { 0.5 * (lo + hi) };
    }
    Err(Error::NonConvergence { iterations: 50 })
}

/// Euler's one-step quadratic refinement of the minimum abscissa: with
/// omega = -1/26 - z, the stationarity condition becomes
/// quadratic z^2 + linear z + constant = 0 built from the local sums of
/// orders 2..9 at p = 1/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimumRefinement {
    pub constant: f64,
    pub linear: f64,
    pub quadratic: f64,
    /// Small root of the quadratic.
    pub z: f64,
    pub omega: f64,
    pub abscissa: f64,
}

pub fn minimum_refinement_step() -> Result<MinimumRefinement> {
    let u0: f64 = 1.0 / 26.0;
    let p_const = digamma_factorial(0.5, DEFAULT_SERIES_TERMS)?;
    let mut f0 = 0.0;
    let mut f1 = 0.0;
    let mut f2 = 0.0;
    for j in 2..=9u32 {
        let s = polygamma_sum(j, 0.5, DEFAULT_SERIES_TERMS)?;
        let jf = j as f64;
        f0 += s * u0.powi(j as i32 - 1);
        f1 += (jf - 1.0) * s * u0.powi(j as i32 - 2);
        f2 += (jf - 1.0) * (jf - 2.0) * s * u0.powi(j as i32 - 3) / 2.0;
    }
    let constant = f0 - p_const;
    // small root, in cancellation-free form
    let z = -2.0 * constant / (f1 + (f1 * f1 - 4.0 * f2 * constant).sqrt());
    let omega = -u0 - z;
    Ok(MinimumRefinement { constant, linear: f1, quadratic: f2, z, omega, abscissa: 0.5 + omega })
}

/// Curvature radius r = (1 + y'^2)^(3/2) / y'' with
/// y'' = y (psi^2 + sum 1/(k+x)^2).
pub fn curvature_radius(x: f64) -> Result<f64> {
    let y = factorial(x)?;
    let psi = digamma_factorial(x, DEFAULT_SERIES_TERMS)?;
    let q = polygamma_sum(2, x, DEFAULT_SERIES_TERMS)?;
    let ypp = y * (psi * psi + q);
    if ypp.abs() < 1e-12 * y.abs().max(1.0) {
        return Err(Error::DegenerateCurvature(x));
    }
    let yp = y * psi;
    Ok((1.0 + yp * yp).powf(1.5) / ypp)
}

/// Rate of change of the curvature: d(1/r)/dx, evaluated from third-order
/// local data as y''' cos^3(phi) - 3 y''^2 sin(phi) cos^4(phi).
pub fn curvature_variation(x: f64) -> Result<f64> {
    let y = factorial(x)?;
    let psi = digamma_factorial(x, DEFAULT_SERIES_TERMS)?;
    let q = polygamma_sum(2, x, DEFAULT_SERIES_TERMS)?;
    let r = polygamma_sum(3, x, DEFAULT_SERIES_TERMS)?;
    let yp = y * psi;
    let ypp = y * (psi * psi + q);
    if ypp.abs() < 1e-12 * y.abs().max(1.0) {
        return Err(Error::DegenerateCurvature(x));
    }
    let yppp = y * (psi * psi * psi + 3.0 * psi * q - 2.0 * r);
    let cos = 1.0 / (1.0 + yp * yp).sqrt();
    let sin = yp * cos;
    Ok(yppp * cos.powi(3) - 3.0 * ypp * ypp * sin * cos.powi(4))
}
