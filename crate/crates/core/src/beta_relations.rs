//! Beta function, the E421 (p/q) symbol algebra, reflection and
//! multiplication formulas, the factorial of rationals via algebraic
//! quadratures (E19), and the Legendre-polynomial integral check.
//!
//! Derivation note for the Legendre integral mode: the moment-ansatz
//! representation is P_n(x) = (1/log(-1)) int t^n / sqrt(1 - 2xt + t^2) dt
//! over [x - sqrt(x^2-1), x + sqrt(x^2-1)]. On the principal branch
//! 1/log(-1) = 1/(i pi), and between the endpoints a, b (real for x > 1)
//! the radicand is negative: sqrt(1 - 2xt + t^2) = i sqrt((t-a)(b-t)) up to
//! branch choice. The i's cancel, leaving a real integral; matching the
//! n = 0 case (int dt/sqrt((t-a)(b-t)) = pi, P_0 = 1) fixes sign and scale:
//!   P_n(x) = (1/pi) int_a^b t^n / sqrt((t-a)(b-t)) dt.

use crate::error::{Error, Result};
use crate::gamma_reprs::{factorial, log_factorial, near_pole, sin_pi, MethodId};
use crate::numkit::{self, IntegralResult, Softening};

// quadrature cross-checks target ~1e-9; keep the best value when the budget
// runs out but the reported estimate is still below the acceptance bar
fn integrate_lenient<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    left: Softening,
    right: Softening,
) -> Result<IntegralResult> {
    match numkit::integrate_finite_with(f, a, b, 3e-12, left, right) {
        Ok(r) => Ok(r),
        Err(Error::BudgetExceeded { best, estimate }) if estimate < 1e-8 => Ok(IntegralResult {
            value: best,
            abs_error_estimate: estimate,
            evaluations: numkit::DEFAULT_EVAL_BUDGET,
        }),
        Err(e) => Err(e),
    }
}

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Evaluation route for the Beta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaMode {
    ViaGamma,
    ViaQuadrature,
}

fn log_gamma(t: f64) -> Result<f64> {
    Ok(log_factorial(t - 1.0, MethodId::F7Stirling, 0)?.value)
}

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y) = int_0^1 t^(x-1) (1-t)^(y-1) dt.
pub fn beta(x: f64, y: f64, mode: BetaMode) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain(format!("beta needs positive arguments, got ({x}, {y})")));
    }
    match mode {
        BetaMode::ViaGamma => Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp()),
        BetaMode::ViaQuadrature => {
            // both endpoints are singular when x, y < 1: split at 1/2 and
            // soften each half
            // mirror the upper half with u = 1 - t so each piece carries a
            // single power singularity at its left endpoint
            let lo = integrate_lenient(
                move |t: f64| t.powf(x - 1.0) * (1.0 - t).powf(y - 1.0),
                0.0,
                0.5,
                Softening::Algebraic,
                Softening::None,
            )?;
            let hi = integrate_lenient(
                move |u: f64| u.powf(y - 1.0) * (1.0 - u).powf(x - 1.0),
                0.0,
                0.5,
                Softening::Algebraic,
                Softening::None,
            )?;
            Ok(lo.value + hi.value)
        }
    }
}

/// Euler's E421 integral symbol (p/q) of class n:
/// int_0^1 x^(p-1) dx / (1 - x^n)^((n-q)/n) = (1/n) B(p/n, q/n).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSymbol {
    /// Class exponent (n >= 2).
    pub n: u32,
    pub p: f64,
    pub q: f64,
}

/// Evaluation route for the symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMode {
    ViaBeta,
    ViaQuadrature,
}

pub fn beta_symbol(sym: &BetaSymbol, mode: SymbolMode) -> Result<f64> {
    if sym.n < 2 {
        return Err(Error::Domain("symbol class n must be at least 2".into()));
    }
    if !(sym.p > 0.0 && sym.q > 0.0) {
        return Err(Error::Domain(format!("symbol needs p, q > 0, got ({}, {})", sym.p, sym.q)));
    }
    let nf = sym.n as f64;
    match mode {
        SymbolMode::ViaBeta => Ok(beta(sym.p / nf, sym.q / nf, BetaMode::ViaGamma)? / nf),
        SymbolMode::ViaQuadrature => {
            // v^n = 1 - x^n mirrors [x0, 1] onto [0, x0] with p and q
            // exchanged, so both pieces are singular only at 0
            let (p, q) = (sym.p, sym.q);
            let split = 0.5f64.powf(1.0 / nf);
            let lo = integrate_lenient(
                move |x: f64| x.powf(p - 1.0) * (1.0 - x.powf(nf)).powf(q / nf - 1.0),
                0.0,
                split,
                Softening::Algebraic,
                Softening::None,
            )?;
            let hi = integrate_lenient(
                move |v: f64| v.powf(q - 1.0) * (1.0 - v.powf(nf)).powf(p / nf - 1.0),
                0.0,
                split,
                Softening::Algebraic,
                Softening::None,
            )?;
            Ok(lo.value + hi.value)
        }
    }
}

/// Gamma(x) Gamma(1-x); equals pi / sin(pi x) for non-integer x.
pub fn gamma_reflection(x: f64) -> Result<f64> {
    if x == x.round() {
        return Err(Error::Pole(x));
    }
    if near_pole(x - 1.0) || near_pole(-x) {
        return Err(Error::Pole(x));
    }
    Ok(factorial(x - 1.0)? * factorial(-x)?)
}

/// Both sides of the multiplication formula, plus Euler's E421 symbol form
/// of it evaluated through symbol products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicationCheck {
    /// Gamma(x/n) Gamma((x+1)/n) ... Gamma((x+n-1)/n), factor by factor.
    pub lhs: f64,
    /// n^(1-x) Gamma(x) sqrt((2 pi)^(n-1) / n).
    pub rhs: f64,
    /// Euler's symbol form for Gamma(x/n + 1): (x/n) (n^(n-x) Gamma(x) prod_i (i/x))^(1/n).
    pub euler_value: f64,
    /// Reference Gamma(x/n + 1) for the Euler form.
    pub euler_reference: f64,
}

pub fn gauss_multiplication(x: f64, n: u32) -> Result<MultiplicationCheck> {
    if n < 2 {
        return Err(Error::Domain("multiplication order n must be at least 2".into()));
    }
    let nf = n as f64;
    let mut lhs = 1.0f64;
    for k in 0..n {
        lhs *= factorial((x + k as f64) / nf - 1.0)?;
    }
    let rhs = nf.powf(1.0 - x) * factorial(x - 1.0)? * (TWO_PI.powi(n as i32 - 1) / nf).sqrt();
    // Euler's form: [x/n] = (x/n) (n^(n-x) (x-1)! (1/x)(2/x)...((n-1)/x))^(1/n),
    // leading factorial kept exact for integer x
    let lead = if x > 0.0 && x == x.round() && x <= 21.0 {
        let mut p = 1u128;
        for k in 2..(x as u128) {
            p *= k;
        }
        p as f64
    } else {
        factorial(x - 1.0)?
    };
    let mut symbols = 1.0f64;
    for i in 1..n {
        symbols *= beta_symbol(&BetaSymbol { n, p: i as f64, q: x }, SymbolMode::ViaBeta)?;
    }
    let euler_value = (x / nf) * (nf.powf(nf - x) * lead * symbols).powf(1.0 / nf);
    let euler_reference = factorial(x / nf)?;
    Ok(MultiplicationCheck { lhs, rhs, euler_value, euler_reference })
}

/// Product of the sines sin(pi/n) sin(2pi/n) ... sin((n-1)pi/n) (= n / 2^(n-1)).
pub fn sine_product(n: u32) -> f64 {
    (1..n).map(|k| sin_pi(k as f64 / n as f64)).product()
}

/// Gamma(1/n) Gamma(2/n) ... Gamma((n-1)/n) (= sqrt((2 pi)^(n-1) / n)).
pub fn gamma_roots_product(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain("roots product needs n >= 2".into()));
    }
    let mut prod = 1.0f64;
    for k in 1..n {
        prod *= factorial(k as f64 / n as f64 - 1.0)?;
    }
    Ok(prod)
}

/// (p/q)! from E19's product of algebraic quadratures:
/// the q-th root of p! (2p/q + 1)(3p/q + 1)...(p + 1)
/// int (x - x^2)^(p/q) int (x^2 - x^3)^(p/q) ... int (x^(q-1) - x^q)^(p/q).
pub fn gamma_rational_via_algebraic(p: u32, q: u32) -> Result<f64> {
    if p < 1 || q < 2 {
        return Err(Error::Domain("need p >= 1 and q >= 2".into()));
    }
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    if q == 1 {
        return factorial(p as f64);
    }
    let (pf, qf) = (p as f64, q as f64);
    let mut product = 1.0f64;
    for k in 1..=p {
        product *= k as f64;
    }
    for k in 2..=q {
        product *= k as f64 * pf / qf + 1.0;
    }
    for j in 1..q {
        let e = pf / qf;
        let jf = j as f64;
        let f = move |x: f64| (x.powf(jf) - x.powf(jf + 1.0)).powf(e);
        let r = numkit::integrate_finite_with(f, 0.0, 1.0, 1e-13, Softening::Algebraic, Softening::Algebraic)?;
        product *= r.value;
    }
    Ok(product.powf(1.0 / qf))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Evaluation route for Legendre polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LegendreMode {
    /// Three-term recurrence (any real x).
    Recurrence,
    /// Real-endpoint integral representation (x > 1); see the module docs
    /// for the 1/log(-1) normalization.
    Integral,
}

pub fn legendre_eval(n: u32, x: f64, mode: LegendreMode) -> Result<f64> {
    match mode {
        LegendreMode::Recurrence => {
            let mut p0 = 1.0f64;
            if n == 0 {
                return Ok(p0);
            }
            let mut p1 = x;
            for k in 1..n {
                let kf = k as f64;
                let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            Ok(p1)
        }
        LegendreMode::Integral => {
            if !(x > 1.0) {
                return Err(Error::Domain(format!("integral mode needs x > 1, got {x}")));
            }
            let s = (x * x - 1.0).sqrt();
            let (a, b) = (x - s, x + s);
            let f = move |t: f64| t.powi(n as i32) / ((t - a) * (b - t)).sqrt();
            let r = numkit::integrate_finite_with(f, a, b, 1e-12, Softening::Algebraic, Softening::Algebraic)?;
            Ok(r.value / std::f64::consts::PI)
        }
    }
}
