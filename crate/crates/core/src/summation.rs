//! Euler-Maclaurin summation engine, Faulhaber closed forms and the
//! Wallis-product determination of Stirling's constant.

use crate::bernoulli_zeta::{bernoulli, bernoulli_f64};
use crate::constants::Estimate;
use crate::error::{Error, Result};
use crate::numkit;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

/// Result of an Euler-Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmReport {
    pub value: f64,
    /// Number of Bernoulli correction terms actually applied.
    pub terms_used: usize,
    /// Magnitude of the first omitted correction term (or of the last one
    /// applied when no further derivative is available).
    pub error_estimate: f64,
}

/// sum_{k=a}^{b} g(k) by the Euler-Maclaurin formula
///
///   int_a^b g + (g(a) + g(b))/2
///     + sum_{k=1}^{order} B_2k/(2k)! (g^(2k-1)(b) - g^(2k-1)(a)).
///
/// `odd_derivatives` supplies g', g''', g^(5), ... as callables; corrections
/// are asymptotic and accurate only while they shrink, so accuracy is set by
/// the size of the lower endpoint (sum a direct head first when a is small).
/// `order` = 0 auto-truncates at the smallest available correction term.
pub fn em_sum(
    g: &dyn Fn(f64) -> f64,
    odd_derivatives: &[&dyn Fn(f64) -> f64],
    a: i64,
    b: i64,
    order: usize,
) -> Result<EmReport> {
    if a > b {
        return Err(Error::Domain(format!("need a <= b, got [{a}, {b}]")));
    }
    if order > odd_derivatives.len() {
        return Err(Error::Specification(format!(
            "order {order} needs {order} odd derivatives, only {} supplied",
            odd_derivatives.len()
        )));
    }
    let (af, bf) = (a as f64, b as f64);
    if a == b {
        return Ok(EmReport { value: g(af), terms_used: 0, error_estimate: 0.0 });
    }
    let integral = numkit::integrate_finite(g, af, bf, 1e-13)?;
    let mut value = integral.value + 0.5 * (g(af) + g(bf));
    let correction = |k: usize| -> f64 {
        let fact: f64 = (1..=2 * k).map(|i| i as f64).product();
        bernoulli_f64(2 * k).expect("within table") / fact
            * (odd_derivatives[k - 1](bf) - odd_derivatives[k - 1](af))
    };
    let auto = order == 0;
    let cap = if auto { odd_derivatives.len() } else { order };
    let mut used = 0usize;
    let mut prev_mag = f64::INFINITY;
    let mut last_mag = 0.0f64;
    for k in 1..=cap {
        let t = correction(k);
        if auto && t.abs() > prev_mag {
            break;
        }
        value += t;
        prev_mag = t.abs();
        last_mag = t.abs();
        used = k;
    }
    let estimate = if used < odd_derivatives.len() {
        correction(used + 1).abs().max(integral.abs_error_estimate)
    } else {
        last_mag.max(integral.abs_error_estimate)
    };
    Ok(EmReport { value, terms_used: used, error_estimate: estimate })
}

/// Classical spliced evaluation: the first terms summed directly, the tail
/// by [`em_sum`] anchored at `anchor` (this is how the formula reaches full
/// accuracy for small lower limits).
pub fn em_sum_spliced(
    g: &dyn Fn(f64) -> f64,
    odd_derivatives: &[&dyn Fn(f64) -> f64],
    a: i64,
    b: i64,
    order: usize,
    anchor: i64,
) -> Result<EmReport> {
    if anchor <= a || anchor > b {
        return em_sum(g, odd_derivatives, a, b, order);
    }
    let mut head = 0.0;
    for k in a..anchor {
        head += g(k as f64);
    }
    let tail = em_sum(g, odd_derivatives, anchor, b, order)?;
    Ok(EmReport { value: head + tail.value, ..tail })
}

/// Exact rational coefficients of sum_{k=1}^{x} k^power as a polynomial in x,
/// highest power (x^(power+1)) first, lowest (x^1) last:
/// (1/(p+1)) sum_{j=0}^{p} (-1)^j C(p+1, j) B_j x^(p+1-j).
pub fn faulhaber_coeffs(power: u32) -> Result<Vec<BigRational>> {
    if power > 30 {
        return Err(Error::Capacity("faulhaber supports powers up to 30".into()));
    }
    let p1 = BigRational::from_integer(BigInt::from(power + 1));
    let mut coeffs = Vec::with_capacity(power as usize + 1);
    let mut binom = BigRational::from_integer(BigInt::from(1));
    for j in 0..=power {
        let b = bernoulli(j as usize)?;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        coeffs.push(&binom * b * BigRational::from_integer(BigInt::from(sign)) / &p1);
        binom = binom * BigRational::from_integer(BigInt::from(power + 1 - j))
            / BigRational::from_integer(BigInt::from(j + 1));
    }
    Ok(coeffs)
}

/// Interpolated power sum: sum_{n=1}^{x} n^power for real x via the
/// Bernoulli closed form (exact polynomial evaluation in doubles).
pub fn faulhaber(power: u32, x: f64) -> Result<f64> {
    let coeffs = faulhaber_coeffs(power)?;
    // Horner over descending powers x^(p+1) .. x^1
    let mut acc = 0.0f64;
    for c in &coeffs {
        acc = acc * x + c.to_f64().expect("coefficient fits f64");
    }
    Ok(acc * x)
}

/// Estimate of log sqrt(2 pi) from the truncated Wallis product combined with
/// the Euler-Maclaurin form of sum log k: with
/// W_n = 2 sum_{k<=n} log(2k) - log(2n) - 2 sum_{k<=n} log(2k-1) -> log(pi/2),
/// the constant is A = (W_n + 2 log 2)/2, converging like O(1/n).
pub fn stirling_constant_via_wallis(terms: usize) -> Result<Estimate> {
    if terms < 10 {
        return Err(Error::Domain("need at least 10 factors".into()));
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in (1..=terms).rev() {
        let k = k as f64;
        let t = 2.0 * ((2.0 * k).ln() - (2.0 * k - 1.0).ln());
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let w = sum - (2.0 * terms as f64).ln();
    Ok(Estimate {
        value: 0.5 * w + 2.0f64.ln(),
        terms_used: terms,
        error_estimate: 0.2 / terms as f64,
    })
}
