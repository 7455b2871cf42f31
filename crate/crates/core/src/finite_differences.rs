//! The E368 observations on m-th differences of powers: the alternating
//! direct sum, its closed form as a parity polynomial in (x - m/2), the
//! P, Q, R, S, ... transform coefficients from the Bernoulli recursion, and
//! Newton-forward interpolated sums.

use crate::bernoulli_zeta::euler_scaled;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{FromPrimitive, One, ToPrimitive, Zero};

/// Parameters of the sum s = x^(m+lambda) - m (x-1)^(m+lambda) + ...
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffSumSpec {
    /// Difference order (number of alternating weights is m + 1).
    pub m: u32,
    /// Excess exponent: the power is n = m + lambda.
    pub lambda: u32,
    /// Evaluation point.
    pub x: f64,
}

/// Largest difference order for the direct sum (binomials stay exact).
pub const DIRECT_ORDER_CAP: u32 = 25;
/// Number of transform coefficients available (P through the 8th letter).
pub const COEFF_CAP: usize = 8;

fn binomial_u64(m: u32, k: u32) -> u64 {
    let k = k.min(m - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (m - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Raw-exponent alternating sum: sum_{k=0}^{m} (-1)^k C(m,k) (x-k)^n.
///
/// This is the entry point for the vanishing cases n < m; the `DiffSumSpec`
/// interface only reaches n >= m.
pub fn diff_power_sum_raw(m: u32, n: u32, x: f64) -> Result<f64> {
    if m > DIRECT_ORDER_CAP {
        return Err(Error::Capacity(format!("direct sum limited to m <= {DIRECT_ORDER_CAP}")));
    }
    let scale = (x.abs() + m as f64).max(1.0);
    if n as f64 * scale.ln() > 300.0 * std::f64::consts::LN_10 {
        return Err(Error::Overflow);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in 0..=m {
        let w = binomial_u64(m, k) as f64 * if k % 2 == 0 { 1.0 } else { -1.0 };
        let t = w * (x - k as f64).powi(n as i32);
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    Ok(sum)
}

/// Direct evaluation of the alternating sum with compensated summation.
pub fn diff_sum_direct(spec: &DiffSumSpec) -> Result<f64> {
    diff_power_sum_raw(spec.m, spec.m + spec.lambda, spec.x)
}

fn big_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Transform coefficients P, Q, R, ... for exact rational m, generated by the
/// Bernoulli-sequence recursion (the concluding Corollary 1 of E368):
/// the k-th letter is
///   K_k = sum_{j=1}^{k} (-1)^(j+1) (2k-1)(2k-2)...(2k-2j+1) L_j m / 2^(2j-1) K_(k-j),
/// K_0 = 1, L_j Euler's scaled sequence.
pub fn transform_coeffs_rational(m: &BigRational, count: usize) -> Result<Vec<BigRational>> {
    if count > COEFF_CAP {
        return Err(Error::Capacity(format!("transform coefficients available up to {COEFF_CAP}")));
    }
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(count + 1);
    coeffs.push(BigRational::one());
    for k in 1..=count {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            let mut fall = BigRational::one();
            for i in 0..(2 * j - 1) {
                fall *= big_int((2 * k - 1 - i) as i64);
            }
            let term = fall * euler_scaled(j)? * m / big_int(1i64 << (2 * j - 1)) * &coeffs[k - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(acc);
    }
    Ok(coeffs.split_off(1))
}

/// Transform coefficients evaluated at a double m (every f64 is an exact
/// rational, so the recursion still runs exactly).
#[derive(Debug, Clone, PartialEq)]
pub struct TransformCoeffs {
    pub m: f64,
    pub coeffs: Vec<f64>,
}

pub fn transform_coeffs(m: f64, count: usize) -> Result<TransformCoeffs> {
    let mr = BigRational::from_f64(m)
        .ok_or_else(|| Error::Domain(format!("m = {m} is not finite")))?;
    let coeffs = transform_coeffs_rational(&mr, count)?
        .into_iter()
        .map(|c| c.to_f64().expect("coefficient fits f64"))
        .collect();
    Ok(TransformCoeffs { m, coeffs })
}

/// Closed form over exact rationals:
/// s = (lambda+1)...(lambda+m) * sum_j C(lambda, 2j) K_j (x - m/2)^(lambda-2j).
pub fn diff_sum_closed_rational(m: u32, lambda: u32, x: &BigRational) -> Result<BigRational> {
    let needed = (lambda / 2) as usize;
    if needed > COEFF_CAP {
        return Err(Error::Capacity(format!(
            "lambda = {lambda} needs {needed} transform coefficients, only {COEFF_CAP} available"
        )));
    }
    let mr = big_int(m as i64);
    let ks = transform_coeffs_rational(&mr, needed)?;
    let y = x - mr / big_int(2);
    let mut inner = BigRational::zero();
    for j in 0..=needed {
        // C(lambda, 2j) as a rational
        let mut c = BigRational::one();
        for i in 0..(2 * j) {
            c = c * big_int((lambda as i64) - i as i64) / big_int(i as i64 + 1);
        }
        let coeff = if j == 0 { BigRational::one() } else { ks[j - 1].clone() };
        let mut power = BigRational::one();
        for _ in 0..(lambda - 2 * j as u32) {
            power *= &y;
        }
        inner += c * coeff * power;
    }
    let mut lead = BigRational::one();
    for i in 1..=m {
        lead *= big_int((lambda + i) as i64);
    }
    Ok(lead * inner)
}

/// Closed form evaluated in doubles (the precise path for large m, where the
/// alternating direct sum cancels catastrophically).
pub fn diff_sum_closed(spec: &DiffSumSpec) -> Result<f64> {
    let x = BigRational::from_f64(spec.x)
        .ok_or_else(|| Error::Domain(format!("x = {} is not finite", spec.x)))?;
    Ok(diff_sum_closed_rational(spec.m, spec.lambda, &x)?
        .to_f64()
        .expect("closed-form value fits f64"))
}

/// The chain of sums int(0), int(1), ..., int(lambda_max) at fixed m and
/// y = x - m/2 from the concluding Corollary 3 recursion, over exact rationals:
///   int(L) = ((m+L)/L) y int(L-1)
///          + sum_{j>=1} (-1)^(j+1) (m+L)(m+L-1)...(m+L-2j+1) / (2^(2j-1) L) m L_j int(L-2j),
/// seeded by int(0) = m!.
pub fn corollary3_chain(m: u32, y: &BigRational, lambda_max: u32) -> Result<Vec<BigRational>> {
    let mr = big_int(m as i64);
    let mut fact = BigRational::one();
    for i in 2..=m {
        fact *= big_int(i as i64);
    }
    let mut sums = vec![fact];
    for l in 1..=lambda_max {
        let mut acc = (&mr + big_int(l as i64)) / big_int(l as i64) * y * &sums[(l - 1) as usize];
        let mut j = 1u32;
        while 2 * j <= l {
            let mut fall = BigRational::one();
            for i in 0..(2 * j) {
                fall *= &mr + big_int(l as i64 - i as i64);
            }
            let term = fall / big_int((1i64 << (2 * j - 1)) * l as i64)
                * &mr
                * euler_scaled(j as usize)?
                * &sums[(l - 2 * j) as usize];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
            j += 1;
        }
        sums.push(acc);
    }
    Ok(sums)
}

/// Newton-forward interpolation of the summatory function:
/// sum_{k=1}^{x} g(k) ~ sum_{k=1}^{depth} C(x,k) Delta^(k-1) g(1),
/// built from samples g(1..N). Exact for integer x <= N once differences of
/// order >= depth vanish.
pub fn newton_interpolated_sum(g_values: &[f64], x: f64, depth: usize) -> Result<f64> {
    let n = g_values.len();
    if n < 2 || depth + 1 > n {
        return Err(Error::Specification(format!(
            "need at least depth+1 = {} samples, got {n}",
            depth + 1
        )));
    }
    if depth == 0 {
        return Err(Error::Specification("depth must be at least 1".into()));
    }
    // forward difference table: after pass j, diff[i] = Delta^j g(i+1)
    let mut diff = g_values.to_vec();
    let mut sum = 0.0f64;
    let mut binom = 1.0f64; // C(x, k)
    for k in 1..=depth {
        binom *= (x - (k as f64 - 1.0)) / k as f64;
        sum += binom * diff[0];
        for i in 0..(n - k) {
            diff[i] = diff[i + 1] - diff[i];
        }
    }
    Ok(sum)
}
