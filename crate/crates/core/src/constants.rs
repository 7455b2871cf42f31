//! Constant-generating series: the Euler-Mascheroni constant by three routes,
//! pi by the E368 bracketing products and Wallis, and the partial-fraction
//! expansion of 1/(e^z - 1).

use crate::bernoulli_zeta::{zeta, zeta_minus_1};
use crate::error::{Error, Result};
use crate::numkit;

/// Euler-Mascheroni constant (paper's Delta), correctly rounded f64.
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// A computed constant with its cost and a conservative error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub terms_used: usize,
    pub error_estimate: f64,
}

/// Route used to compute gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaMethod {
    /// gamma = sum_{m>=2} (-1)^m zeta(m)/m (slowly convergent, alternating).
    ZetaAlternating,
    /// 1 - gamma = sum_{m>=2} (zeta(m)-1)/m (geometric, terms ~ 2^-m).
    ZetaShifted,
    /// gamma = int_0^1 (1/(1-z) + 1/log z) dz.
    Integral,
}

/// Euler-Mascheroni constant by the requested route. For the series routes,
/// `terms` is the largest zeta index m (the sums start at m = 2).
pub fn euler_gamma(method: GammaMethod, terms: usize) -> Result<Estimate> {
    match method {
        GammaMethod::ZetaAlternating => {
            if terms < 2 {
                return Err(Error::Domain("need at least two zeta terms".into()));
            }
            let mut sum = 0.0;
            for m in 2..=terms {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign * zeta(m as f64)? / m as f64;
            }
            Ok(Estimate {
                value: sum,
                terms_used: terms - 1,
                // alternating with slowly decaying terms: next term bounds the error
                error_estimate: zeta((terms + 1) as f64)? / (terms + 1) as f64,
            })
        }
        GammaMethod::ZetaShifted => {
            if terms < 2 {
                return Err(Error::Domain("need at least two zeta terms".into()));
            }
            let mut sum = 0.0;
            for m in 2..=terms {
                sum += zeta_minus_1(m as f64)? / m as f64;
            }
            Ok(Estimate {
                value: 1.0 - sum,
                terms_used: terms - 1,
                error_estimate: (2.0 * zeta_minus_1((terms + 1) as f64)? / (terms + 1) as f64).max(2e-16),
            })
        }
        GammaMethod::Integral => {
            // z = 1 - e^(-u) removes both endpoint singularities:
            // integrand becomes 1 + e^(-u)/log(1 - e^(-u)), smooth on [0, inf)
            let f = |u: f64| {
                if u == 0.0 {
                    return 1.0;
                }
                let eu = (-u).exp();
                1.0 + eu / (-eu).ln_1p()
            };
            let r = numkit::integrate_semi_infinite(f, 1e-11)?;
            Ok(Estimate {
                value: r.value,
                terms_used: r.evaluations,
                error_estimate: r.abs_error_estimate.max(1e-12),
            })
        }
    }
}

/// Which pi product to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiVariant {
    /// pi = 3 (1 + 1/(3^2*3)) (1 + 1/(5^2*7)) (1 + 1/(7^2*11)) ... (from below).
    Increasing,
    /// pi = 4 (1 - 1/(1^2*5)) (1 - 1/(3^2*9)) (1 - 1/(5^2*13)) ... (from above).
    Decreasing,
    /// pi = 2 prod 4k^2/(4k^2 - 1) (Wallis).
    Wallis,
}

/// Partial product for pi, accumulated in (compensated) log space.
pub fn pi_product(variant: PiVariant, terms: usize) -> Result<Estimate> {
    if terms < 1 {
        return Err(Error::Domain("need at least one factor".into()));
    }
    let mut sum: f64;
    let mut comp = 0.0f64;
    let mut add = |s: &mut f64, t: f64| {
        let y = t - comp;
        let v = *s + y;
        comp = (v - *s) - y;
        *s = v;
    };
    let est;
    match variant {
        PiVariant::Increasing => {
            sum = 3.0f64.ln();
            for k in 1..=terms {
                let k = k as f64;
                add(&mut sum, (1.0 / ((2.0 * k + 1.0).powi(2) * (4.0 * k - 1.0))).ln_1p());
            }
            est = 1.0 / (32.0 * (terms as f64).powi(2)) + 4e-16;
        }
        PiVariant::Decreasing => {
            sum = 4.0f64.ln();
            for k in 1..=terms {
                let k = k as f64;
                add(&mut sum, (-1.0 / ((2.0 * k - 1.0).powi(2) * (4.0 * k + 1.0))).ln_1p());
            }
            est = 1.0 / (32.0 * (terms as f64).powi(2)) + 4e-16;
        }
        PiVariant::Wallis => {
            sum = 2.0f64.ln();
            for k in 1..=terms {
                let k2 = 4.0 * (k as f64) * (k as f64);
                add(&mut sum, (k2 / (k2 - 1.0)).ln());
            }
            est = 1.0 / (4.0 * terms as f64) + 4e-16;
        }
    }
    Ok(Estimate {
        value: sum.exp(),
        terms_used: terms,
        error_estimate: est * std::f64::consts::PI,
    })
}

/// Truncated partial-fraction expansion
/// 1/(e^z - 1) = -1/2 + 1/z + sum_{k>=1} 2z/(z^2 + 4 k^2 pi^2),
/// with the integral tail correction z/(2 pi^2 N).
pub fn expm1_reciprocal_partial_fractions(z: f64, terms: usize) -> Result<f64> {
    if z == 0.0 {
        return Err(Error::Pole(0.0));
    }
    if terms < 1 {
        return Err(Error::Domain("need at least one partial fraction".into()));
    }
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let mut sum = -0.5 + 1.0 / z;
    // large k first so tiny terms accumulate before the big ones
    for k in (1..=terms).rev() {
        let k = k as f64;
        sum += 2.0 * z / (z * z + 4.0 * k * k * pi2);
    }
    Ok(sum + z / (2.0 * pi2 * terms as f64))
}

/// Same truncation without the constant -1/2 (the historically tempting
/// mistake); used by tests to show the constant is load-bearing.
pub fn expm1_reciprocal_missing_half(z: f64, terms: usize) -> Result<f64> {
    Ok(expm1_reciprocal_partial_fractions(z, terms)? + 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gamma_shifted_is_sharp() {
        let r = euler_gamma(GammaMethod::ZetaShifted, 60).unwrap();
        assert!((r.value - 0.5772156649015325).abs() < 1e-13, "got {:.16}", r.value);
    }

    #[test]
    fn gamma_alternating_two_terms() {
        let r = euler_gamma(GammaMethod::ZetaAlternating, 3).unwrap();
        let expect = zeta(2.0).unwrap() / 2.0 - zeta(3.0).unwrap() / 3.0;
        assert!((r.value - expect).abs() < 1e-15);
        assert!((r.value - 0.4217814).abs() < 1e-7);
    }

    #[test]
    fn gamma_integral_route() {
        let r = euler_gamma(GammaMethod::Integral, 0).unwrap();
        assert!((r.value - 0.5772156649).abs() < 1e-9, "got {:.12}", r.value);
    }

    #[test]
    fn all_gamma_routes_agree_within_estimates() {
        let a = euler_gamma(GammaMethod::ZetaAlternating, 2001).unwrap();
        let s = euler_gamma(GammaMethod::ZetaShifted, 60).unwrap();
        let i = euler_gamma(GammaMethod::Integral, 0).unwrap();
        assert!((a.value - EULER_MASCHERONI).abs() <= a.error_estimate, "alternating off: {} est {}", (a.value - EULER_MASCHERONI).abs(), a.error_estimate);
        assert!((s.value - EULER_MASCHERONI).abs() <= s.error_estimate);
        assert!((i.value - EULER_MASCHERONI).abs() <= i.error_estimate);
    }

    #[test]
    fn harmonic_minus_log_limit() {
        // gamma = lim (sum 1/k - log n): n = 1e6 plus the EM tail 1/(2n) - 1/(12n^2)
        let n = 1_000_000usize;
        let mut h = 0.0f64;
        for k in (1..=n).rev() {
            h += 1.0 / k as f64;
        }
        let nf = n as f64;
        let approx = h - nf.ln() - 1.0 / (2.0 * nf) + 1.0 / (12.0 * nf * nf);
        assert!((approx - EULER_MASCHERONI).abs() < 1e-10, "diff {}", (approx - EULER_MASCHERONI).abs());
    }

    #[test]
    fn pi_single_factor_values() {
        assert!((pi_product(PiVariant::Decreasing, 1).unwrap().value - 3.2).abs() < 1e-14);
        assert!((pi_product(PiVariant::Increasing, 1).unwrap().value - 3.0 * (1.0 + 1.0 / 27.0)).abs() < 1e-14);
    }

    #[test]
    fn pi_products_bracket() {
        for &n in &[100usize, 1000, 10_000] {
            let lo = pi_product(PiVariant::Increasing, n).unwrap().value;
            let hi = pi_product(PiVariant::Decreasing, n).unwrap().value;
            assert!(lo < PI && PI < hi, "n = {n}: {lo} .. {hi}");
        }
        // monotone in n
        let a = pi_product(PiVariant::Increasing, 10).unwrap().value;
        let b = pi_product(PiVariant::Increasing, 100).unwrap().value;
        assert!(b > a);
        let c = pi_product(PiVariant::Decreasing, 10).unwrap().value;
        let d = pi_product(PiVariant::Decreasing, 100).unwrap().value;
        assert!(d < c);
    }

    #[test]
    fn wallis_product() {
        let r = pi_product(PiVariant::Wallis, 100_000).unwrap();
        assert!((r.value - PI).abs() < 1e-4);
        assert!((r.value - PI).abs() <= r.error_estimate);
    }

    #[test]
    fn partial_fractions_match_direct() {
        for &z in &[1.0f64, -1.0, 0.5] {
            let direct = 1.0 / z.exp_m1();
            let pf = expm1_reciprocal_partial_fractions(z, 10_000).unwrap();
            assert!((pf - direct).abs() < 1e-7, "z = {z}: {pf} vs {direct}");
        }
        assert!((expm1_reciprocal_partial_fractions(1.0, 10_000).unwrap() - 0.5819767069).abs() < 1e-7);
        assert!(matches!(expm1_reciprocal_partial_fractions(0.0, 10), Err(Error::Pole(_))));
    }

    #[test]
    fn odd_part_symmetry() {
        // f(z) + f(-z) = -1 exactly in the formula (the -1/2 terms add,
        // everything else is odd)
        let f = |z: f64| expm1_reciprocal_partial_fractions(z, 5000).unwrap();
        for &z in &[0.3, 1.0, 2.7] {
            assert!((f(z) + f(-z) + 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn missing_half_breaks_large_z_limit() {
        // with the constant, f(z) -> 0 like 1/(e^z - 1); without it the
        // truncation tends to +1/2
        let z = 30.0;
        let good = expm1_reciprocal_partial_fractions(z, 100_000).unwrap();
        let bad = expm1_reciprocal_missing_half(z, 100_000).unwrap();
        assert!((good - 1.0 / z.exp_m1()).abs() < 1e-4);
        assert!((bad - 0.5).abs() < 0.02, "got {bad}");
    }
}
