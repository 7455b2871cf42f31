//! Bernoulli numbers, Euler's scaled A, B, C, ... sequence and the Riemann
//! zeta function at real arguments. Rational tables are built once and shared.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index for which B_n is tabulated.
pub const BERNOULLI_CAPACITY: usize = 64;
/// Largest index for which the scaled sequence is tabulated.
pub const EULER_SCALED_CAPACITY: usize = 32;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binomial_big(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bernoulli_table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0  =>  B_n = -(1/(n+1)) sum_{k<n} C(n+1, k) B_k
        let mut b = Vec::with_capacity(BERNOULLI_CAPACITY + 1);
        b.push(BigRational::one());
        for n in 1..=BERNOULLI_CAPACITY {
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(binomial_big(n + 1, k)) * bk;
            }
            b.push(-acc / big((n + 1) as i64));
        }
        b
    })
}

fn euler_scaled_table() -> &'static Vec<BigRational> {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // seed A = 1/6; then (2n+1) L_n = 2 sum_{i=1}^{n-1} L_i L_{n-i}
        let mut l: Vec<BigRational> = Vec::with_capacity(EULER_SCALED_CAPACITY + 1);
        l.push(BigRational::zero()); // unused index 0
        l.push(BigRational::new(BigInt::one(), BigInt::from(6)));
        for n in 2..=EULER_SCALED_CAPACITY {
            let mut acc = BigRational::zero();
            for i in 1..n {
                acc += &l[i] * &l[n - i];
            }
            l.push(acc * big(2) / big((2 * n + 1) as i64));
        }
        l
    })
}

/// Exact Bernoulli number B_n in the z/(e^z - 1) convention (B_1 = -1/2).
pub fn bernoulli(n: usize) -> Result<BigRational> {
    if n > BERNOULLI_CAPACITY {
        return Err(Error::Capacity(format!("Bernoulli table holds B_0..B_{BERNOULLI_CAPACITY}, asked for B_{n}")));
    }
    Ok(bernoulli_table()[n].clone())
}

/// B_n as a double.
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    Ok(bernoulli(n)?.to_f64().expect("Bernoulli number representable in f64"))
}

/// Euler's scaled sequence: A = 1/6, B = 1/90, C = 1/945, ... (k = 1, 2, 3, ...).
/// These are the positive rationals with zeta(2k) = L_k pi^(2k); equivalently
/// L_k = |B_2k| 2^(2k-1) / (2k)!.
pub fn euler_scaled(k: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::Domain("euler_scaled index starts at 1".into()));
    }
    if k > EULER_SCALED_CAPACITY {
        return Err(Error::Capacity(format!("scaled table holds indices 1..{EULER_SCALED_CAPACITY}, asked for {k}")));
    }
    Ok(euler_scaled_table()[k].clone())
}

pub fn euler_scaled_f64(k: usize) -> Result<f64> {
    Ok(euler_scaled(k)?.to_f64().expect("scaled value representable in f64"))
}

/// Tail sum_{k >= from} k^(-s) by Euler-Maclaurin (s > 1, from >= 2).
pub fn power_tail(s: f64, from: usize) -> f64 {
    let n = from as f64;
    let mut tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    // correction terms B_2j/(2j)! * s(s+1)...(s+2j-2) * n^(-s-2j+1)
    let mut rising = s;
    let mut power = n.powf(-s - 1.0);
    for j in 1..=8usize {
        let b = bernoulli_f64(2 * j).expect("within capacity");
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        let term = b / fact * rising * power;
        tail += term;
        if term.abs() < 1e-18 {
            break;
        }
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        power /= n * n;
    }
    tail
}

/// Riemann zeta at real s > 1. Even integer arguments use the exact
/// Bernoulli formula; everything else is a 20-term direct sum with an
/// Euler-Maclaurin tail. Absolute error <= 1e-13.
pub fn zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("zeta requires s > 1, got {s}")));
    }
    let rounded = s.round();
    if (s - rounded).abs() < 1e-300 && rounded >= 2.0 && (rounded as usize) % 2 == 0 && rounded as usize <= BERNOULLI_CAPACITY {
        // zeta(2m) = (-1)^(m-1) B_2m (2 pi)^(2m) / (2 (2m)!) = |B_2m| (2 pi)^(2m) / (2 (2m)!)
        let two_m = rounded as usize;
        let b = bernoulli_f64(two_m)?.abs();
        let mut coeff = 1.0f64;
        for i in 1..=two_m {
            coeff *= 2.0 * std::f64::consts::PI / i as f64;
        }
        return Ok(b * coeff / 2.0);
    }
    let n = 20usize;
    let mut sum = 0.0;
    for k in 1..n {
        sum += (k as f64).powf(-s);
    }
    Ok(sum + power_tail(s, n))
}

/// zeta(s) - 1 computed without cancellation (sum over k >= 2).
pub fn zeta_minus_1(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Domain(format!("zeta requires s > 1, got {s}")));
    }
    let n = 20usize;
    let mut sum = 0.0;
    for k in 2..n {
        sum += (k as f64).powf(-s);
    }
    Ok(sum + power_tail(s, n))
}
