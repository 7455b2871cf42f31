//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `cargo test --test acceptance -- --nocapture`
//! to see them).
//!
//! Three of the golden-number checks pin tolerances that the printed source
//! tables themselves cannot meet (they contain truncated digits and a few
//! last-digit slips, each verified against independent oracles); those
//! checks are kept at the stated tolerances and fail honestly, with the
//! measured deviations printed. Everything else passes.

use eulergamma::beta_relations::{
    beta, beta_symbol, gamma_reflection, gauss_multiplication, BetaMode, BetaSymbol, SymbolMode,
};
use eulergamma::bernoulli_zeta::zeta;
use eulergamma::constants::{euler_gamma, pi_product, GammaMethod, PiVariant};
use eulergamma::curve_analysis::{
    curve_point, find_minimum, local_constants, minimum_refinement_step, polygamma_sum,
};
use eulergamma::finite_differences::{
    diff_power_sum_raw, diff_sum_closed, diff_sum_closed_rational, diff_sum_direct,
    transform_coeffs_rational, DiffSumSpec,
};
use eulergamma::gamma_reprs::{factorial, log_factorial, near_pole, MethodId};
use eulergamma::summation::{em_sum_spliced, faulhaber_coeffs};
use num::bigint::BigInt;
use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

struct Check {
    failures: Vec<String>,
    label: &'static str,
}

impl Check {
    fn new(label: &'static str) -> Self {
        Check { failures: Vec::new(), label }
    }
    fn assert(&mut self, ok: bool, detail: String) {
        if !ok {
            self.failures.push(detail);
        }
    }
    fn finish(self) {
        if self.failures.is_empty() {
            println!("{}: PASS", self.label);
        } else {
            println!("{}: FAIL — {}", self.label, self.failures.join("; "));
            panic!("{} failed: {}", self.label, self.failures.join("; "));
        }
    }
}

const POSITIVE_TABLE: [(f64, f64); 15] = [
    (0.0, 1.0),
    (0.5, 0.8862269),
    (1.0, 1.0),
    (1.5, 1.3293404),
    (2.0, 2.0),
    (2.5, 3.3233509),
    (3.0, 6.0),
    (3.5, 11.6317284),
    (4.0, 24.0),
    (4.5, 52.3427777),
    (5.0, 120.0),
    (5.5, 287.8852775),
    (6.0, 720.0),
    (6.5, 1871.2543038),
    (7.0, 5040.0),
];

const NEGATIVE_TABLE: [(f64, f64); 8] = [
    (0.0, 1.0),
    (-0.5, 1.7724538),
    (-1.5, -3.5449077),
    (-2.5, 2.3632718),
    (-3.5, -0.9453087),
    (-4.5, 0.2700882),
    (-5.5, -0.0600196),
    (-6.5, 0.0109126),
];

// the 1769 backward-continued rows (y, tan phi) from x = -1/2 to -13/2
const BACKWARD_TABLE: [(f64, f64, f64); 7] = [
    (-0.5, 1.7724538, -3.4802308),
    (-1.5, -3.5449077, -0.1293538),
    (-2.5, 2.3632718, 1.6617504),
    (-3.5, -0.9453087, -1.0428236),
    (-4.5, 0.2700882, 0.3751176),
    (-5.5, -0.0600196, -0.0966971),
    (-6.5, 0.0109126, 0.0195654),
];

#[test]
fn criterion_01_half_integer_ordinate_tables() {
    let start = Instant::now();
    let mut c = Check::new("criterion 1 (ordinate tables, 5e-8)");
    for (x, printed) in POSITIVE_TABLE.iter().chain(NEGATIVE_TABLE.iter()) {
        let y = factorial(*x).unwrap();
        let d = (y - printed).abs();
        c.assert(d <= 5e-8, format!("x={x}: |{y:.10} - {printed}| = {d:.2e}"));
    }
    assert!(start.elapsed().as_secs_f64() < 5.0, "table generation too slow");
    c.finish();
}

#[test]
fn criterion_02_tangent_tables() {
    let mut c = Check::new("criterion 2 (tangent tables, 5e-8)");
    let rows: [(f64, f64); 10] = [
        (0.0, -0.5772156649),
        (1.0, 0.422784335),
        (2.0, 1.845568670),
        (3.0, 7.536706010),
        (4.0, 36.146824040),
        (0.5, 0.0323384),
        (1.5, 0.9347345),
        (2.5, 3.6661767),
        (3.5, 16.1549694),
        (4.5, 84.3290907),
    ];
    for (x, printed) in rows {
        let slope = curve_point(x).unwrap().slope;
        let d = (slope - printed).abs();
        c.assert(d <= 5e-8, format!("tan at {x}: {d:.2e}"));
    }
    c.finish();
}

#[test]
fn criterion_03_backward_propagation_pairs() {
    let mut c = Check::new("criterion 3 (backward table pairs, 5e-8)");
    for (x, py, pt) in BACKWARD_TABLE {
        let pt_c = curve_point(x).unwrap();
        let dy = (pt_c.y - py).abs();
        let dt = (pt_c.slope - pt).abs();
        c.assert(dy <= 5e-8, format!("y at {x}: {dy:.2e}"));
        c.assert(dt <= 5e-8, format!("tan at {x}: {dt:.2e}"));
    }
    c.finish();
}

#[test]
fn criterion_04_minimum_point() {
    let mut c = Check::new("criterion 4 (minimum point)");
    let pt = find_minimum(1e-12).unwrap();
    let dx = (pt.x - 0.46163214477).abs();
    c.assert(dx <= 1e-10, format!("x* off printed value by {dx:.2e}"));
    let dy = (pt.y - 0.8856031945).abs();
    c.assert(dy <= 1e-9, format!("y* off by {dy:.2e}"));
    let dr = (pt.curvature_radius.unwrap() - 1.166893).abs();
    c.assert(dr <= 1e-5, format!("r off by {dr:.2e}"));
    let refinement = minimum_refinement_step().unwrap();
    let dz = (refinement.z - (-0.00009368323)).abs();
    c.assert(dz <= 1e-10, format!("quadratic-step z off printed value by {dz:.2e}"));
    c.finish();
}

#[test]
fn criterion_05_local_constants_at_half() {
    let mut c = Check::new("criterion 5 (local constants at p = 1/2)");
    let lc = local_constants(0.5).unwrap();
    let printed = [
        ("P", 0.03648997397857),
        ("Q", 0.93480220054468),
        ("R", 0.41439832211716),
        ("V", 0.09261290502029),
        ("W", 0.06035822809843),
    ];
    let values = [lc.values[0], lc.values[1], lc.values[2], lc.values[5], lc.values[6]];
    for ((name, p), v) in printed.iter().zip(values.iter()) {
        let d = (v - p).abs();
        c.assert(d <= 5e-13, format!("{name} vs printed: {d:.2e}"));
    }
    // S and T: printed digits are garbled; the oracle is the closed zeta form
    let s_oracle = 15.0 * zeta(4.0).unwrap() - 16.0;
    let t_oracle = 31.0 * zeta(5.0).unwrap() - 32.0;
    c.assert((lc.values[3] - s_oracle).abs() <= 5e-13, format!("S vs oracle: {:.2e}", (lc.values[3] - s_oracle).abs()));
    c.assert((lc.values[4] - t_oracle).abs() <= 5e-13, format!("T vs oracle: {:.2e}", (lc.values[4] - t_oracle).abs()));
    // W also agrees with its own closed form to full precision
    let w_oracle = 127.0 * zeta(7.0).unwrap() - 128.0;
    c.assert((lc.values[6] - w_oracle).abs() <= 5e-13, format!("W vs oracle: {:.2e}", (lc.values[6] - w_oracle).abs()));
    c.finish();
}

#[test]
fn criterion_06_cross_representation_suite() {
    let mut c = Check::new("criterion 6 (cross-representation suite)");
    for i in 1..=25 {
        let x = i as f64 * 0.2;
        let reference = factorial(x).unwrap().ln();
        let logs: Vec<(MethodId, f64)> = [
            (MethodId::F1Product, 100_000),
            (MethodId::F2ProductAccel, 1_000),
            (MethodId::F5GaussLog, 100_000),
            (MethodId::F6ZetaTaylor, 1_000_000),
            (MethodId::F7Stirling, 0),
            (MethodId::IntegralLog, 0),
            (MethodId::GaussLimit, 1_000_000),
            (MethodId::Weierstrass, 100_000),
        ]
        .iter()
        .map(|&(m, t)| (m, log_factorial(x, m, t).unwrap().value))
        .collect();
        let mut max_pair = 0.0f64;
        for (i, a) in logs.iter().enumerate() {
            for b in logs.iter().skip(i + 1) {
                max_pair = max_pair.max((a.1 - b.1).abs());
            }
        }
        c.assert(max_pair < 1e-6, format!("x={x}: max pairwise {max_pair:.2e}"));
        let f7 = logs.iter().find(|(m, _)| *m == MethodId::F7Stirling).unwrap().1;
        let dref = (f7 - reference).abs();
        c.assert(dref < 1e-11, format!("x={x}: reference vs F7 {dref:.2e}"));
    }
    c.finish();
}

#[test]
fn criterion_07_finite_difference_oracle() {
    let mut c = Check::new("criterion 7 (difference-sum oracle grid)");
    for m in 0..=8u32 {
        for lambda in 0..=5u32 {
            for &x in &[-2.0, 0.0, m as f64 / 2.0, 3.7, 10.0] {
                let spec = DiffSumSpec { m, lambda, x };
                let d = diff_sum_direct(&spec).unwrap();
                let cl = diff_sum_closed(&spec).unwrap();
                let scale = d.abs().max(cl.abs()).max(1.0);
                c.assert(
                    (d - cl).abs() / scale < 1e-9,
                    format!("m={m} l={lambda} x={x}: rel {:.2e}", (d - cl).abs() / scale),
                );
            }
        }
    }
    // vanishing below the difference order
    for m in 1..=10u32 {
        for n in 0..m {
            for &x in &[0.0, 1.5, 7.0] {
                let v = diff_power_sum_raw(m, n, x).unwrap();
                let scale = (x.abs() + m as f64).powi(n as i32).max(1.0) * 2f64.powi(m as i32);
                c.assert(v.abs() <= 1e-9 * scale, format!("m={m} n={n} x={x}: {v:.2e}"));
            }
        }
    }
    // lambda = 0 equals m! exactly over the rationals
    for m in 0..=8u32 {
        let mut fact = BigRational::new(1.into(), 1.into());
        for i in 2..=m as i64 {
            fact *= ratio(i, 1);
        }
        for x in [ratio(0, 1), ratio(7, 2), ratio(100, 1)] {
            let v = diff_sum_closed_rational(m, 0, &x).unwrap();
            c.assert(v == fact, format!("m={m} at x={x}: {v} != {fact}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_08_transform_coefficients_exact() {
    let mut c = Check::new("criterion 8 (transform coefficients P..V exact)");
    // closed polynomials against the Bernoulli-sequence recursion as exact
    // rationals, for enough m values to pin polynomials of degree <= 6
    let closed = |m: &BigRational| -> Vec<BigRational> {
        let m2 = m * m;
        let m3 = &m2 * m;
        let m4 = &m3 * m;
        let m5 = &m4 * m;
        vec![
            m / ratio(12, 1),
            m * (ratio(5, 1) * m - ratio(2, 1)) / ratio(240, 1),
            m * (ratio(35, 1) * &m2 - ratio(42, 1) * m + ratio(16, 1)) / ratio(4032, 1),
            m * (ratio(175, 1) * &m3 - ratio(420, 1) * &m2 + ratio(404, 1) * m - ratio(144, 1)) / ratio(34560, 1),
            m * (ratio(385, 1) * &m4 - ratio(1540, 1) * &m3 + ratio(2684, 1) * &m2 - ratio(2288, 1) * m
                + ratio(768, 1))
                / ratio(101376, 1),
            ratio(10395, 1) * m / ratio(2985984, 1)
                * (&m5 - ratio(6, 1) * &m4 + ratio(572, 35) * &m3 - ratio(4248, 175) * &m2
                    + ratio(255968, 13475) * m
                    - ratio(1061376, 175175)),
        ]
    };
    for mi in 0..=13i64 {
        let m = ratio(mi, 1);
        let rec = transform_coeffs_rational(&m, 6).unwrap();
        let cl = closed(&m);
        for (i, (a, b)) in rec.iter().zip(cl.iter()).enumerate() {
            c.assert(a == b, format!("letter {} at m={mi}", i + 1));
        }
    }
    c.finish();
}

#[test]
fn criterion_09_constants() {
    let mut c = Check::new("criterion 9 (constant-generating series)");
    let g = euler_gamma(GammaMethod::ZetaShifted, 60).unwrap();
    let dg = (g.value - 0.5772156649015325).abs();
    c.assert(dg <= 1e-13, format!("gamma via shifted zetas: {dg:.2e}"));
    let lo = pi_product(PiVariant::Increasing, 1_000_000).unwrap().value;
    let hi = pi_product(PiVariant::Decreasing, 1_000_000).unwrap().value;
    let pi = std::f64::consts::PI;
    c.assert(lo < pi && pi < hi, format!("bracketing failed: {lo:.12} .. {hi:.12}"));
    c.assert((lo - pi).abs() < 1e-6 && (hi - pi).abs() < 1e-6, "pi products beyond 1e-6".into());
    let a = eulergamma::summation::stirling_constant_via_wallis(10_000).unwrap();
    let da = (a.value - 0.5 * (2.0 * pi).ln()).abs();
    c.assert(da < 1e-4, format!("Wallis constant: {da:.2e}"));
    c.finish();
}

#[test]
fn criterion_10_identity_suite() {
    let start = Instant::now();
    let mut c = Check::new("criterion 10 (randomized identity suite)");
    let mut rng = ChaCha8Rng::seed_from_u64(0x45_75_6c_65_72);
    let mut cases = 0usize;

    // functional equation: 200 cases in (-5, 10)
    while cases < 200 {
        let x: f64 = rng.gen_range(-5.0..10.0);
        if near_pole(x) || near_pole(x + 1.0) || (x - x.round()).abs() < 1e-3 {
            continue;
        }
        let fx = factorial(x).unwrap();
        let fx1 = factorial(x + 1.0).unwrap();
        let rel = (fx1 - (x + 1.0) * fx).abs() / fx1.abs();
        c.assert(rel < 1e-12, format!("functional eq at {x}: {rel:.2e}"));
        cases += 1;
    }

    // reflection: 100 non-integers in (-5, 5), asserted through
    // Gamma(x) Gamma(1-x) sin(pi x) / pi = 1
    let mut done = 0;
    while done < 100 {
        let x: f64 = rng.gen_range(-5.0..5.0);
        if (x - x.round()).abs() < 1e-3 {
            continue;
        }
        let v = gamma_reflection(x).unwrap();
        let sin_pi_x = (std::f64::consts::PI * (x - x.round())).sin()
            * if (x.round() as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let rel = (v * sin_pi_x / std::f64::consts::PI - 1.0).abs();
        c.assert(rel < 1e-11, format!("reflection at {x}: {rel:.2e}"));
        done += 1;
        cases += 1;
    }

    // multiplication three-way: 60 cases
    for _ in 0..60 {
        let n = rng.gen_range(2..=6u32);
        let x: f64 = rng.gen_range(0.2..4.0);
        let m = gauss_multiplication(x, n).unwrap();
        let rel = (m.lhs - m.rhs).abs() / m.rhs.abs();
        c.assert(rel < 1e-10, format!("multiplication n={n} x={x}: {rel:.2e}"));
        let rel2 = (m.euler_value - m.euler_reference).abs() / m.euler_reference.abs();
        c.assert(rel2 < 1e-9, format!("euler form n={n} x={x}: {rel2:.2e}"));
        cases += 1;
    }

    // Beta symmetry + functional equation: 100 cases
    for _ in 0..100 {
        let x: f64 = rng.gen_range(0.1..6.0);
        let y: f64 = rng.gen_range(0.1..6.0);
        let b1 = beta(x, y, BetaMode::ViaGamma).unwrap();
        let b2 = beta(y, x, BetaMode::ViaGamma).unwrap();
        c.assert((b1 - b2).abs() <= 1e-12 * b1.abs().max(1.0), format!("beta symmetry ({x},{y})"));
        let b3 = beta(x + 1.0, y, BetaMode::ViaGamma).unwrap();
        let rel = (b3 - x / (x + y) * b1).abs() / b3.abs();
        c.assert(rel < 1e-10, format!("beta functional eq ({x},{y}): {rel:.2e}"));
        cases += 1;
    }

    // symbol reduction: 40 cases
    for _ in 0..40 {
        let n = rng.gen_range(2..=8u32);
        let p: f64 = rng.gen_range(0.5..4.0);
        let q: f64 = rng.gen_range(0.5..4.0);
        let s = beta_symbol(&BetaSymbol { n, p, q }, SymbolMode::ViaBeta).unwrap();
        let r = beta_symbol(&BetaSymbol { n, p: p + n as f64, q }, SymbolMode::ViaBeta).unwrap();
        let rel = (r - p / (p + q) * s).abs() / r.abs().max(1e-30);
        c.assert(rel < 1e-10, format!("symbol reduction n={n}: {rel:.2e}"));
        cases += 1;
    }

    // five-term relation: 20 cases
    for _ in 0..20 {
        let n = rng.gen_range(3..=7u32);
        let p: f64 = rng.gen_range(0.5..3.0);
        let q: f64 = rng.gen_range(0.5..3.0);
        let r: f64 = rng.gen_range(0.5..3.0);
        let sym = |p: f64, q: f64| beta_symbol(&BetaSymbol { n, p, q }, SymbolMode::ViaBeta).unwrap();
        let a = sym(p, q) * sym(p + q, r);
        let b = sym(p, r) * sym(p + r, q);
        let d = sym(q, r) * sym(q + r, p);
        c.assert((a - b).abs() <= 1e-9 * a.abs(), format!("five-term (1) n={n}"));
        c.assert((a - d).abs() <= 1e-9 * a.abs(), format!("five-term (2) n={n}"));
        cases += 1;
    }

    // log-convexity on the grid
    let h = 1e-3;
    let mut x = 0.1;
    while x <= 10.0 {
        let f = |t: f64| factorial(t - 1.0).unwrap().ln();
        let second = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        c.assert(second >= -1e-8, format!("log-convexity at {x}: {second:.2e}"));
        x += 0.25;
        cases += 1;
    }

    let elapsed = start.elapsed().as_secs_f64();
    c.assert(cases >= 500, format!("only {cases} randomized cases"));
    c.assert(elapsed < 30.0, format!("identity suite took {elapsed:.1}s"));
    c.finish();
}

#[test]
fn criterion_11_euler_maclaurin() {
    let mut c = Check::new("criterion 11 (Euler-Maclaurin reproductions)");
    // direct oracles
    let h10: f64 = (1..=10).map(|k| 1.0 / k as f64).sum();
    let log20: f64 = (1..=20u64).map(|k| (k as f64).ln()).sum();
    // spliced evaluation: direct head below the anchor, formula above it
    let recip_derivs: Vec<Box<dyn Fn(f64) -> f64>> = (1..=5usize)
        .map(|k| {
            Box::new(move |t: f64| {
                let f: f64 = (1..=(2 * k - 1)).map(|i| i as f64).product();
                -f / t.powi(2 * k as i32)
            }) as Box<dyn Fn(f64) -> f64>
        })
        .collect();
    let refs: Vec<&dyn Fn(f64) -> f64> = recip_derivs.iter().map(|d| d.as_ref()).collect();
    let r = em_sum_spliced(&|t| 1.0 / t, &refs, 1, 10, 4, 6).unwrap();
    c.assert((r.value - h10).abs() < 1e-9, format!("harmonic sum: {:.2e}", (r.value - h10).abs()));

    let log_derivs: Vec<Box<dyn Fn(f64) -> f64>> = (1..=5usize)
        .map(|k| {
            Box::new(move |t: f64| {
                let f: f64 = if k == 1 { 1.0 } else { (1..=(2 * k - 2)).map(|i| i as f64).product() };
                f / t.powi(2 * k as i32 - 1)
            }) as Box<dyn Fn(f64) -> f64>
        })
        .collect();
    let refs: Vec<&dyn Fn(f64) -> f64> = log_derivs.iter().map(|d| d.as_ref()).collect();
    let r = em_sum_spliced(&|t: f64| t.ln(), &refs, 1, 20, 4, 6).unwrap();
    c.assert((r.value - log20).abs() < 1e-9, format!("log 20!: {:.2e}", (r.value - log20).abs()));

    // Basel coefficient: the x-coefficient of the square pyramidal polynomial
    let coeffs = faulhaber_coeffs(2).unwrap();
    c.assert(coeffs.last().unwrap() == &ratio(1, 6), "Basel coefficient not exactly 1/6".into());
    c.finish();
}

#[test]
fn criterion_12_note() {
    // the 1769 figure and the historical prose have no quantitative content;
    // they are covered by the property suites above
    println!("criterion 12 (figure/prose): covered by property suites — no golden numbers");
}

// supplementary: the polygamma route used inside criterion 5 is itself
// cross-checked against the closed zeta forms at p = 1/2
// (sum 1/(k+1/2)^m = 2^m ((1 - 2^-m) zeta(m) - 1))
#[test]
fn polygamma_closed_form_consistency() {
    for m in 2..=7u32 {
        let direct = polygamma_sum(m, 0.5, 100_000).unwrap();
        let closed = 2f64.powi(m as i32) * ((1.0 - 2f64.powi(-(m as i32))) * zeta(m as f64).unwrap() - 1.0);
        assert!((direct - closed).abs() < 5e-13, "m={m}: {direct} vs {closed}");
    }
}
