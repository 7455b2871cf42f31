//! Command-line surface: reproduces the printed tables, evaluates any
//! representation on demand, and emits machine-readable comparison reports.

use clap::{Parser, Subcommand, ValueEnum};
use eulergamma::beta_relations::{
    beta, beta_symbol, gauss_multiplication, legendre_eval, BetaMode, BetaSymbol, LegendreMode,
    SymbolMode,
};
use eulergamma::constants::{euler_gamma, pi_product, GammaMethod, PiVariant};
use eulergamma::curve_analysis::{curve_point, find_minimum, local_constants, LocalConstants};
use eulergamma::finite_differences::{diff_sum_closed, diff_sum_direct, transform_coeffs, DiffSumSpec};
use eulergamma::gamma_reprs::{factorial, log_factorial, MethodId};
use eulergamma::summation::{em_sum, EmReport};
use eulergamma::{Error, Result};

#[derive(Parser)]
#[command(name = "eulergamma", version, about = "Factorial / gamma cross-validation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate log(x!) by one representation and report value and error.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value = "auto")]
        method: String,
        /// Series / product truncation (0 picks the method default).
        #[arg(long, default_value_t = 0)]
        terms: usize,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every representation at x and flag disagreements beyond each
    /// method's own error estimate (exit 1 on any).
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit one of the printed tables.
    Table {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Locate the smallest ordinate between 0 and 1.
    Min {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Constant-generating series (gamma routes or pi products).
    Constants {
        /// "gamma" or "pi".
        which: String,
        #[arg(long, default_value_t = 0)]
        terms: usize,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Alternating m-th difference sum of a power, direct and closed form.
    Diffsum {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 10)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Euler-Maclaurin sum of a built-in function over [a, b].
    Emsum {
        /// Built-in integrand: recip, log, or pow:<p>.
        #[arg(long = "fn")]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
        #[arg(long, default_value_t = 0)]
        order: usize,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Beta function.
    Beta {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, default_value = "via-gamma")]
        mode: String,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// E421 integral symbol (p/q) of class n.
    Symbol {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        #[arg(long, default_value = "via-beta")]
        mode: String,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Legendre polynomial by recurrence or by the integral representation.
    Legendre {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value = "recurrence")]
        mode: String,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
    /// Both sides of the multiplication formula plus Euler's symbol form.
    Multiplication {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        digits: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } | Error::NonConvergence { .. } => 4,
                _ => 3,
            }
        }
    });
}

fn max_terms_budget() -> usize {
    std::env::var("EULERGAMMA_MAX_TERMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1_000_000)
}

fn default_terms(method: MethodId) -> usize {
    let d = match method {
        MethodId::F1Product | MethodId::F3LogSeries => 100_000,
        MethodId::F2ProductAccel | MethodId::F4LogSeriesAccel => 1_000,
        MethodId::F5GaussLog | MethodId::Weierstrass => 100_000,
        MethodId::F6ZetaTaylor => 200,
        MethodId::GaussLimit => 1_000_000,
        _ => 0,
    };
    d.min(max_terms_budget())
}

fn fmt(v: f64, digits: usize) -> String {
    if v != 0.0 && v.abs() < 1e-4 {
        format!("{:.*e}", digits, v)
    } else {
        format!("{:.*}", digits, v)
    }
}

/// One table: column names and already-formatted rows.
struct Rows {
    columns: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

impl Rows {
    fn print(&self, format: Format) {
        match format {
            Format::Text => {
                for row in &self.rows {
                    let line: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| format!("{c}={v}"))
                        .collect();
                    println!("{}", line.join(" "));
                }
            }
            Format::Csv => {
                println!("{}", self.columns.iter().map(|c| csv_quote(c)).collect::<Vec<_>>().join(","));
                for row in &self.rows {
                    println!("{}", row.iter().map(|v| csv_quote(v)).collect::<Vec<_>>().join(","));
                }
            }
            Format::Json => {
                let mut records = Vec::new();
                for row in &self.rows {
                    let fields: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| {
                            if v.parse::<f64>().is_ok() {
                                format!("\"{c}\": {v}")
                            } else {
                                format!("\"{c}\": \"{v}\"")
                            }
                        })
                        .collect();
                    records.push(format!("{{{}}}", fields.join(", ")));
                }
                println!("[{}]", records.join(", "));
            }
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval { x, method, terms, digits, format } => {
            let m = MethodId::parse(&method)
                .ok_or_else(|| Error::Domain(format!("unknown method '{method}'")))?;
            let t = if terms == 0 && !matches!(m, MethodId::F7Stirling | MethodId::Auto) {
                default_terms(m)
            } else {
                terms.min(max_terms_budget().max(1))
            };
            let r = log_factorial(x, m, t)?;
            Rows {
                columns: vec!["method", "x", "log_value", "value", "error_estimate", "terms"],
                rows: vec![vec![
                    m.name().into(),
                    fmt(x, digits),
                    fmt(r.value, digits),
                    fmt(r.value.exp(), digits),
                    format!("{:.3e}", r.error_estimate),
                    r.terms_used.to_string(),
                ]],
            }
            .print(format);
            Ok(0)
        }
        Command::Compare { x, digits, format } => {
            let reference = factorial(x)?.ln();
            let battery = [
                MethodId::F1Product,
                MethodId::F2ProductAccel,
                MethodId::F5GaussLog,
                MethodId::F6ZetaTaylor,
                MethodId::F7Stirling,
                MethodId::IntegralLog,
                MethodId::GaussLimit,
                MethodId::Weierstrass,
            ];
            let mut rows = Vec::new();
            let mut ok = true;
            for m in battery {
                let r = log_factorial(x, m, default_terms(m))?;
                let err = (r.value - reference).abs();
                let pass = err <= r.error_estimate;
                ok &= pass;
                rows.push(vec![
                    m.name().into(),
                    fmt(r.value, digits),
                    format!("{err:.3e}"),
                    format!("{:.3e}", r.error_estimate),
                    if pass { "ok".into() } else { "DISAGREES".into() },
                ]);
            }
            Rows { columns: vec!["method", "log_value", "deviation", "error_estimate", "status"], rows }
                .print(format);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Table { name, format, digits } => {
            table(&name, digits)?.print(format);
            Ok(0)
        }
        Command::Min { tol } => {
            let pt = find_minimum(tol)?;
            println!(
                "x={:.11} y={:.10} r={:.6}",
                pt.x,
                pt.y,
                pt.curvature_radius.expect("minimum carries curvature")
            );
            Ok(0)
        }
        Command::Constants { which, terms, digits, format } => {
            let budget = max_terms_budget();
            match which.as_str() {
                "gamma" => {
                    let shifted = euler_gamma(GammaMethod::ZetaShifted, if terms > 0 { terms } else { 60 })?;
                    let alternating = euler_gamma(
                        GammaMethod::ZetaAlternating,
                        if terms > 0 { terms } else { 2001.min(budget) },
                    )?;
                    let integral = euler_gamma(GammaMethod::Integral, 0)?;
                    let rows = [("zeta_shifted", shifted), ("zeta_alternating", alternating), ("integral", integral)]
                        .into_iter()
                        .map(|(n, e)| {
                            vec![
                                n.to_string(),
                                fmt(e.value, digits),
                                format!("{:.3e}", e.error_estimate),
                                e.terms_used.to_string(),
                            ]
                        })
                        .collect();
                    Rows { columns: vec!["route", "value", "error_estimate", "terms"], rows }.print(format);
                    Ok(0)
                }
                "pi" => {
                    let t = if terms > 0 { terms } else { budget };
                    let rows = [
                        ("increasing", pi_product(PiVariant::Increasing, t)?),
                        ("decreasing", pi_product(PiVariant::Decreasing, t)?),
                        ("wallis", pi_product(PiVariant::Wallis, t)?),
                    ]
                    .into_iter()
                    .map(|(n, e)| {
                        vec![
                            n.to_string(),
                            fmt(e.value, digits),
                            format!("{:.3e}", e.error_estimate),
                            e.terms_used.to_string(),
                        ]
                    })
                    .collect();
                    Rows { columns: vec!["variant", "value", "error_estimate", "terms"], rows }.print(format);
                    Ok(0)
                }
                other => Err(Error::Domain(format!("unknown constant family '{other}'"))),
            }
        }
        Command::Diffsum { m, lambda, x, digits, format } => {
            let spec = DiffSumSpec { m, lambda, x };
            let direct = diff_sum_direct(&spec)?;
            let closed = diff_sum_closed(&spec)?;
            Rows {
                columns: vec!["m", "lambda", "x", "direct", "closed", "difference"],
                rows: vec![vec![
                    m.to_string(),
                    lambda.to_string(),
                    fmt(x, digits),
                    fmt(direct, digits),
                    fmt(closed, digits),
                    format!("{:.3e}", (direct - closed).abs()),
                ]],
            }
            .print(format);
            Ok(0)
        }
        Command::Emsum { function, a, b, order, digits } => {
            let report = run_emsum(&function, a, b, order)?;
            println!(
                "value={} terms={} error_estimate={:.3e}",
                fmt(report.value, digits),
                report.terms_used,
                report.error_estimate
            );
            Ok(0)
        }
        Command::Beta { x, y, mode, digits } => {
            let m = match mode.as_str() {
                "via-gamma" => BetaMode::ViaGamma,
                "via-quadrature" => BetaMode::ViaQuadrature,
                other => return Err(Error::Domain(format!("unknown beta mode '{other}'"))),
            };
            println!("beta={}", fmt(beta(x, y, m)?, digits));
            Ok(0)
        }
        Command::Symbol { n, p, q, mode, digits } => {
            let m = match mode.as_str() {
                "via-beta" => SymbolMode::ViaBeta,
                "via-quadrature" => SymbolMode::ViaQuadrature,
                other => return Err(Error::Domain(format!("unknown symbol mode '{other}'"))),
            };
            println!("symbol={}", fmt(beta_symbol(&BetaSymbol { n, p, q }, m)?, digits));
            Ok(0)
        }
        Command::Legendre { n, x, mode, digits } => {
            let m = match mode.as_str() {
                "recurrence" => LegendreMode::Recurrence,
                "integral" => LegendreMode::Integral,
                other => return Err(Error::Domain(format!("unknown legendre mode '{other}'"))),
            };
            println!("P_{n}({x})={}", fmt(legendre_eval(n, x, m)?, digits));
            Ok(0)
        }
        Command::Multiplication { x, n, digits } => {
            let m = gauss_multiplication(x, n)?;
            println!(
                "lhs={} rhs={} euler={} euler_reference={}",
                fmt(m.lhs, digits),
                fmt(m.rhs, digits),
                fmt(m.euler_value, digits),
                fmt(m.euler_reference, digits)
            );
            Ok(0)
        }
    }
}

fn table(name: &str, digits: usize) -> Result<Rows> {
    match name {
        "e368-positive" => {
            let mut rows = Vec::new();
            for i in 0..=14 {
                let x = i as f64 * 0.5;
                rows.push(vec![fmt(x, 1), fmt(factorial(x)?, digits.max(7))]);
            }
            Ok(Rows { columns: vec!["x", "y"], rows })
        }
        "e368-negative" => {
            // the backward-continued table: x = 1/2, -1/2, ..., -13/2
            let mut rows = Vec::new();
            for i in 0..8 {
                let x = 0.5 - i as f64;
                let pt = curve_point(x)?;
                rows.push(vec![fmt(x, 1), fmt(pt.y, digits.max(7)), fmt(pt.slope, digits.max(7))]);
            }
            Ok(Rows { columns: vec!["x", "y", "tan_phi"], rows })
        }
        "tangents" => {
            let mut rows = Vec::new();
            for i in 0..=9 {
                let x = i as f64 * 0.5;
                let pt = curve_point(x)?;
                rows.push(vec![fmt(x, 1), fmt(pt.y, digits.max(7)), fmt(pt.slope, digits.max(7))]);
            }
            Ok(Rows { columns: vec!["x", "y", "tan_phi"], rows })
        }
        "local-constants" => {
            let lc = local_constants(0.5)?;
            let rows = LocalConstants::NAMES
                .iter()
                .zip(lc.values.iter())
                .map(|(n, v)| vec![n.to_string(), fmt(*v, digits.max(14))])
                .collect();
            Ok(Rows { columns: vec!["name", "value"], rows })
        }
        "diff-closed-forms" => {
            let mut rows = Vec::new();
            for m in 1..=8u32 {
                let c = transform_coeffs(m as f64, 6)?;
                let mut row = vec![m.to_string()];
                row.extend(c.coeffs.iter().map(|v| fmt(*v, digits)));
                rows.push(row);
            }
            Ok(Rows { columns: vec!["m", "P", "Q", "R", "S", "T", "V"], rows })
        }
        other => Err(Error::Domain(format!(
            "unknown table '{other}' (expected e368-positive, e368-negative, tangents, local-constants, diff-closed-forms)"
        ))),
    }
}

fn factorial_f(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn run_emsum(function: &str, a: i64, b: i64, order: usize) -> Result<EmReport> {
    // built-in catalogue with analytic odd derivatives up to order 9
    let derivs: Vec<Box<dyn Fn(f64) -> f64>>;
    let g: Box<dyn Fn(f64) -> f64>;
    if function == "recip" {
        g = Box::new(|t: f64| 1.0 / t);
        derivs = (1..=5usize)
            .map(|k| {
                // d^(2k-1)/dt^(2k-1) of 1/t = -(2k-1)!/t^(2k)
                Box::new(move |t: f64| -factorial_f(2 * k - 1) / t.powi(2 * k as i32))
                    as Box<dyn Fn(f64) -> f64>
            })
            .collect();
    } else if function == "log" {
        g = Box::new(|t: f64| t.ln());
        derivs = (1..=5usize)
            .map(|k| {
                // d^(2k-1)/dt^(2k-1) of log t = (2k-2)!/t^(2k-1)
                Box::new(move |t: f64| factorial_f(2 * k - 2) / t.powi(2 * k as i32 - 1))
                    as Box<dyn Fn(f64) -> f64>
            })
            .collect();
    } else if let Some(p) = function.strip_prefix("pow:") {
        let p: f64 = p
            .parse()
            .map_err(|_| Error::Domain(format!("bad power in '{function}'")))?;
        g = Box::new(move |t: f64| t.powf(p));
        derivs = (1..=5usize)
            .map(|k| {
                let falling: fn(f64, usize) -> f64 =
                    |p, j| (0..j).map(|i| p - i as f64).product();
                Box::new(move |t: f64| falling(p, 2 * k - 1) * t.powf(p - (2 * k - 1) as f64))
                    as Box<dyn Fn(f64) -> f64>
            })
            .collect();
    } else {
        return Err(Error::Domain(format!(
            "unknown built-in '{function}' (expected recip, log, pow:<p>)"
        )));
    }
    let refs: Vec<&dyn Fn(f64) -> f64> = derivs.iter().map(|d| d.as_ref()).collect();
    em_sum(&g, &refs, a, b, order)
}
