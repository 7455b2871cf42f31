//! Error type shared by every module.

/// Errors produced by evaluators in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at (or within 1e-8 of) a pole of the factorial.
    #[error("pole at x = {0}")]
    Pole(f64),

    /// Requested index exceeds a precomputed table's capacity.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Evaluation budget exhausted before the stop rule was satisfied.
    /// Carries the best value obtained and its error estimate.
    #[error("budget exceeded (best {best:e}, estimate {estimate:e})")]
    BudgetExceeded { best: f64, estimate: f64 },

    /// Iteration failed to converge.
    #[error("no convergence after {iterations} iterations")]
    NonConvergence { iterations: usize },

    /// Caller-supplied specification is incomplete (missing derivatives, samples, ...).
    #[error("specification error: {0}")]
    Specification(String),

    /// Curvature is undefined because y'' vanishes at the requested point.
    #[error("degenerate curvature at x = {0}")]
    DegenerateCurvature(f64),

    /// Fractional-derivative order hits a pole of the denominator gamma.
    #[error("degenerate order: e - n = {0} is a negative integer")]
    DegenerateOrder(f64),

    /// Possible floating-point overflow in an alternating power sum.
    #[error("overflow risk: |x|^n exceeds 1e300")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
