//! Numerical library for the factorial / gamma function built from Euler's
//! formula catalogue in E368, with the companion identities of E19 and E421.
//!
//! Every representation (the seven catalogue formulas, the Gauss limit, the
//! Weierstrass product and two integral forms) is an independent code path so
//! results can be cross-validated against each other, against classical
//! identities (reflection, multiplication, Beta relations), and against the
//! finite-difference transforms of the E368 observations.

pub mod bernoulli_zeta;
pub mod beta_relations;
pub mod constants;
pub mod curve_analysis;
pub mod error;
pub mod finite_differences;
pub mod gamma_reprs;
pub mod numkit;
pub mod summation;

pub use error::{Error, Result};
pub use gamma_reprs::{factorial, log_factorial, EvalReport, MethodId};
