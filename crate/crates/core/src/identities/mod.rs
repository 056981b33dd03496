//! Identity checkers and the seeded verification sweep.
//!
//! Each checker computes one side of an identity from its defining formula
//! (brute force) and the other side from the closed or transformed form, in
//! one of two modes:
//!
//! - [`Mode::Exact`]: both sides as exact rationals or Laurent polynomials.
//!   Root-of-unity averages are realized by multisection, so no floating
//!   point is involved. The residual is the `L1` norm of the difference.
//! - [`Mode::Float`]: the literal root-of-unity sums in binary64. The
//!   residual is `|lhs - rhs| / (1 + |lhs|)`, maximized over the evaluation
//!   points.

mod checks;
mod report;
mod suite;

pub use checks::*;
pub use report::{reports_to_csv, reports_to_json, sig12, IdentityReport, Mode, Params, Summary, Verdict};
pub use suite::{random_semigroups, run_suite, SuiteConfig, SuiteRanges};

/// Scaled tolerance for float checkers.
pub const TOL_FLOAT: f64 = 1e-8;
/// Looser tolerance for the multinomial sums over compositions.
pub const TOL_MULTINOMIAL: f64 = 1e-6;
/// Absolute tolerance for gap-polynomial values at roots of unity.
pub const TOL_GAP_VALUES: f64 = 1e-9;
/// Absolute tolerance between exact and trigonometric Dedekind-sum routes.
pub const TOL_DEDEKIND: f64 = 1e-9;

/// Real points in `(0, 1)` where float checkers evaluate polynomial
/// identities in `q`.
pub const Q_POINTS: [f64; 2] = [0.37, 0.81];
/// Points in `q` for sums divided by `q^e`, `e < b`; at
/// `q = 0.37` and `b = 20` those reach `10^8` before cancelling.
pub const Q_POINTS_NEGATIVE_POWERS: [f64; 2] = [0.81, 0.93];
/// Points for the second variable `t`.
pub const T_POINTS: [f64; 2] = [0.6, 1.3];
