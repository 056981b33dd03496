//! Numerical semigroups, torus-knot Alexander polynomials and Dedekind-type
//! sums, with checkers that verify the identities connecting them.
//!
//! - [`polyring`]: exact rational Laurent polynomials in `q` and `(q, t)`,
//!   multisection and root-of-unity evaluation.
//! - [`semigroup`]: numerical semigroups, gaps, Apéry sets, gap / Hilbert /
//!   semigroup polynomials and quotients `S/d`.
//! - [`dedekind`]: Dedekind sums, Voronoi sums, the Zolotarev permutation,
//!   Dedekind–Carlitz polynomials, Mirimanoff and Apostol–Bernoulli
//!   polynomials.
//! - [`identities`]: one checker per identity, plus a seeded sweep.
//! - [`cli`]: the `sdlab` command-line front end.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod cli;
pub mod dedekind;
mod error;
pub mod identities;
pub mod polyring;
pub mod semigroup;

pub use error::{Error, Result};
pub use polyring::{BiLaurent, CxVal, LaurentPoly, Rational, Var};
pub use semigroup::{AperySet, CoprimePair, NumericalSemigroup};
