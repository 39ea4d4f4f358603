//! Special-function numerics and identity verification around the
//! fully symmetric Ising tetrahedron constant C(1,1).
//!
//! The crate is organized as:
//! - [`numkit`]: compensated summation, double-double pairs, rationals,
//!   constants, Bernoulli numbers;
//! - [`quad`]: tanh-sinh and adaptive Gauss-Kronrod quadrature;
//! - [`specfun`]: Clausen, dilogarithm, Lerch, log-sine, Lobachevskiy
//!   and related special functions, each with independent evaluation
//!   routes;
//! - [`harmonic`]: harmonic-number sums, their closed forms and
//!   integral representations, Legendre-series representations;
//! - [`ctet`]: the four independent evaluations of C(1,1) and the
//!   log-trigonometric integral layer;
//! - [`identities`]: the declarative identity registry, runner and
//!   report generator.

pub mod error;
pub mod numkit;
pub mod quad;
pub mod specfun;
pub mod harmonic;
pub mod ctet;
pub mod identities;

pub use error::{MathError, Result};
pub use num_complex::Complex64;
pub use numkit::{constants, BigRational, ConstantTable, ExtReal};
pub use quad::{QuadProblem, QuadResult};
