//! Adaptive numerical integration: tanh-sinh (double-exponential) for
//! endpoint singularities, adaptive Gauss-Kronrod 7/15 for smooth
//! integrands, and a semi-infinite transform.

use crate::error::{MathError, Result};

mod gk;
mod tanhsinh;

/// Marker for infinite interval ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    Finite(f64),
    NegInf,
    PosInf,
}

/// An integration problem on an open interval.
pub struct QuadProblem<'a> {
    pub integrand: &'a dyn Fn(f64) -> f64,
    pub lower: f64,
    pub upper: f64,
    pub singular_lower: bool,
    pub singular_upper: bool,
    pub target_tol: f64,
}

impl<'a> QuadProblem<'a> {
    pub fn new(integrand: &'a dyn Fn(f64) -> f64, lower: f64, upper: f64, tol: f64) -> Self {
        QuadProblem {
            integrand,
            lower,
            upper,
            singular_lower: false,
            singular_upper: false,
            target_tol: tol,
        }
    }

    pub fn singular(mut self, lower: bool, upper: bool) -> Self {
        self.singular_lower = lower;
        self.singular_upper = upper;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Integrate the problem. tanh-sinh when a singular flag is set,
/// otherwise adaptive Gauss-Kronrod bisection.
///
/// Non-convergence returns `converged == false` with the best estimate;
/// a NaN from the integrand is an error.
pub fn integrate(problem: &QuadProblem) -> Result<QuadResult> {
    if !(problem.lower < problem.upper) {
        return Err(MathError::Domain("lower must be < upper".into()));
    }
    if !(1e-14..=1e-3).contains(&problem.target_tol) {
        return Err(MathError::Domain("target_tol outside [1e-14, 1e-3]".into()));
    }
    if problem.singular_lower || problem.singular_upper {
        tanhsinh::integrate(
            problem.integrand,
            problem.lower,
            problem.upper,
            problem.target_tol,
        )
    } else {
        gk::integrate(
            problem.integrand,
            problem.lower,
            problem.upper,
            problem.target_tol,
        )
    }
}

/// Convenience: smooth integrand on [a, b].
pub fn integrate_fn(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    integrate(&QuadProblem::new(&f, a, b, tol))
}

/// Convenience: integrand with singular endpoints on (a, b).
pub fn integrate_singular(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult> {
    integrate(&QuadProblem::new(&f, a, b, tol).singular(true, true))
}

/// Integrate f over [a, +inf) for integrands decaying at least as 1/u^2,
/// via u = a + t/(1-t) on t in [0, 1) with the upper endpoint treated as
/// singular.
pub fn integrate_semi_infinite(
    f: impl Fn(f64) -> f64,
    a: f64,
    tol: f64,
) -> Result<QuadResult> {
    let g = |t: f64| {
        let om = 1.0 - t;
        f(a + t / om) / (om * om)
    };
    integrate(&QuadProblem::new(&g, 0.0, 1.0, tol).singular(false, true))
}

/// Euler-Maclaurin tail of a smooth, decaying positive-term series:
/// sum_{n >= n0} f(n), with f given as a smooth function of a real
/// argument. Uses the semi-infinite quadrature plus corrections through
/// B_4; derivatives come from central differences, so f must be defined
/// on [n0 - 1/2, n0 + 1/2]. Accurate to ~|f^(5)(n0)| — take n0 large.
pub fn sum_tail_euler_maclaurin(
    f: impl Fn(f64) -> f64,
    n0: f64,
    tol: f64,
) -> Result<f64> {
    let integral = integrate_semi_infinite(&f, n0, tol)?;
    let h = 0.25;
    let (m2, m1, p1, p2) = (f(n0 - 2.0 * h), f(n0 - h), f(n0 + h), f(n0 + 2.0 * h));
    let fp = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let fppp = (-m2 + 2.0 * m1 - 2.0 * p1 + p2) / (2.0 * h * h * h);
    Ok(integral.value + 0.5 * f(n0) - fp / 12.0 + fppp / 720.0)
}
