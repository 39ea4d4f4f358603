//! Special functions: Clausen, log-sine, dilogarithm, Lerch, Lobachevskiy,
//! polygamma, Legendre polynomials, hypergeometric series, elliptic K.

pub mod cl2;
pub mod gamma;
pub mod legendre;
pub mod lerch;
pub mod li2;
pub mod pfq;

pub use cl2::{cl2, cl2_f, cl2_sine_series};
pub use gamma::{digamma, gamma, ln_gamma, polygamma};
pub use legendre::{elliptic_k_agm, legendre_coeffs, legendre_p};
pub use lerch::lerch_phi;
pub use li2::{chi2, li2, li2_im_polar, li2_real, ti2};
pub use pfq::{gauss_2f1, pfq_series};

use crate::error::{MathError, Result};
use crate::numkit::ExtReal;
use crate::quad;

/// Log-sine integral Ls_n(theta) = -int_0^theta ln^{n-1}|2 sin(t/2)| dt
/// for n >= 1 and 0 <= theta <= 2 pi.
pub fn lsn(n: u32, theta: f64, tol: f64) -> Result<ExtReal> {
    if n == 0 {
        return Err(MathError::Domain("lsn needs n >= 1".into()));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    if !(0.0..=two_pi + 1e-12).contains(&theta) {
        return Err(MathError::Domain(format!(
            "lsn needs 0 <= theta <= 2 pi, got {theta}"
        )));
    }
    if n == 1 {
        return Ok(ExtReal::exact(-theta));
    }
    if theta == 0.0 {
        return Ok(ExtReal::exact(0.0));
    }
    let p = (n - 1) as i32;
    let f = move |t: f64| -(2.0 * (0.5 * t).sin()).ln().powi(p);
    // the log blows up at t = 0 and (for theta = 2 pi) at the upper end
    let r = quad::integrate_singular(&f, 0.0, theta, tol)?;
    Ok(ExtReal::new(r.value, r.err_estimate))
}

/// Lobachevskiy function L(x) = -int_0^x ln|cos t| dt, |x| <= pi/2,
/// in closed form through the Clausen function.
pub fn lobachevsky(x: f64) -> Result<f64> {
    if !(x.abs() <= std::f64::consts::FRAC_PI_2 + 1e-12) {
        return Err(MathError::Domain(format!(
            "lobachevsky needs |x| <= pi/2, got {x}"
        )));
    }
    Ok(x * std::f64::consts::LN_2 + 0.25 * cl2_f(4.0 * x) - 0.5 * cl2_f(2.0 * x))
}

/// int_0^u (2 sin(t/2))^x dt for x > -1, 0 <= u <= 2 pi.
///
/// Closed form: 2^x [ sqrt(pi) G((x+1)/2)/G(x/2+1)
///                    - 2 cos(u/2) 2F1(1/2, (1-x)/2; 3/2; cos^2(u/2)) ],
/// with a quadrature fallback where the 2F1 argument is too close to 1.
pub fn i_xu(x: f64, u: f64, tol: f64) -> Result<ExtReal> {
    let two_pi = 2.0 * std::f64::consts::PI;
    if !(x > -1.0) || !x.is_finite() {
        return Err(MathError::Domain(format!("i_xu needs x > -1, got {x}")));
    }
    if !(0.0..=two_pi + 1e-12).contains(&u) {
        return Err(MathError::Domain(format!("i_xu needs 0 <= u <= 2 pi, got {u}")));
    }
    if u == 0.0 {
        return Ok(ExtReal::exact(0.0));
    }
    let c = (0.5 * u).cos();
    let z = c * c;
    if z <= 0.99 {
        let f21 = gauss_2f1(0.5, 0.5 * (1.0 - x), 1.5, z, tol)?;
        let endpoint = std::f64::consts::PI.sqrt() * gamma(0.5 * (x + 1.0)) / gamma(0.5 * x + 1.0);
        let scale = 2.0f64.powf(x);
        let value = scale * (endpoint - 2.0 * c * f21.value);
        let bound = scale * (2.0 * c.abs() * f21.bound + 8.0 * f64::EPSILON * endpoint.abs());
        return Ok(ExtReal::new(value, bound));
    }
    let f = move |t: f64| (2.0 * (0.5 * t).sin()).powf(x);
    let r = quad::integrate_singular(&f, 0.0, u.min(two_pi), tol)?;
    Ok(ExtReal::new(r.value, r.err_estimate))
}
