//! The four independent evaluations of the fully symmetric tetrahedron
//! constant C(1,1): the exponentially convergent harmonic-number series,
//! the two-term Clausen difference, the log-trigonometric quadrature
//! route, and the three-electron-integral (SRP) route.

use crate::error::{MathError, Result};
use crate::numkit::dd::{Dd, DD_LN_2};
use crate::numkit::{constants, CompSum, ExtReal};
use crate::quad;
use crate::specfun::cl2_f;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RouteKind {
    Series,
    Clausen,
    Rajantie,
    Srp,
}

impl RouteKind {
    pub fn name(self) -> &'static str {
        match self {
            RouteKind::Series => "series",
            RouteKind::Clausen => "clausen",
            RouteKind::Rajantie => "rajantie",
            RouteKind::Srp => "srp",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CtetRoute {
    pub route: RouteKind,
    pub value: ExtReal,
}

/// Parameter table of the standard reference point (SRP) three-electron
/// generating integral: all six exponential parameters equal to one.
#[derive(Clone, Debug)]
pub struct SrpParameters {
    pub sigma_abs: f64,
    pub gamma_big: [f64; 3],
    pub gamma: [[f64; 4]; 4],
}

impl Default for SrpParameters {
    fn default() -> Self {
        let mut gamma = [[-1.0f64; 4]; 4];
        for (j, row) in gamma.iter_mut().enumerate() {
            row[j] = 5.0;
        }
        SrpParameters { sigma_abs: std::f64::consts::SQRT_2, gamma_big: [-1.75; 3], gamma }
    }
}

/// C(1,1) as the exponentially convergent series
/// sum_n (-1/8)^n/(n+1/2) [1/(n+1/2) - 3(ln2 + H_n)].
///
/// The 1/8 ratio gives about one digit per term, so the geometric tail
/// bound is sharp. For tol < 1e-13 the summation switches to
/// double-double pairs so the result can serve as a self-oracle beyond
/// binary64.
pub fn ctet_series(tol: f64) -> Result<ExtReal> {
    if !(tol >= 1e-14) || !tol.is_finite() {
        return Err(MathError::Domain(format!("ctet_series needs tol >= 1e-14, got {tol}")));
    }
    if tol < 1e-13 {
        let v = ctet_series_dd(60);
        return Ok(ExtReal::new(v.to_f64(), 1e-15 * v.hi.abs()));
    }
    let mut acc = CompSum::new();
    let mut h = 0.0f64; // H_n
    let mut pw = 1.0f64; // (-1/8)^n, exact
    let ln2 = std::f64::consts::LN_2;
    for n in 0..200u32 {
        let a = 1.0 / (n as f64 + 0.5);
        acc.add(pw * a * (a - 3.0 * (ln2 + h)));
        h += 1.0 / (n as f64 + 1.0);
        pw *= -0.125;
        let tail = pw.abs() * (2.0 + 3.0 * (ln2 + h)) / (n as f64 + 1.5) * (8.0 / 7.0);
        if tail <= 0.5 * tol {
            let (v, round) = acc.finish();
            return Ok(ExtReal::new(v, round + tail));
        }
    }
    unreachable!("series gains a digit per term; the tail check always triggers")
}

/// The same series accumulated in double-double pairs with `n_terms`
/// terms ((1/8)^60 ~ 1e-55, far below pair precision).
pub fn ctet_series_dd(n_terms: u32) -> Dd {
    let mut acc = Dd::from_f64(0.0);
    let mut h = Dd::from_f64(0.0);
    let mut pw = 1.0f64;
    for n in 0..n_terms {
        let a = Dd::recip(n as f64 + 0.5);
        let bracket = a.sub(DD_LN_2.add(h).mul_f64(3.0));
        acc = acc.add(a.mul(bracket).mul_f64(pw));
        h = h.add(Dd::recip(n as f64 + 1.0));
        pw *= -0.125;
    }
    acc
}

/// C(1,1) = 2^{5/2} [Cl_2(4 alpha) - Cl_2(2 alpha)], alpha = arcsin(1/3).
pub fn ctet_clausen() -> ExtReal {
    let alpha = (1.0f64 / 3.0).asin();
    let scale = 2.0f64.powf(2.5);
    let v = scale * (cl2_f(4.0 * alpha) - cl2_f(2.0 * alpha));
    ExtReal::new(v, 1e-14 * v.abs().max(1.0))
}

/// C(1,1) by quadrature of the smooth single-integrand form
/// 2^{5/2} int_0^1 [ln(3/4) + ln((x+3)/(x+2))
///                  + x^2/(x^2-4) ln(4/(x+2)) + x/(x+2) ln((x+3)/3)]
///                 dx/sqrt(3-x^2).
pub fn ctet_rajantie(tol: f64) -> Result<ExtReal> {
    if !(tol >= 1e-12) || !tol.is_finite() {
        return Err(MathError::Domain(format!("ctet_rajantie needs tol >= 1e-12, got {tol}")));
    }
    let f = |x: f64| {
        let num = (3.0f64 / 4.0).ln()
            + ((x + 3.0) / (x + 2.0)).ln()
            + x * x / (x * x - 4.0) * (4.0 / (x + 2.0)).ln()
            + x / (x + 2.0) * ((x + 3.0) / 3.0).ln();
        num / (3.0 - x * x).sqrt()
    };
    let r = quad::integrate_fn(f, 0.0, 1.0, tol)?;
    let scale = 2.0f64.powf(2.5);
    Ok(ExtReal::new(scale * r.value, scale * r.err_estimate))
}

/// The rearranged (partial-fractions) form of the same integral: the
/// elementary ln4 piece, which must equal theta_+ ln 4, and the
/// remaining log pieces. The two parts sum to C(1,1)/2^{5/2}.
pub fn rajantie_parts(tol: f64) -> Result<(ExtReal, ExtReal)> {
    let w = |x: f64| (3.0 - x * x).sqrt().recip();
    let elementary =
        quad::integrate_fn(|x| (1.0 / (x - 2.0) - 1.0 / (x + 2.0)) * 4.0f64.ln() * w(x), 0.0, 1.0, tol)?;
    let logs = quad::integrate_fn(
        |x| {
            (2.0 / (x + 2.0) * 3.0f64.ln() + (2.0 - 2.0 / (x + 2.0)) * (x + 3.0).ln()
                - (2.0 + 1.0 / (x - 2.0) - 1.0 / (x + 2.0)) * (x + 2.0).ln())
                * w(x)
        },
        0.0,
        1.0,
        tol,
    )?;
    Ok((
        ExtReal::new(elementary.value, elementary.err_estimate),
        ExtReal::new(logs.value, logs.err_estimate),
    ))
}

/// C(1,1) from the three-electron generating integral at the standard
/// reference point: I/(8 pi^3) with
/// I = (16 pi^3/|sigma|)[-2 sum_j Cl_2(pi - 2 atan(Gamma_j/|sigma|))
///     + sum_{j,k} Cl_2(pi - 2 atan(gamma_k^{(j)}/|sigma|))].
pub fn ctet_srp() -> ExtReal {
    let p = SrpParameters::default();
    let s = p.sigma_abs;
    let mut acc = CompSum::new();
    for g in p.gamma_big {
        acc.add(-2.0 * cl2_f(std::f64::consts::PI - 2.0 * (g / s).atan()));
    }
    for row in p.gamma {
        for g in row {
            acc.add(cl2_f(std::f64::consts::PI - 2.0 * (g / s).atan()));
        }
    }
    // (16 pi^3/|sigma|) / (8 pi^3) = 2/|sigma|
    let v = 2.0 / s * acc.value();
    ExtReal::new(v, 1e-13 * v.abs().max(1.0))
}

/// The consolidated Clausen form of the SRP route,
/// 2 sqrt2 [-3 Cl_2(2 theta_+) + 6 Cl_2(pi + 2 atan(1/sqrt2))
///          + 2 Cl_2(pi - 2 atan(5/sqrt2))].
pub fn ctet_srp_consolidated() -> ExtReal {
    let c = constants();
    let s2 = std::f64::consts::SQRT_2;
    let pi = std::f64::consts::PI;
    let v = 2.0
        * s2
        * (-3.0 * cl2_f(2.0 * c.theta_plus) + 6.0 * cl2_f(pi + 2.0 * (1.0 / s2).atan())
            + 2.0 * cl2_f(pi - 2.0 * (5.0 / s2).atan()));
    ExtReal::new(v, 1e-13 * v.abs().max(1.0))
}

/// All four routes at once, for the CLI and the acceptance gate.
pub fn all_routes(tol: f64) -> Result<Vec<CtetRoute>> {
    Ok(vec![
        CtetRoute { route: RouteKind::Series, value: ctet_series(tol.max(1e-14))? },
        CtetRoute { route: RouteKind::Clausen, value: ctet_clausen() },
        CtetRoute { route: RouteKind::Rajantie, value: ctet_rajantie(tol.max(1e-12))? },
        CtetRoute { route: RouteKind::Srp, value: ctet_srp() },
    ])
}
