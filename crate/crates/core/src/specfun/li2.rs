//! Dilogarithm Li_2 on the complex plane (principal branch, cut along [1, inf),
//! boundary values taken from above the cut) and real-axis helpers.

use num_complex::Complex64;

use crate::numkit::bernoulli_abs;
use crate::specfun::cl2::cl2_f;

const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Coefficients B_{2k} / (2k+1)! of the u-series, u = -ln(1 - z):
/// Li_2(z) = u - u^2/4 + sum_k b_k u^{2k+1}.
fn u_coeff(k: u32) -> f64 {
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    let mut fact = 1.0f64;
    for j in 2..=(2 * k + 1) {
        fact *= j as f64;
    }
    sign * bernoulli_abs(2 * k).expect("k in range") / fact
}

fn u_series(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let mut acc = u - u2 * 0.25;
    let mut up = u * u2;
    for k in 1..=25u32 {
        let term = up * u_coeff(k);
        acc += term;
        if term.norm() < 1e-18 * acc.norm().max(1e-300) {
            break;
        }
        up *= u2;
    }
    acc
}

/// Principal-branch complex dilogarithm. Points on the cut [1, inf) with
/// im == +0.0 are evaluated as limits from above.
pub fn li2(z: Complex64) -> Complex64 {
    assert!(z.re.is_finite() && z.im.is_finite(), "li2 needs finite z");
    // push exact-cut inputs (im == -0.0 counts as below) to the upper side
    let z = if z.im == 0.0 && z.im.is_sign_negative() && z.re >= 1.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    };
    let one = Complex64::new(1.0, 0.0);
    if z.norm() > 1.0 {
        // inversion: Li_2(z) = -Li_2(1/z) - zeta(2) - ln^2(-z)/2
        let lnmz = (-z).ln();
        return -li2_inner(one / z) - ZETA2 - 0.5 * lnmz * lnmz;
    }
    li2_inner(z)
}

fn li2_inner(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if z.re > 0.5 && z.norm() <= 1.0 {
        // reflection: Li_2(z) = zeta(2) - ln(z) ln(1-z) - Li_2(1-z)
        let w = one - z;
        if w.norm() == 0.0 {
            return Complex64::new(ZETA2, 0.0);
        }
        return Complex64::new(ZETA2, 0.0) - z.ln() * w.ln() - u_series(w);
    }
    u_series(z)
}

/// Real dilogarithm for x <= 1 (off the cut) — the real part of `li2`
/// restricted to its natural domain.
pub fn li2_real(x: f64) -> f64 {
    assert!(x <= 1.0, "li2_real needs x <= 1, got {x}");
    li2(Complex64::new(x, 0.0)).re
}

/// Im Li_2(r e^{i theta}) in polar form:
/// w ln r + (Cl_2(2w) - Cl_2(2w + 2 theta) + Cl_2(2 theta)) / 2,
/// with w = atan2(r sin theta, 1 - r cos theta).
pub fn li2_im_polar(r: f64, theta: f64) -> f64 {
    assert!(r >= 0.0 && r.is_finite() && theta.is_finite());
    if r == 0.0 {
        return 0.0;
    }
    let w = (r * theta.sin()).atan2(1.0 - r * theta.cos());
    w * r.ln() + 0.5 * (cl2_f(2.0 * w) - cl2_f(2.0 * w + 2.0 * theta) + cl2_f(2.0 * theta))
}

/// Legendre chi function chi_2(z) = (Li_2(z) - Li_2(-z)) / 2 for |z| <= 1.
pub fn chi2(z: Complex64) -> Complex64 {
    assert!(z.norm() <= 1.0 + 1e-14, "chi2 needs |z| <= 1");
    0.5 * (li2(z) - li2(-z))
}

/// Inverse tangent integral Ti_2(x) = Im Li_2(i x).
pub fn ti2(x: f64) -> f64 {
    assert!(x.is_finite());
    li2(Complex64::new(0.0, x)).im
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    const CATALAN: f64 = 0.915_965_594_177_219;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classic_real_points() {
        assert!((li2_real(1.0) - ZETA2).abs() < 1e-15);
        assert!((li2_real(0.5) - (ZETA2 / 2.0 - LN_2 * LN_2 / 2.0)).abs() < 1e-15);
        assert!((li2_real(-1.0) + ZETA2 / 2.0).abs() < 1e-15);
        assert!(li2_real(0.0).abs() < 1e-300);
    }

    #[test]
    fn defining_series_small_z() {
        for &z in &[c(0.3, 0.2), c(-0.4, 0.1), c(0.05, -0.45)] {
            let mut s = Complex64::new(0.0, 0.0);
            let mut zp = z;
            for n in 1..200 {
                s += zp / ((n * n) as f64);
                zp *= z;
            }
            assert!((li2(z) - s).norm() < 1e-14, "z={z}");
        }
    }

    #[test]
    fn above_cut_limit() {
        // Li_2(x + i0) for x > 1 has Im = pi ln x.
        for &x in &[1.5, 2.0, 9.0] {
            let v = li2(c(x, 0.0));
            assert!((v.im - PI * x.ln()).abs() < 1e-13, "x={x}: {v}");
        }
        // the literal value Li_2(2) = pi^2/4 - i pi ln 2
        let v = li2(c(2.0, 0.0));
        assert!((v.re - PI * PI / 4.0).abs() < 1e-14);
        assert!((v.im - PI * LN_2).abs() < 1e-14);
    }

    #[test]
    fn signed_zero_maps_to_upper_side() {
        let above = li2(c(3.0, 0.0));
        let also_above = li2(c(3.0, -0.0));
        assert!((above - also_above).norm() < 1e-14);
        // genuinely below the cut the imaginary part flips sign
        let below = li2(c(3.0, -1e-14));
        assert!((above - below.conj()).norm() < 1e-12);
    }

    #[test]
    fn inversion_consistency() {
        for &z in &[c(2.5, 1.0), c(-3.0, 0.5), c(0.0, 4.0)] {
            let lnmz = (-z).ln();
            let lhs = li2(z) + li2(1.0 / z);
            let rhs = -Complex64::new(ZETA2, 0.0) - 0.5 * lnmz * lnmz;
            assert!((lhs - rhs).norm() < 1e-13, "z={z}");
        }
    }

    #[test]
    fn polar_imaginary_part() {
        for &(r, th) in &[(0.5, 1.0), (0.9, 2.5), (1.0, 0.7), (2.0, 1.2), (0.3, -1.0)] {
            let direct = li2(Complex64::from_polar(r, th)).im;
            let polar = li2_im_polar(r, th);
            assert!((direct - polar).abs() < 1e-13, "r={r} th={th}: {direct} vs {polar}");
        }
    }

    #[test]
    fn ti2_and_chi2_points() {
        assert!((ti2(1.0) - CATALAN).abs() < 1e-14);
        assert!((ti2(-1.0) + CATALAN).abs() < 1e-14);
        // chi_2(1) = pi^2/8
        let v = chi2(c(1.0, 0.0));
        assert!((v.re - PI * PI / 8.0).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
    }
}
