//! Generalized hypergeometric pFq by direct term recurrence, with
//! Euler-Maclaurin and alternating-series handling on the unit circle.

use crate::error::{MathError, Result};
use crate::numkit::{alternating_sum_cvz, CompSum, ExtReal};
use crate::quad;
use crate::specfun::gamma::ln_gamma;

/// pFq(num; den; z). Requirements: no denominator parameter is a
/// non-positive integer; |z| < 1, or z = 1 with convergence margin
/// s = sum(den) - sum(num) > 0, or z = -1 with s > -1.
pub fn pfq_series(num: &[f64], den: &[f64], z: f64, tol: f64) -> Result<ExtReal> {
    for &b in den {
        if b <= 0.0 && b == b.floor() {
            return Err(MathError::Domain(format!(
                "denominator parameter {b} is a non-positive integer"
            )));
        }
    }
    if !z.is_finite() || num.iter().chain(den).any(|v| !v.is_finite()) {
        return Err(MathError::NonFiniteInput);
    }
    let s: f64 = den.iter().sum::<f64>() - num.iter().sum::<f64>();
    if z.abs() > 1.0 {
        return Err(MathError::Domain(format!("pfq needs |z| <= 1, got {z}")));
    }
    if z == 1.0 {
        if !(s > 0.0) {
            return Err(MathError::Domain(format!(
                "pfq at z = 1 needs sum(den) - sum(num) > 0, got {s}"
            )));
        }
        if num.len() != den.len() + 1 {
            return Err(MathError::Domain("pfq at z = 1 expects p = q + 1".into()));
        }
        return at_unit(num, den, s, tol, false);
    }
    if z == -1.0 && num.len() == den.len() + 1 {
        if !(s > -1.0) {
            return Err(MathError::Domain(format!(
                "pfq at z = -1 needs sum(den) - sum(num) > -1, got {s}"
            )));
        }
        // terms eventually alternate with slowly decaying magnitude
        if num.iter().all(|&a| a > 0.0) {
            return at_unit(num, den, s, tol, true);
        }
    }
    inside_disk(num, den, z, tol)
}

fn term_ratio(num: &[f64], den: &[f64], k: f64) -> f64 {
    let mut r = 1.0 / (k + 1.0);
    for &a in num {
        r *= a + k;
    }
    for &b in den {
        r /= b + k;
    }
    r
}

fn inside_disk(num: &[f64], den: &[f64], z: f64, tol: f64) -> Result<ExtReal> {
    let mut t = 1.0f64;
    let mut sum = CompSum::new();
    sum.add(t);
    for k in 0..200_000usize {
        t *= term_ratio(num, den, k as f64) * z;
        sum.add(t);
        // once the ratio has settled near z, bound the tail geometrically
        let r = (term_ratio(num, den, k as f64 + 1.0) * z).abs();
        if r < 1.0 {
            let tail = t.abs() * r / (1.0 - r);
            if tail <= 0.5 * tol {
                let (value, round) = sum.finish();
                return Ok(ExtReal::new(value, round + tail));
            }
        }
    }
    Err(MathError::QuadratureNonConvergence {
        value: sum.finish().0,
        err_estimate: f64::INFINITY,
    })
}

/// z = +/-1 with p = q + 1: terms behave like C * (+/-1)^n / n^{1+s}.
/// At z = 1 sum a block and close with an Euler-Maclaurin tail; at z = -1
/// feed the magnitudes to the alternating-series accelerator.
fn at_unit(num: &[f64], den: &[f64], s: f64, tol: f64, alternating: bool) -> Result<ExtReal> {
    let by_lgamma = |x: f64| -> f64 {
        let mut ln_t = -ln_gamma(x + 1.0);
        for &a in num {
            ln_t += ln_gamma(a + x) - ln_gamma(a);
        }
        for &b in den {
            ln_t -= ln_gamma(b + x) - ln_gamma(b);
        }
        ln_t.exp()
    };
    // beyond x_switch the lgamma differences lose all precision
    // (a + x rounds to x); the terms are C x^{-1-s} there anyway
    let x_switch = 1e8;
    let t_switch = by_lgamma(x_switch);
    let term_mag = move |x: f64| -> f64 {
        if x <= x_switch {
            by_lgamma(x)
        } else {
            t_switch * (x / x_switch).powf(-1.0 - s)
        }
    };
    if alternating {
        let head_n = 6usize; // let the sign pattern settle before accelerating
        let mut head = CompSum::new();
        let mut t = 1.0f64;
        head.add(t);
        for k in 0..head_n - 1 {
            t *= -term_ratio(num, den, k as f64);
            head.add(t);
        }
        let tail = alternating_sum_cvz(|j| term_mag((head_n + j) as f64));
        let sign = if head_n % 2 == 0 { 1.0 } else { -1.0 };
        let (h, round) = head.finish();
        // accelerator converges like (3 + sqrt 8)^-n, far below tol
        return Ok(ExtReal::new(h + sign * tail, round + 0.1 * tol));
    }
    let n0 = 1600usize;
    let mut head = CompSum::new();
    let mut t = 1.0f64;
    head.add(t);
    for k in 0..n0 - 1 {
        t *= term_ratio(num, den, k as f64);
        head.add(t);
    }
    let tail = quad::sum_tail_euler_maclaurin(&term_mag, n0 as f64, 0.1 * tol)?;
    let (h, round) = head.finish();
    // E-M correction error for a ~ x^{-1-s} tail: next omitted term scale
    let em_err = term_mag(n0 as f64) / (n0 as f64).powi(2);
    Ok(ExtReal::new(h + tail, round + 0.1 * tol + em_err))
}

/// Gauss hypergeometric 2F1(a, b; c; z).
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<ExtReal> {
    pfq_series(&[a, b], &[c], z, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::gamma;
    use std::f64::consts::PI;

    #[test]
    fn elementary_cases() {
        // 1F0(1;;z) = 1/(1-z) -- represent as 2F1(1, b; b; z)
        let v = gauss_2f1(1.0, 3.0, 3.0, 0.25, 1e-14).unwrap();
        assert!((v.value - 4.0 / 3.0).abs() < 1e-14);
        // 2F1(a, b; b; z) = (1-z)^{-a}
        let v = gauss_2f1(0.5, 2.0, 2.0, -0.7, 1e-14).unwrap();
        assert!((v.value - 1.7f64.powf(-0.5)).abs() < 1e-14);
    }

    #[test]
    fn arcsin_via_2f1() {
        // arcsin(x) = x 2F1(1/2, 1/2; 3/2; x^2)
        for &x in &[0.2, 1.0 / 3.0, 0.8] {
            let v = gauss_2f1(0.5, 0.5, 1.5, x * x, 1e-14).unwrap();
            assert!((x * v.value - x.asin()).abs() < 1e-13, "x={x}");
        }
    }

    #[test]
    fn gauss_summation_at_unit() {
        // 2F1(a, b; c; 1) = G(c) G(c-a-b) / (G(c-a) G(c-b))
        let (a, b, c) = (0.5, 0.25, 2.0);
        let v = gauss_2f1(a, b, c, 1.0, 1e-12).unwrap();
        let exact = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
        assert!((v.value - exact).abs() < 1e-11, "{} vs {exact}", v.value);
    }

    #[test]
    fn slowly_convergent_unit_point() {
        // 2F1(1/2, 1/2; 3/2 + 1/4; 1), margin s = 3/4
        let (a, b, c) = (0.5, 0.5, 1.75);
        let v = gauss_2f1(a, b, c, 1.0, 1e-11).unwrap();
        let exact = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
        assert!((v.value - exact).abs() < 1e-10, "{} vs {exact}", v.value);
    }

    #[test]
    fn alternating_unit_point() {
        // 2F1(1, 1; 2; -1) = ln 2
        let v = gauss_2f1(1.0, 1.0, 2.0, -1.0, 1e-13).unwrap();
        assert!((v.value - std::f64::consts::LN_2).abs() < 1e-13, "{}", v.value);
        // 2F1(1/2, 1; 3/2; -1) = pi/4
        let v = gauss_2f1(0.5, 1.0, 1.5, -1.0, 1e-13).unwrap();
        assert!((v.value - PI / 4.0).abs() < 1e-13, "{}", v.value);
    }

    #[test]
    fn higher_order_pfq() {
        // 3F2(1, 1, 1; 2, 2; 1) = zeta(2)
        let v = pfq_series(&[1.0, 1.0, 1.0], &[2.0, 2.0], 1.0, 1e-12).unwrap();
        assert!((v.value - PI * PI / 6.0).abs() < 1e-11, "{}", v.value);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(pfq_series(&[1.0], &[0.0], 0.5, 1e-12).is_err());
        assert!(pfq_series(&[1.0], &[-2.0], 0.5, 1e-12).is_err());
        assert!(gauss_2f1(1.0, 1.0, 1.5, 2.0, 1e-12).is_err());
        // z = 1 divergent: s = c - a - b = -0.5
        assert!(gauss_2f1(1.0, 1.0, 1.5, 1.0, 1e-12).is_err());
    }
}
