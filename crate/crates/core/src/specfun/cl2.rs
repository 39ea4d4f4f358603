//! Clausen function Cl_2.

use crate::numkit::{zeta_even, ExtReal};

// pi split into a high and low part so that theta - k*pi keeps full
// precision during range reduction.
const PI_HI: f64 = 3.141_592_653_589_793;
const PI_LO: f64 = 1.224_646_799_147_353_2e-16;

/// Reduce theta to (sign, r) with r in [0, pi] and Cl_2(theta) = sign * Cl_2(r).
///
/// Uses oddness, 2*pi periodicity and Cl_2(pi + r) = -Cl_2(pi - r).
pub fn reduce(theta: f64) -> (f64, f64) {
    let (mut sign, theta) = if theta < 0.0 { (-1.0, -theta) } else { (1.0, theta) };
    let k = (theta / PI_HI).round();
    let mut r = (theta - k * PI_HI) - k * PI_LO; // r in about [-pi/2, pi/2]
    let k_odd = (k as i64).rem_euclid(2) == 1;
    if k_odd {
        // theta = pi + r (mod 2*pi)
        if r >= 0.0 {
            sign = -sign;
            r = (PI_HI - r) + PI_LO;
        } else {
            r += PI_HI; // safe: no cancellation, |r| <= pi/2
        }
    } else if r < 0.0 {
        sign = -sign;
        r = -r;
    }
    (sign, r.clamp(0.0, PI_HI))
}

/// Cl_2 on the reduced interval [0, pi]:
/// Cl_2(x) = x - x ln(2 sin(x/2)) - sum_{k>=1} 2 zeta(2k) x^{2k+1} / ((2k+1)(2 pi)^{2k}).
fn cl2_core(x: f64, tol: f64) -> ExtReal {
    if x == 0.0 {
        return ExtReal::exact(0.0);
    }
    let log_term = x * (2.0 * (0.5 * x).sin()).ln();
    let q = (x / (2.0 * std::f64::consts::PI)).powi(2);
    let mut series = 0.0f64;
    let mut abs_budget = 0.0f64;
    let mut xp = x * q; // x^{2k+1} / (2 pi)^{2k} at k = 1
    let mut tail = f64::INFINITY;
    for k in 1..=40u32 {
        let term = 2.0 * zeta_even(k) * xp / (2.0 * k as f64 + 1.0);
        series += term;
        abs_budget += term.abs();
        xp *= q;
        tail = 2.0 * zeta_even(k + 1) * xp / (2.0 * k as f64 + 3.0) / (1.0 - q);
        if tail <= 0.1 * tol.max(1e-16) {
            break;
        }
    }
    let value = x - log_term - series;
    let round = 4.0 * f64::EPSILON * (x.abs() + log_term.abs() + abs_budget);
    ExtReal::new(value, tail.max(round))
}

/// Clausen function Cl_2(theta) for any finite theta.
pub fn cl2(theta: f64, tol: f64) -> ExtReal {
    assert!(theta.is_finite(), "cl2 needs finite theta");
    let (sign, r) = reduce(theta);
    let core = cl2_core(r, tol);
    ExtReal::new(sign * core.value, core.bound)
}

/// Convenience wrapper returning just the value at full working precision.
pub fn cl2_f(theta: f64) -> f64 {
    cl2(theta, 1e-15).value
}

/// Defining sine series, summed term by term with a crude tail bound.
/// Slow; kept as an independent cross-check and benchmark strategy.
pub fn cl2_sine_series(theta: f64, n_terms: usize) -> ExtReal {
    let mut s = crate::numkit::CompSum::new();
    for n in 1..=n_terms {
        let nf = n as f64;
        s.add((nf * theta).sin() / (nf * nf));
    }
    let (value, round) = s.finish();
    // |tail| <= sum_{n > N} 1/n^2 <= 1/N
    ExtReal::new(value, round + 1.0 / n_terms as f64)
}
