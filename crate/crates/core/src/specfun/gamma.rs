//! Log-gamma (Lanczos) and polygamma functions.

use crate::error::{MathError, Result};
use crate::numkit::bernoulli_abs;

// Lanczos g = 7, 9-term coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs x > 0, got {x}");
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        // reflection for the few negative arguments we meet
        let pi = std::f64::consts::PI;
        pi / ((pi * x).sin() * gamma(1.0 - x))
    }
}

/// Signed Bernoulli number B_{2k} (B_2 = 1/6, B_4 = -1/30, ...).
fn bernoulli_signed(k: u32) -> f64 {
    let b = bernoulli_abs(2 * k).expect("index in range");
    if k % 2 == 1 {
        b
    } else {
        -b
    }
}

/// Polygamma psi^(order)(x) for x > 0, order <= 4: recurrence up to
/// x + N >= 16 plus the Bernoulli asymptotic series.
pub fn polygamma(order: u32, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(MathError::Domain(format!("polygamma needs x > 0, got {x}")));
    }
    if order > 4 {
        return Err(MathError::Domain("polygamma order must be <= 4".into()));
    }
    let m = order as i32;
    let mut shift = 0.0f64;
    let mut y = x;
    // recurrence: psi^(m)(y) = psi^(m)(y+1) - (-1)^m m! y^-(m+1)
    while y < 16.0 {
        let term = factorial(order) / y.powi(m + 1);
        shift += if order % 2 == 0 { -term } else { term };
        y += 1.0;
    }
    // asymptotic series at y >= 16
    let asym = if order == 0 {
        let mut s = y.ln() - 0.5 / y;
        let y2 = y * y;
        let mut yp = y2;
        for k in 1..=10 {
            s -= bernoulli_signed(k) / (2.0 * k as f64 * yp);
            yp *= y2;
        }
        s
    } else {
        let sign = if order % 2 == 1 { 1.0 } else { -1.0 };
        let mf = factorial(order);
        let mut s = factorial(order - 1) / y.powi(m) + mf / (2.0 * y.powi(m + 1));
        let y2 = y * y;
        let mut yp = y.powi(m) * y2;
        for k in 1..=10u32 {
            // B_2k (2k+m-1)! / (2k)! y^{2k+m}
            let mut coeff = bernoulli_signed(k);
            for j in (2 * k + 1)..=(2 * k + order - 1) {
                coeff *= j as f64;
            }
            s += coeff / yp;
            yp *= y2;
        }
        sign * s
    };
    Ok(asym + shift)
}

fn factorial(n: u32) -> f64 {
    (1..=n.max(1)).map(|i| i as f64).product::<f64>().max(1.0)
}

/// Digamma psi(x).
pub fn digamma(x: f64) -> Result<f64> {
    polygamma(0, x)
}
