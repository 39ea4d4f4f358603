//! Lerch transcendent Phi(z, s, a) for integer s >= 1, real a > 0 and
//! complex |z| <= 1 (z = 1 needs s >= 2).

use num_complex::Complex64;

use crate::error::{MathError, Result};
use crate::quad;

/// Phi(z, s, a) = sum_{n>=0} z^n / (n + a)^s.
pub fn lerch_phi(z: Complex64, s: u32, a: f64) -> Result<Complex64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(MathError::Domain(format!("lerch_phi needs a > 0, got {a}")));
    }
    if s == 0 {
        return Err(MathError::Domain("lerch_phi needs s >= 1".into()));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(MathError::NonFiniteInput);
    }
    let r = z.norm();
    if r > 1.0 + 1e-14 {
        return Err(MathError::Domain(format!("lerch_phi needs |z| <= 1, got {r}")));
    }
    if r > 1.0 - 1e-14 && s == 1 && (z - Complex64::new(1.0, 0.0)).norm() < 1e-14 {
        return Err(MathError::Domain("lerch_phi diverges at z = 1, s = 1".into()));
    }
    if r <= 0.5 {
        return Ok(direct_series(z, s, a));
    }
    integral_rep(z, s, a)
}

fn direct_series(z: Complex64, s: u32, a: f64) -> Complex64 {
    let r = z.norm();
    let mut acc = Complex64::new(a.powi(-(s as i32)), 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    for n in 1..10_000usize {
        zp *= z;
        let term = zp / (n as f64 + a).powi(s as i32);
        acc += term;
        // geometric tail bound
        let tail = r.powi(n as i32 + 1) / ((n as f64 + 1.0 + a).powi(s as i32) * (1.0 - r));
        if tail < 1e-16 * acc.norm().max(1.0) {
            break;
        }
    }
    acc
}

/// Phi(z, s, a) = 1/(s-1)! * int_0^1 u^{a-1} |ln u|^{s-1} / (1 - z u) du.
fn integral_rep(z: Complex64, s: u32, a: f64) -> Result<Complex64> {
    let sm1 = (s - 1) as i32;
    let fact: f64 = (1..s).map(|j| j as f64).product::<f64>().max(1.0);
    let kernel = move |u: f64| -> Complex64 {
        let w = if sm1 == 0 { 1.0 } else { (-u.ln()).powi(sm1) };
        u.powf(a - 1.0) * w / (fact * (Complex64::new(1.0, 0.0) - z * u))
    };
    // integrate real and imaginary parts separately; singular at u = 0
    // (power/log), and at u = 1 the denominator can be small when z ~ 1.
    let re = quad::integrate_singular(&|u| kernel(u).re, 0.0, 1.0, 1e-13)?;
    let im = quad::integrate_singular(&|u| kernel(u).im, 0.0, 1.0, 1e-13)?;
    Ok(Complex64::new(re.value, im.value))
}
