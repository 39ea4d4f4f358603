//! Legendre polynomials (floating point and exact rational coefficients)
//! and the complete elliptic integral K via the arithmetic-geometric mean.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// P_n(x) by the Bonnet recurrence.
pub fn legendre_p(n: u32, x: f64) -> f64 {
    assert!(x.is_finite());
    let mut p_prev = 1.0f64;
    if n == 0 {
        return p_prev;
    }
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = next;
    }
    p
}

/// Exact coefficients of P_n: returns c with P_n(x) = sum_i c[i] x^i.
pub fn legendre_coeffs(n: u32) -> Vec<BigRational> {
    let mut prev = vec![BigRational::one()];
    if n == 0 {
        return prev;
    }
    let mut cur = vec![BigRational::zero(), BigRational::one()];
    for k in 1..n {
        let kf = BigRational::from(BigInt::from(k));
        let a = (BigRational::from(BigInt::from(2 * k + 1))) / (&kf + BigRational::one());
        let b = &kf / (&kf + BigRational::one());
        let mut next = vec![BigRational::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += &a * c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= &b * c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Complete elliptic integral K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t),
/// modulus convention, for |k| < 1.
pub fn elliptic_k_agm(k: f64) -> f64 {
    assert!(k.abs() < 1.0, "elliptic_k_agm needs |k| < 1, got {k}");
    let mut a = 1.0f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..60 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let am = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = am;
    }
    std::f64::consts::FRAC_PI_2 / a
}
