//! Foundation arithmetic: compensated summation, double-double pairs,
//! exact rationals, named constants and Bernoulli numbers.

pub mod dd;

use crate::error::{MathError, Result};
use num_bigint::BigInt;
use std::sync::OnceLock;

pub use num_rational::BigRational;

/// An approximation paired with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtReal {
    pub value: f64,
    pub bound: f64,
}

impl ExtReal {
    pub fn new(value: f64, bound: f64) -> Self {
        debug_assert!(value.is_finite() && bound >= 0.0 && bound.is_finite());
        ExtReal { value, bound }
    }

    pub fn exact(value: f64) -> Self {
        ExtReal { value, bound: 0.0 }
    }

    /// Widen the bound by an extra truncation term.
    pub fn widen(self, extra: f64) -> Self {
        ExtReal {
            value: self.value,
            bound: self.bound + extra,
        }
    }
}

/// Named constants of the problem domain, computed at startup from
/// primitive operations so the cross-relations can be checked.
#[derive(Debug, Clone, Copy)]
pub struct ConstantTable {
    /// omega = arctan(1/(2 sqrt 2))
    pub omega: f64,
    /// alpha = arcsin(1/3); equal to omega
    pub alpha: f64,
    /// theta_plus = -arctan(4 sqrt 2 / 7); equal to -2 omega
    pub theta_plus: f64,
    /// Catalan's constant G
    pub catalan: f64,
    pub ln2: f64,
    pub pi: f64,
    pub zeta2: f64,
}

static CONSTANTS: OnceLock<ConstantTable> = OnceLock::new();

/// The constant table, built once.
pub fn constants() -> ConstantTable {
    *CONSTANTS.get_or_init(|| {
        let pi = std::f64::consts::PI;
        let omega = (1.0 / (2.0 * 2.0_f64.sqrt())).atan();
        let alpha = (1.0_f64 / 3.0).asin();
        let theta_plus = -(4.0 * 2.0_f64.sqrt() / 7.0).atan();
        let catalan = alternating_sum_cvz(|k| {
            let d = 2.0 * k as f64 + 1.0;
            1.0 / (d * d)
        });
        ConstantTable {
            omega,
            alpha,
            theta_plus,
            catalan,
            ln2: 2.0_f64.ln(),
            pi,
            zeta2: pi * pi / 6.0,
        }
    })
}

/// Compensated (Neumaier) summation of a finite sequence.
///
/// The returned bound covers rounding only; truncation bounds are the
/// caller's to add via [`ExtReal::widen`].
pub fn comp_sum(terms: &[f64]) -> Result<ExtReal> {
    let mut sum = 0.0;
    let mut c = 0.0;
    let mut abs_sum = 0.0;
    for &t in terms {
        if !t.is_finite() {
            return Err(MathError::NonFiniteInput);
        }
        abs_sum += t.abs();
        let s = sum + t;
        if sum.abs() >= t.abs() {
            c += (sum - s) + t;
        } else {
            c += (t - s) + sum;
        }
        sum = s;
    }
    Ok(ExtReal::new(sum + c, 2.0 * f64::EPSILON * abs_sum))
}

/// Streaming Neumaier accumulator for series loops.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompSum {
    sum: f64,
    c: f64,
    abs_sum: f64,
}

impl CompSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, t: f64) {
        self.abs_sum += t.abs();
        let s = self.sum + t;
        if self.sum.abs() >= t.abs() {
            self.c += (self.sum - s) + t;
        } else {
            self.c += (t - s) + self.sum;
        }
        self.sum = s;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.c
    }

    pub fn rounding_bound(&self) -> f64 {
        2.0 * f64::EPSILON * self.abs_sum
    }

    /// (value, rounding bound) in one call.
    pub fn finish(&self) -> (f64, f64) {
        (self.value(), self.rounding_bound())
    }
}

/// zeta(2k) for k >= 1, by direct summation with an analytic tail.
pub fn zeta_even(k: u32) -> f64 {
    assert!(k >= 1);
    let s = 2.0 * k as f64;
    if k == 1 {
        let pi = std::f64::consts::PI;
        return pi * pi / 6.0;
    }
    if k >= 28 {
        // 2^-56 below 1 ulp; only the n=1,2 terms survive
        return 1.0 + 0.5_f64.powf(s) + (1.0 / 3.0_f64).powf(s);
    }
    let n_max = 100u32;
    let mut acc = CompSum::new();
    for n in 1..=n_max {
        acc.add((n as f64).powf(-s));
    }
    // Euler-Maclaurin tail from n_max+1, corrections through B_4
    let a = n_max as f64 + 1.0;
    let tail = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s) + s / 12.0 * a.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * a.powf(-s - 3.0);
    acc.value() + tail
}

/// |B_{2k}| = 2 (2k)! zeta(2k) / (2 pi)^{2k}, for even indices 2..=60.
pub fn bernoulli_abs(two_k: u32) -> Result<f64> {
    if two_k % 2 != 0 || two_k < 2 || two_k > 60 {
        return Err(MathError::Domain(format!(
            "bernoulli_abs index {two_k} must be even and in 2..=60"
        )));
    }
    let k = two_k / 2;
    let mut fact = 1.0f64;
    for i in 2..=two_k {
        fact *= i as f64;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    Ok(2.0 * fact * zeta_even(k) / two_pi.powi(two_k as i32))
}

/// Sum of an alternating series sum_{k>=0} (-1)^k a(k) with totally
/// monotone terms, by the Cohen-Villegas-Zagier acceleration. Converges
/// like (3+sqrt 8)^-n; n = 40 puts the error below f64 resolution for
/// the series used here.
pub fn alternating_sum_cvz(a: impl Fn(usize) -> f64) -> f64 {
    let n = 40usize;
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k);
        let kf = k as f64;
        let nf = n as f64;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Exact rational from an integer pair.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
