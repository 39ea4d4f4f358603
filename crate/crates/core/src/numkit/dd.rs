//! Minimal double-double (pair) arithmetic: an unevaluated sum hi + lo
//! with |lo| <= ulp(hi)/2, giving roughly 32 significant digits. Only
//! the handful of operations needed by the high-precision series
//! evaluations are provided.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// ln 2 to double-double precision.
pub const DD_LN_2: Dd = Dd { hi: std::f64::consts::LN_2, lo: 2.3190468138462996e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + o.lo);
        Dd { hi, lo }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(Dd { hi: -o.hi, lo: -o.lo })
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    /// Quotient self / b with a Newton correction step.
    pub fn div_f64(self, b: f64) -> Dd {
        let q0 = self.hi / b;
        let (p, e) = two_prod(q0, b);
        let r = self.sub(Dd { hi: p, lo: e });
        let q1 = (r.hi + r.lo) / b;
        let (hi, lo) = quick_two_sum(q0, q1);
        Dd { hi, lo }
    }

    /// 1/b to double-double precision.
    pub fn recip(b: f64) -> Dd {
        Dd::from_f64(1.0).div_f64(b)
    }

    /// Exact decimal rendering to `digits` significant fractional digits,
    /// via the exact rational value of hi + lo. Intended for |x| < 10.
    pub fn decimal_string(self, digits: usize) -> String {
        let r = BigRational::from_float(self.hi).unwrap_or_else(BigRational::zero)
            + BigRational::from_float(self.lo).unwrap_or_else(BigRational::zero);
        let neg = r.is_negative();
        let a = r.abs();
        let scale = BigInt::from(10u32).pow(digits as u32);
        // round half away from zero
        let scaled = (&a * &scale * BigInt::from(2) + BigInt::from(1)) / BigInt::from(2);
        let scaled = scaled.numer() / scaled.denom();
        let int_part = &scaled / &scale;
        let frac_part = &scaled % &scale;
        let mut frac = frac_part.to_string();
        while frac.len() < digits {
            frac.insert(0, '0');
        }
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
    }
}
