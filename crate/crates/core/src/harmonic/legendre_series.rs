//! Legendre-polynomial series representations of Cl2 and Li2, the
//! exact rational-pair integrals I_k^(j) = int_0^1 v^{k+j} P_k(v)/(1+v^2) dv,
//! and the log-sine generating-function series/integral forms of Cl2.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{MathError, Result};
use crate::numkit::{ratio, CompSum, ExtReal};
use crate::quad::{self, QuadProblem};
use crate::specfun::{legendre_coeffs, legendre_p};

/// The transcendental carried by a [`RationalPair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Pi,
    Ln2,
}

/// An exact value of the form a + b*pi or a + b*ln2.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPair {
    pub a: BigRational,
    pub b: BigRational,
    pub basis: Basis,
}

impl RationalPair {
    pub fn to_f64(&self) -> f64 {
        let kappa = match self.basis {
            Basis::Pi => std::f64::consts::PI,
            Basis::Ln2 => std::f64::consts::LN_2,
        };
        super::sums::rational_to_f64(&self.a) + super::sums::rational_to_f64(&self.b) * kappa
    }
}

/// Moments T_p = int_0^1 v^p/(1+v^2) dv for p = 0..=max_p, each exactly
/// a + b*pi (even p) or a + b*ln2 (odd p), from T_0 = pi/4, T_1 = ln2/2
/// and T_{p+2} = 1/(p+1) - T_p.
fn t_moments(max_p: usize) -> Vec<(BigRational, BigRational)> {
    let mut t: Vec<(BigRational, BigRational)> = Vec::with_capacity(max_p + 1);
    t.push((BigRational::zero(), ratio(1, 4)));
    if max_p >= 1 {
        t.push((BigRational::zero(), ratio(1, 2)));
    }
    for p in 2..=max_p {
        let (a, b) = &t[p - 2];
        t.push((ratio(1, (p as i64) - 1) - a, -b.clone()));
    }
    t
}

/// Exact value of I_k^(j) = int_0^1 v^{k+j} P_k(v)/(1+v^2) dv as a
/// rational pair over pi (j = 0) or ln 2 (j = 1). P_k has parity k, so
/// every monomial moment involved shares the parity of j and a single
/// transcendental suffices.
pub fn ik_exact(j: u8, k: u32) -> Result<RationalPair> {
    if j > 1 || k > 64 {
        return Err(MathError::Domain(format!("ik_exact needs j in {{0,1}}, k <= 64; got ({j},{k})")));
    }
    let coeffs = legendre_coeffs(k);
    let t = t_moments(2 * k as usize + j as usize);
    let mut a = BigRational::zero();
    let mut b = BigRational::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (ta, tb) = &t[i + k as usize + j as usize];
        a += c * ta;
        b += c * tb;
    }
    Ok(RationalPair {
        a,
        b,
        basis: if j == 0 { Basis::Pi } else { Basis::Ln2 },
    })
}

/// Exact int_0^1 v^{k+j} P_k(v) dv.
pub fn ik_rhs_exact(j: u8, k: u32) -> Result<BigRational> {
    if j > 1 || k > 64 {
        return Err(MathError::Domain(format!("ik_rhs_exact needs j in {{0,1}}, k <= 64; got ({j},{k})")));
    }
    let coeffs = legendre_coeffs(k);
    let mut s = BigRational::zero();
    for (i, c) in coeffs.iter().enumerate() {
        s += c / ratio((i + k as usize + j as usize) as i64 + 1, 1);
    }
    Ok(s)
}

/// Direct quadrature of I_k^(j), as an independent check on [`ik_exact`].
pub fn ik_quadrature(j: u8, k: u32, tol: f64) -> Result<ExtReal> {
    let f = move |v: f64| v.powi((k + j as u32) as i32) * legendre_p(k, v) / (1.0 + v * v);
    let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol))?;
    Ok(ExtReal::new(r.value, r.err_estimate))
}

/// Legendre series of the Clausen function:
/// Cl2(theta) = (1/2 - ln2) theta
///   + (1/2) sum_{n>=1} (1/n + 1/(n+1)) int_0^theta P_n(cos t) dt,
/// truncated at N with each integral by quadrature.
pub fn cl2_legendre_series(theta: f64, n_terms: u32) -> Result<ExtReal> {
    if !(theta > 0.0 && theta < std::f64::consts::PI) || n_terms > 200 {
        return Err(MathError::Domain(format!(
            "cl2_legendre_series needs 0 < theta < pi and N <= 200, got ({theta},{n_terms})"
        )));
    }
    let mut acc = CompSum::new();
    acc.add((0.5 - std::f64::consts::LN_2) * theta);
    let mut quad_err = 0.0;
    let mut last = 0.0;
    for n in 1..=n_terms {
        let f = move |t: f64| legendre_p(n, t.cos());
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, theta, 1e-12))?;
        last = 0.5 * (1.0 / n as f64 + 1.0 / (n as f64 + 1.0)) * r.value;
        acc.add(last);
        quad_err += r.err_estimate;
    }
    let (v, round) = acc.finish();
    Ok(ExtReal::new(v, round + quad_err + n_terms as f64 * last.abs()))
}

/// Legendre series of the dilogarithm:
/// Li2(z) = int_0^z [1 - ln2 + sum_k (2k+1)/(k(k+1)) P_k(x)] dx/x.
/// The truncated bracket does not vanish at x = 0, so its value there
/// is subtracted before dividing by x; the subtracted constant tends to
/// zero as N grows (its tail is exactly the eq59 series residue).
pub fn li2_legendre_series(z: f64, n_terms: u32) -> Result<ExtReal> {
    if !((-1.0..1.0).contains(&z)) || z == 0.0 {
        return Err(MathError::Domain(format!(
            "li2_legendre_series needs -1 <= z < 1, z != 0, got {z}"
        )));
    }
    let bracket0 = 1.0 - std::f64::consts::LN_2 + bracket_at_zero(n_terms);
    let f = move |x: f64| {
        let mut acc = CompSum::new();
        acc.add(1.0 - std::f64::consts::LN_2 - bracket0);
        // single Bonnet recurrence pass over all orders
        let (mut pm1, mut p) = (1.0f64, x);
        for k in 1..=n_terms {
            let kf = k as f64;
            acc.add((2.0 * kf + 1.0) / (kf * (kf + 1.0)) * p);
            let next = ((2.0 * kf + 1.0) * x * p - kf * pm1) / (kf + 1.0);
            pm1 = p;
            p = next;
        }
        acc.value() / x
    };
    let (lo, hi, sign) = if z > 0.0 { (0.0, z, 1.0) } else { (z, 0.0, -1.0) };
    let r = quad::integrate(&QuadProblem::new(&f, lo, hi, 1e-10))?;
    Ok(ExtReal::new(sign * r.value, r.err_estimate + bracket0.abs()))
}

/// Sum over even-index Legendre constants P_{2n}(0):
/// sum_{n<=N/2} (4n+1)/(2n(2n+1)) P_{2n}(0), with
/// P_{2n}(0) = (-1)^n (2n-1)!!/(2^n n!).
fn bracket_at_zero(n_terms: u32) -> f64 {
    let mut acc = CompSum::new();
    let mut p0 = 1.0f64; // P_0(0)
    for n in 1..=(n_terms / 2) {
        let nf = n as f64;
        p0 *= -(2.0 * nf - 1.0) / (2.0 * nf);
        acc.add((4.0 * nf + 1.0) / (2.0 * nf * (2.0 * nf + 1.0)) * p0);
    }
    acc.value()
}

/// Partial sum of sum_n (4n+1)/(2n(2n+1)) (-1)^n Gamma(n+1/2)/(sqrt(pi) n!),
/// whose limit is ln2 - 1.
pub fn eq59_partial_sum(n_terms: u32) -> f64 {
    let mut acc = CompSum::new();
    let mut g = 1.0f64; // Gamma(n+1/2)/(sqrt(pi) n!) at n = 0
    for n in 1..=n_terms {
        let nf = n as f64;
        g *= (nf - 0.5) / nf;
        let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc.add((4.0 * nf + 1.0) / (2.0 * nf * (2.0 * nf + 1.0)) * sgn * g);
    }
    acc.value()
}

/// Arctangent-kernel Legendre series:
/// Cl2(theta(a)) = 2 sum_k a^{k+1}/(k+1) int_0^{1/a} v^{k+1} P_k(av)/(1+v^2) dv,
/// theta(a) = arccos((1-a^2)/(1+a^2)); the integrals are rescaled to
/// [0,1] before quadrature.
pub fn prop4_series(a: f64, n_terms: u32) -> Result<ExtReal> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(MathError::Domain(format!("prop4_series needs a > 0, got {a}")));
    }
    let mut acc = CompSum::new();
    let mut quad_err = 0.0;
    let mut last = 0.0;
    for k in 0..=n_terms {
        let f = move |w: f64| w.powi(k as i32 + 1) * legendre_p(k, w) / (a * a + w * w);
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, 1e-12))?;
        last = 2.0 * a / (k as f64 + 1.0) * r.value;
        acc.add(last);
        quad_err += r.err_estimate;
    }
    let (v, round) = acc.finish();
    Ok(ExtReal::new(v, round + quad_err + n_terms as f64 * last.abs()))
}

/// Log-sine generating-function series for the Clausen function:
/// Cl2(u) = 2[ asin(cos(u/2)) ln2
///   - sum_j (1/2)_j^2/(3/2)_j (sum_{k<j} 1/(2k+1)) cos^{2j+1}(u/2)/j! ].
pub fn prop5_cl2_series(u: f64, n_terms: u32) -> Result<ExtReal> {
    if !(u > 0.0 && u < 2.0 * std::f64::consts::PI) {
        return Err(MathError::Domain(format!("prop5_cl2_series needs 0 < u < 2pi, got {u}")));
    }
    let c = (0.5 * u).cos();
    let z = c * c;
    let mut acc = CompSum::new();
    let mut ratio_j = 1.0f64; // (1/2)_j^2 / ((3/2)_j j!)
    let mut h_odd = 0.0f64; // sum_{k=0}^{j-1} 1/(2k+1)
    let mut zj = 1.0f64;
    let mut last = 0.0;
    for j in 1..=n_terms {
        let jf = j as f64;
        ratio_j *= (jf - 0.5) * (jf - 0.5) / ((jf + 0.5) * jf);
        h_odd += 1.0 / (2.0 * jf - 1.0);
        zj *= z;
        last = ratio_j * h_odd * zj;
        acc.add(last);
    }
    let (s, round) = acc.finish();
    let tail = if z < 1.0 { last.abs() * z / (1.0 - z) * 2.0 } else { f64::INFINITY };
    Ok(ExtReal::new(
        2.0 * (c.asin() * std::f64::consts::LN_2 - c * s),
        2.0 * (round + tail),
    ))
}

/// Integral companion to [`prop5_cl2_series`]:
/// Cl2(u) = 2{ asin(cos(u/2)) ln2 - int_0^1 [ asin(sqrt((1-sqrt(1-t z))/2))
///   - sqrt(t) asin(sqrt((1-sin(u/2))/2)) ] dt/(t(t-1)) }, z = cos^2(u/2).
pub fn prop6_cl2_integral(u: f64, tol: f64) -> Result<ExtReal> {
    if !(u > 0.0 && u < 2.0 * std::f64::consts::PI) {
        return Err(MathError::Domain(format!("prop6_cl2_integral needs 0 < u < 2pi, got {u}")));
    }
    let c = (0.5 * u).cos();
    let z = c * c;
    let fixed = ((1.0 - (0.5 * u).sin()) / 2.0).sqrt().asin();
    let f = move |t: f64| {
        let inner = ((1.0 - (1.0 - t * z).sqrt()) / 2.0).sqrt().asin();
        (inner - t.sqrt() * fixed) / (t * (t - 1.0))
    };
    let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(true, true))?;
    // the series side carries cos(u/2) as an overall factor of its z^j
    // terms; in the integral form that factor is 1/sqrt(z) * z = c
    let value = 2.0 * (c.asin() * std::f64::consts::LN_2 - if c == 0.0 { 0.0 } else { c.signum() * r.value });
    Ok(ExtReal::new(value, 2.0 * r.err_estimate))
}
