//! Generalized harmonic numbers and the alternating S-family sums
//! sum_n (-1/beta^3)^n H_{pn+q}^{(r)} / (n + 1/alpha)^j, in direct,
//! closed and integral-representation forms.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{MathError, Result};
use crate::numkit::{constants, CompSum, ExtReal};
use crate::quad::{self, QuadProblem};
use crate::specfun::{cl2_f, lerch_phi, li2, li2_real};

/// Generalized harmonic number H_n^(r) as a float.
pub fn harm(n: u64, r: u32) -> f64 {
    assert!((1..=4).contains(&r), "harm needs 1 <= r <= 4");
    if n <= 64 {
        let q = harm_exact(n, r);
        return rational_to_f64(&q);
    }
    let mut acc = CompSum::new();
    for k in 1..=n {
        acc.add((k as f64).powi(-(r as i32)));
    }
    acc.value()
}

/// H_n^(r) as an exact rational, for n <= 64.
pub fn harm_exact(n: u64, r: u32) -> BigRational {
    assert!(n <= 64, "harm_exact is limited to n <= 64");
    assert!((1..=4).contains(&r));
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let kp = BigInt::from(k).pow(r);
        acc += BigRational::new(BigInt::from(1), kp);
    }
    acc
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    // exact enough for the sizes we use: split as truncated quotient + remainder
    let (num, den) = (q.numer(), q.denom());
    let int = num / den;
    let rem = num - &int * den;
    let int_f: f64 = int.to_string().parse().unwrap_or(f64::NAN);
    let rem_f: f64 = rem.to_string().parse().unwrap_or(f64::NAN);
    let den_f: f64 = den.to_string().parse().unwrap_or(f64::NAN);
    int_f + rem_f / den_f
}

/// Parameters of S_j(alpha, beta, r) with mixed-stride harmonic index
/// H_{pn+q}: sum_{n>=0} (-1/beta^3)^n H_{pn+q}^{(r)} / (n + 1/alpha)^j.
#[derive(Clone, Copy, Debug)]
pub struct SumSpec {
    pub alpha: f64,
    pub beta: f64,
    pub j: u32,
    pub r: u32,
    pub p: u32,
    pub q: u32,
}

impl SumSpec {
    pub fn new(alpha: f64, beta: f64) -> Self {
        Self { alpha, beta, j: 1, r: 1, p: 1, q: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(MathError::Domain(format!("alpha must be > 0, got {}", self.alpha)));
        }
        if !(self.beta.abs() > 1.0) || !self.beta.is_finite() {
            return Err(MathError::Domain(format!("|beta| must be > 1, got {}", self.beta)));
        }
        if self.j < 1 || self.r < 1 || self.p < 1 {
            return Err(MathError::Domain("need j >= 1, r >= 1, p >= 1".into()));
        }
        Ok(())
    }
}

/// Direct summation with a geometric tail bound; the harmonic-number
/// growth is absorbed by an extra (1 + ln(n+2)) guard factor.
pub fn s_family(spec: &SumSpec, tol: f64) -> Result<ExtReal> {
    spec.validate()?;
    let ratio = 1.0 / spec.beta.powi(3);
    let mut acc = CompSum::new();
    let mut h = harm((spec.q) as u64, spec.r); // H_q at n = 0
    let mut pw = 1.0f64; // (-1/beta^3)^n
    let mut n: u64 = 0;
    loop {
        acc.add(pw * h / (n as f64 + 1.0 / spec.alpha).powi(spec.j as i32));
        n += 1;
        pw *= -ratio;
        // advance H_{pn+q} by p strides
        for s in 0..spec.p as u64 {
            let idx = (spec.p as u64) * (n - 1) + spec.q as u64 + s + 1;
            h += (idx as f64).powi(-(spec.r as i32));
        }
        let guard = 1.0 + ((n + 2) as f64).ln();
        let tail = pw.abs() * h / (n as f64 + 1.0 / spec.alpha).powi(spec.j as i32)
            / (1.0 - ratio.abs())
            * guard;
        if tail <= 0.5 * tol || n > 10_000 {
            let (v, round) = acc.finish();
            return Ok(ExtReal::new(v, round + tail));
        }
    }
}

/// The four independent closed-form evaluations of S(2,2), in order:
/// Clausen form, dilogarithm form, exponential-kernel dilogarithm form,
/// Ramanujan-route form. Complex intermediates must combine to real
/// values; the imaginary residue is asserted below 1e-11.
pub fn s22_closed_forms() -> Vec<f64> {
    let c = constants();
    let tp = c.theta_plus;
    let s = 2.0f64.sqrt();
    let ln2 = std::f64::consts::LN_2;
    let pi = std::f64::consts::PI;

    // Clausen form
    let v1 = 4.0 * s * (cl2_f(tp + pi) + tp * ln2);

    // dilogarithm form: 2 sqrt2 { 2 theta+ ln2 - i [Li2(-e^{i tp}) - Li2(-e^{-i tp})] }
    let e = Complex64::from_polar(1.0, tp);
    let d = li2(-e) - li2(-e.conj());
    let v2c = 2.0 * s * (Complex64::new(2.0 * tp * ln2, 0.0) - Complex64::new(0.0, 1.0) * d);
    let v2 = real_part_checked(v2c);

    // exponential-kernel form
    let z = Complex64::new(4.0, -s) / 8.0;
    let d2 = li2(z) - li2(z.conj());
    let v3c = s
        * (Complex64::new(
            -5.0 * (pi - 2.0 * (2.0 * s).atan()) * ln2 + 4.0 * c.omega * (8.0f64 / 3.0).ln(),
            0.0,
        ) + Complex64::new(0.0, 2.0) * d2);
    let v3 = real_part_checked(v3c);

    // Ramanujan route: sum_k H_k/(k+1/2) x^{2k} at x = i/(2 sqrt2) equals S(2,2)
    let x = Complex64::new(0.0, 1.0 / (2.0 * s));
    let v4 = real_part_checked(ramanujan_route(x));

    vec![v1, v2, v3, v4]
}

/// sum_k H_k/(k+1/2) x^{2k} = (2/x)[ln2 ln((1-x)/(1+x))
///   + ln^2((1-x)/(1+x))/4 + pi^2/12 + Li2((x-1)/(x+1))], |x| < 1.
fn ramanujan_route(x: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let l = ((one - x) / (one + x)).ln();
    let pi = std::f64::consts::PI;
    2.0 / x
        * (std::f64::consts::LN_2 * l + 0.25 * l * l + pi * pi / 12.0 + li2((x - one) / (x + one)))
}

pub(crate) fn real_part_checked(z: Complex64) -> f64 {
    assert!(
        z.im.abs() <= 1e-11,
        "imaginary residue {} exceeds tolerance in a real-valued result",
        z.im
    );
    z.re
}

/// Closed form of S(2, beta) for beta > 1:
/// 2 beta^{3/2} [Cl_2(theta) - 2 arccot(beta^{3/2}) ln 2],
/// theta = arccos((1 - beta^3)/(1 + beta^3)).
pub fn s2beta_closed(beta: f64) -> Result<f64> {
    if !(beta > 1.0) || !beta.is_finite() {
        return Err(MathError::Domain(format!(
            "s2beta_closed needs beta > 1, got {beta}"
        )));
    }
    let b32 = beta.powf(1.5);
    let b3 = beta.powi(3);
    let theta = ((1.0 - b3) / (1.0 + b3)).acos();
    Ok(2.0 * b32 * (cl2_f(theta) - 2.0 * b32.recip().atan() * std::f64::consts::LN_2))
}

/// 2F1(1, 1/alpha; 1 + 1/alpha; z) = sum_n (1/alpha)/(n + 1/alpha) z^n,
/// |z| < 1 — the kernel of several S-family representations.
fn f21_alpha(alpha: f64, z: f64) -> f64 {
    debug_assert!(z.abs() < 1.0);
    let ia = 1.0 / alpha;
    let mut acc = CompSum::new();
    let mut zp = 1.0f64;
    for n in 0..100_000 {
        acc.add(ia / (n as f64 + ia) * zp);
        zp *= z;
        if zp.abs() / (1.0 - z.abs()) < 1e-17 {
            break;
        }
    }
    acc.value()
}

/// Every integral representation applicable to the given spec, each
/// labelled by kernel; all must agree with `s_family` within bounds.
pub fn s_integral_reps(spec: &SumSpec, tol: f64) -> Result<Vec<(&'static str, ExtReal)>> {
    spec.validate()?;
    let mut out: Vec<(&'static str, ExtReal)> = Vec::new();
    let a = spec.alpha;
    let b3 = spec.beta.powi(3);
    let w = -1.0 / b3;
    let ia = 1.0 / a;

    let base = spec.j == 1 && spec.r == 1 && spec.p == 1 && spec.q == 0;

    if spec.r == 1 && spec.j == 1 {
        // Gauss-kernel form (covers the mixed-stride H_{pn+q} case):
        // alpha int_0^1 [t^q F(-t^p/b^3) - F(-1/b^3)] dt/(t-1)
        let fq = f21_alpha(a, w);
        let p = spec.p as i32;
        let q = spec.q as i32;
        let f = move |t: f64| {
            a * (t.powi(q) * f21_alpha(a, w * t.powi(p)) - fq) / (t - 1.0)
        };
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(false, true))?;
        out.push(("gauss_kernel", ExtReal::new(r.value, r.err_estimate)));
    }

    if spec.p == 1 && spec.q == 0 {
        // Lerch-kernel form with the log power carrying the order r:
        // int_0^1 [Phi(-t/b^3, j, 1/alpha) - Phi(-1/b^3, j, 1/alpha)] ln^{r-1}t dt/(t-1),
        // normalized by int_0^1 t^k ln^{r-1}t dt = (-1)^{r-1}(r-1)!/(k+1)^r.
        let j = spec.j;
        let rr = (spec.r - 1) as i32;
        let mut norm = if rr % 2 == 0 { 1.0 } else { -1.0 };
        for i in 1..=rr {
            norm *= i as f64;
        }
        let phi1 = lerch_phi(Complex64::new(w, 0.0), j, ia)?.re;
        let f = move |t: f64| {
            let phit = lerch_phi(Complex64::new(w * t, 0.0), j, ia)
                .map(|v| v.re)
                .unwrap_or(f64::NAN);
            let lp = if rr == 0 { 1.0 } else { t.ln().powi(rr) };
            (phit - phi1) * lp / (t - 1.0)
        };
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(true, true))?;
        out.push((
            "lerch_kernel",
            ExtReal::new(r.value / norm, r.err_estimate / norm.abs()),
        ));
    }

    if base {
        // exponential-kernel form:
        // -b^3 int_0^1 u^{1/alpha} ln(1 + u/b^3) / (u + b^3) du/u
        let f = move |u: f64| -b3 * u.powf(ia - 1.0) * (1.0 + u / b3).ln() / (u + b3);
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(true, false))?;
        out.push(("exp_kernel", ExtReal::new(r.value, r.err_estimate)));
    }

    if base {
        // integration by parts of the generating-function integral:
        // S = (1/w) [ ln^2(1-w)/2
        //             + (1 - 1/alpha) int_0^1 t^{1/alpha-2} ln^2(1-wt)/2 dt ],
        // with the integrand arranged so t^{1/alpha - 2} never overflows at
        // the extreme tanh-sinh nodes (t down to ~1e-300)
        let f = move |t: f64| {
            let l = (-w * t).ln_1p() / t;
            0.5 * t.powf(ia) * l * l
        };
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(true, false))?;
        let boundary = 0.5 * (-w).ln_1p().powi(2);
        let value = (boundary + (1.0 - ia) * r.value) / w;
        out.push((
            "byparts_kernel",
            ExtReal::new(value, (1.0 - ia) * r.err_estimate / w.abs()),
        ));
    }

    if spec.j == 1 && spec.p == 1 && spec.q == 0 && spec.r <= 2 {
        // polylogarithm generating-function form:
        // int_0^1 t^{1/alpha - 1} Li_r(w t)/(1 - w t) dt
        let rr = spec.r;
        let f = move |t: f64| {
            let z = w * t;
            let li = if rr == 1 { -(1.0 - z).ln() } else { li2_real(z) };
            t.powf(ia - 1.0) * li / (1.0 - z)
        };
        let r = quad::integrate(&QuadProblem::new(&f, 0.0, 1.0, tol).singular(true, false))?;
        out.push(("polylog_kernel", ExtReal::new(r.value, r.err_estimate)));
    }

    if base {
        // free-parameter representation evaluated at t = 1:
        // S = -b^3/2 ln^2(b^3/(b^3+1))
        //     - (alpha-1) int_0^inf ln x/(x+1)^2 F(-1/(b^3(x+1))) dx
        let elementary = -b3 / 2.0 * (b3 / (b3 + 1.0)).ln().powi(2);
        let g = move |x: f64| x.ln() / (x + 1.0).powi(2) * f21_alpha(a, -1.0 / (b3 * (x + 1.0)));
        let h = move |t: f64| {
            let om = 1.0 - t;
            g(t / om) / (om * om)
        };
        let r = quad::integrate(&QuadProblem::new(&h, 0.0, 1.0, tol).singular(true, true))?;
        out.push((
            "free_param_kernel",
            ExtReal::new(elementary - (a - 1.0) * r.value, (a - 1.0).abs() * r.err_estimate),
        ));
    }

    Ok(out)
}

/// Closed forms of s(x) and t(x), the half-odd-power sums over H_{2n}
/// and H_{2n+1}; both are analytic continuations valid on 0 < x <= 1.
pub fn st_closed(x: f64) -> Result<(Complex64, Complex64)> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(MathError::Domain(format!("st_closed needs 0 < x <= 1, got {x}")));
    }
    let sx = x.sqrt();
    let at = sx.atan();
    let l = (x + 1.0).ln();
    let i = Complex64::new(0.0, 1.0);
    let s = -i * at * l;
    let dli = li2(i * sx) - li2(-i * sx);
    let t = -i * (Complex64::new(at * l, 0.0) + i * dli);
    Ok((s, t))
}

/// Ramanujan's H(x) = sum_k H_k x^{2k-1}/(2k-1) in closed form, 0 < x < 1.
pub fn ramanujan_h(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(MathError::Domain(format!("ramanujan_h needs 0 < x < 1, got {x}")));
    }
    let l = ((1.0 - x) / (1.0 + x)).ln();
    let pi = std::f64::consts::PI;
    Ok((std::f64::consts::LN_2 - 1.0) * l + (1.0 - x * x).ln() / x + 0.25 * l * l
        + pi * pi / 12.0
        + li2_real((x - 1.0) / (x + 1.0)))
}

/// Truncated defining series of H(x), for use as an oracle.
pub fn ramanujan_h_series(x: f64, n_terms: usize) -> f64 {
    let mut acc = CompSum::new();
    let mut h = 0.0f64;
    for k in 1..=n_terms {
        h += 1.0 / k as f64;
        acc.add(h * x.powi(2 * k as i32 - 1) / (2.0 * k as f64 - 1.0));
    }
    acc.value()
}

/// Harris's odd auxiliary function vbar(z) = v(z) + 2 z ln 2 via its
/// power-series expansion truncated at N, together with the series
/// coefficients C_1..C_N built from harmonic-number expansions.
pub fn harris_vbar(z: f64, n_max: usize) -> Result<(f64, Vec<f64>)> {
    if !(z.abs() < 1.0) {
        return Err(MathError::Domain(format!("harris_vbar needs |z| < 1, got {z}")));
    }
    let coeffs = harris_coefficients(n_max);
    let mut acc = CompSum::new();
    let z2 = z * z;
    let mut zp = z * z2; // z^{2n+1} at n = 1
    for c in &coeffs {
        acc.add(c * zp);
        zp *= z2;
    }
    Ok((acc.value(), coeffs))
}

/// Direct evaluation of vbar through the dilogarithm definition of v(z).
pub fn harris_vbar_direct(z: f64) -> f64 {
    let lm = (0.5 * (1.0 - z)).ln();
    let lp = (0.5 * (1.0 + z)).ln();
    let v = 0.5 * (li2_real(0.5 * (1.0 - z)) - li2_real(0.5 * (1.0 + z)))
        - 0.25 * (lm * lm - lp * lp);
    v + 2.0 * z * std::f64::consts::LN_2
}

/// C_n coefficients of vbar(z) = sum C_n z^{2n+1}: the dilogarithm part
/// contributes (A_{2n} - A_{2n+1})/2 differences of the moment sums
/// A_l = sum_{n>=l} H_n^(2) C(n,l)/2^n, and the log^2 part subtracts
/// (H_{2n} + ln 2)/(2n+1).
fn harris_coefficients(n_max: usize) -> Vec<f64> {
    let l_max = 2 * n_max + 1;
    let a = moment_sums(l_max);
    let ln2 = std::f64::consts::LN_2;
    let mut out = Vec::with_capacity(n_max);
    let mut h2n = 1.0 + 0.5; // H_2
    for n in 1..=n_max {
        let c = 0.5 * (a[2 * n] - a[2 * n + 1]) - (h2n + ln2) / (2.0 * n as f64 + 1.0);
        out.push(c);
        h2n += 1.0 / (2.0 * n as f64 + 1.0) + 1.0 / (2.0 * n as f64 + 2.0);
    }
    out
}

/// A_l = sum_{n >= l} H_n^(2) C(n, l) / 2^n for l = 0..=l_max.
fn moment_sums(l_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(l_max + 1);
    for l in 0..=l_max {
        let mut acc = CompSum::new();
        // t_n = H_n^(2) C(n,l)/2^n via the term ratio
        let mut h2 = (1..=l.max(1)).map(|k| 1.0 / (k as f64 * k as f64)).sum::<f64>();
        if l == 0 {
            h2 = 0.0;
        }
        let mut t = h2 * 0.5f64.powi(l as i32); // C(l,l) = 1
        acc.add(t);
        let mut n = l;
        loop {
            n += 1;
            let nf = n as f64;
            let h_prev = h2;
            h2 += 1.0 / (nf * nf);
            if h_prev > 0.0 {
                t *= nf / (nf - l as f64) * 0.5 * (h2 / h_prev);
            } else {
                // first step off H_0 = 0
                t = h2 * binom_over_pow2(n, l);
            }
            acc.add(t);
            if t.abs() < 1e-18 * acc.value().abs().max(1e-3) && n > l + 16 {
                break;
            }
            if n > l + 4000 {
                break;
            }
        }
        out.push(acc.value());
    }
    out
}

fn binom_over_pow2(n: usize, l: usize) -> f64 {
    // C(n, l) / 2^n without overflow
    let mut v = 0.5f64.powi((n - l) as i32);
    for i in 1..=l {
        v *= (n - l + i) as f64 / i as f64 * 0.5;
    }
    v
}

/// Bernoulli-series evaluations of int_0^b a/sin(a) da and
/// int_0^b a/tan(a) da, |b| < pi, written factorial-free through
/// zeta(2k) so the terms stay finite at any order.
pub fn bernoulli_trig_sums(b: f64) -> Result<(ExtReal, ExtReal)> {
    if !(b.abs() < std::f64::consts::PI) {
        return Err(MathError::Domain(format!("need |b| < pi, got {b}")));
    }
    let pi = std::f64::consts::PI;
    let mut sin_acc = CompSum::new();
    let mut tan_acc = CompSum::new();
    sin_acc.add(b);
    tan_acc.add(b);
    let qp = (b / pi).powi(2);
    let qh = (b / (2.0 * pi)).powi(2);
    let mut pp = 1.0f64; // (b/pi)^{2k}
    let mut ph = 1.0f64; // (b/2pi)^{2k}
    let mut tail = f64::INFINITY;
    for k in 1..=600u32 {
        pp *= qp;
        ph *= qh;
        let z = crate::numkit::zeta_even(k);
        let f = 2.0 * z * b / (2.0 * k as f64 + 1.0);
        sin_acc.add(f * (pp - 2.0 * ph));
        tan_acc.add(-f * pp);
        tail = 2.0 * z * b.abs() * pp * qp / (1.0 - qp);
        if tail < 1e-17 * b.abs().max(1e-3) {
            break;
        }
    }
    let (sv, sr) = sin_acc.finish();
    let (tv, tr) = tan_acc.finish();
    Ok((ExtReal::new(sv, sr + tail), ExtReal::new(tv, tr + tail)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::ratio;
    use crate::specfun::gauss_2f1;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn harmonic_values() {
        assert_eq!(harm(0, 1), 0.0);
        assert_eq!(harm_exact(3, 1), ratio(11, 6));
        assert_eq!(harm_exact(4, 2), ratio(205, 144));
        assert!((harm(3, 1) - 11.0 / 6.0).abs() < 1e-15);
        // compensated path vs polygamma: H_n = psi(n+1) + gamma
        let n = 200u64;
        let psi = crate::specfun::digamma(n as f64 + 1.0).unwrap();
        let gamma = -crate::specfun::digamma(1.0).unwrap();
        assert!((harm(n, 1) - (psi + gamma)).abs() < 1e-12);
    }

    #[test]
    fn s22_direct_sum_matches_all_closed_forms() {
        let direct = s_family(&SumSpec::new(2.0, 2.0), 1e-14).unwrap();
        for (i, v) in s22_closed_forms().iter().enumerate() {
            assert!(
                (direct.value - v).abs() < 1e-12,
                "route {i}: {} vs {}",
                direct.value,
                v
            );
        }
    }

    #[test]
    fn s2beta_matches_direct_sums() {
        for &beta in &[2.0, 3.0, 4.0] {
            let direct = s_family(&SumSpec::new(2.0, beta), 1e-14).unwrap();
            let closed = s2beta_closed(beta).unwrap();
            assert!(
                (direct.value - closed).abs() < 1e-12,
                "beta={beta}: {} vs {closed}",
                direct.value
            );
        }
        assert!(s2beta_closed(1.0).is_err());
        assert!(s2beta_closed(-2.0).is_err());
    }

    #[test]
    fn integral_reps_agree_with_direct_sum() {
        let spec = SumSpec::new(2.0, 2.0);
        let direct = s_family(&spec, 1e-14).unwrap();
        let reps = s_integral_reps(&spec, 1e-11).unwrap();
        assert!(reps.len() >= 5);
        for (name, v) in &reps {
            assert!(
                (direct.value - v.value).abs() < 1e-9 + v.bound,
                "{name}: {} vs {}",
                v.value,
                direct.value
            );
        }
    }

    #[test]
    fn integral_reps_higher_orders() {
        // j = 2 Lerch kernel
        let spec = SumSpec { alpha: 2.0, beta: 2.0, j: 2, r: 1, p: 1, q: 0 };
        let direct = s_family(&spec, 1e-14).unwrap();
        let reps = s_integral_reps(&spec, 1e-11).unwrap();
        let lerch = reps.iter().find(|(n, _)| *n == "lerch_kernel").unwrap();
        assert!((direct.value - lerch.1.value).abs() < 1e-9);
        // r = 2 log-weighted Lerch kernel and polylog kernel
        let spec = SumSpec { alpha: 2.0, beta: 2.0, j: 1, r: 2, p: 1, q: 0 };
        let direct = s_family(&spec, 1e-14).unwrap();
        let reps = s_integral_reps(&spec, 1e-11).unwrap();
        for (name, v) in &reps {
            assert!(
                (direct.value - v.value).abs() < 1e-8,
                "{name}: {} vs {}",
                v.value,
                direct.value
            );
        }
    }

    #[test]
    fn mixed_stride_gauss_kernel() {
        let spec = SumSpec { alpha: 2.0, beta: 2.0, j: 1, r: 1, p: 2, q: 1 };
        let direct = s_family(&spec, 1e-14).unwrap();
        let reps = s_integral_reps(&spec, 1e-11).unwrap();
        let g = reps.iter().find(|(n, _)| *n == "gauss_kernel").unwrap();
        assert!((direct.value - g.1.value).abs() < 1e-9, "{} vs {}", g.1.value, direct.value);
    }

    #[test]
    fn st_closed_matches_series() {
        let x = 0.125f64;
        let (s, t) = st_closed(x).unwrap();
        // series: i sqrt(x) sum_n (-x)^n H_{2n or 2n+1} / (n + 1/2)
        let i = Complex64::new(0.0, 1.0);
        let mut s_dir = Complex64::new(0.0, 0.0);
        let mut t_dir = Complex64::new(0.0, 0.0);
        for n in 0..200u64 {
            let pw = i * x.sqrt() * (-x).powi(n as i32);
            let d = n as f64 + 0.5;
            s_dir += pw * harm(2 * n, 1) / d;
            t_dir += pw * harm(2 * n + 1, 1) / d;
        }
        assert!((s - s_dir).norm() < 1e-13, "{s} vs {s_dir}");
        assert!((t - t_dir).norm() < 1e-13, "{t} vs {t_dir}");
        // the angle behind t(1/8) is the Proposition-1 omega
        assert!((x.sqrt().atan() - constants().omega).abs() < 1e-15);
    }

    #[test]
    fn ramanujan_closed_form_vs_series() {
        for &x in &[0.1, 0.3, 0.6] {
            let closed = ramanujan_h(x).unwrap();
            let series = ramanujan_h_series(x, 4000);
            assert!((closed - series).abs() < 1e-12, "x={x}: {closed} vs {series}");
        }
        assert!(ramanujan_h(0.0).is_err());
        assert!(ramanujan_h(1.0).is_err());
    }

    #[test]
    fn harris_vbar_expansion() {
        let (v, coeffs) = harris_vbar(0.5, 60).unwrap();
        assert_eq!(coeffs.len(), 60);
        let direct = harris_vbar_direct(0.5);
        assert!((v - direct).abs() < 1e-10, "{v} vs {direct}");
        // oddness and the zero at z = 0
        let (vm, _) = harris_vbar(-0.4, 40).unwrap();
        let (vp, _) = harris_vbar(0.4, 40).unwrap();
        assert!((vm + vp).abs() < 1e-14);
        assert_eq!(harris_vbar(0.0, 10).unwrap().0, 0.0);
        // the z^1 coefficient of vbar vanishes: series starts at z^3
        let tiny = 1e-6;
        let (vt, _) = harris_vbar(tiny, 40).unwrap();
        assert!(vt.abs() < 1e-17, "{vt}");
    }

    #[test]
    fn bernoulli_sums_match_quadrature_and_closed_form() {
        for &b in &[0.5, 1.0, PI / 2.0, 2.8] {
            let (s, t) = bernoulli_trig_sums(b).unwrap();
            let qs = quad::integrate_singular(&|a: f64| a / a.sin(), 0.0, b, 1e-12).unwrap();
            assert!((s.value - qs.value).abs() < 1e-10, "sin b={b}");
            // Clausen closed form of the tan integral
            let closed = b * (2.0 * b.sin()).ln() + 0.5 * cl2_f(2.0 * b);
            assert!((t.value - closed).abs() < 1e-12, "tan b={b}: {} vs {closed}", t.value);
        }
        // the special value at pi/2
        let (_, t) = bernoulli_trig_sums(PI / 2.0).unwrap();
        assert!((t.value - PI / 2.0 * LN_2).abs() < 1e-13);
        assert!(bernoulli_trig_sums(3.15).is_err());
    }

    #[test]
    fn parameter_grid_direct_vs_lerch_kernel() {
        // every (alpha, beta) in {2,3}^2 crossed with the three lowest
        // (j, r) orders must agree between direct summation and the
        // log-weighted Lerch kernel
        for &alpha in &[2.0, 3.0] {
            for &beta in &[2.0, 3.0] {
                for &(j, r) in &[(1u32, 1u32), (1, 2), (2, 1)] {
                    let spec = SumSpec { alpha, beta, j, r, p: 1, q: 0 };
                    let direct = s_family(&spec, 1e-14).unwrap();
                    let reps = s_integral_reps(&spec, 1e-11).unwrap();
                    let lerch = reps.iter().find(|(n, _)| *n == "lerch_kernel").unwrap();
                    assert!(
                        (direct.value - lerch.1.value).abs() < 1e-8 + lerch.1.bound,
                        "alpha={alpha} beta={beta} j={j} r={r}: {} vs {}",
                        direct.value,
                        lerch.1.value
                    );
                }
            }
        }
    }

    #[test]
    fn generating_function_identities() {
        for &z in &[0.5f64, -0.5, 0.9, -0.9] {
            let mut g1 = CompSum::new(); // sum H_n z^n = -ln(1-z)/(1-z)
            let mut g2 = CompSum::new(); // sum H_n z^{n+1}/(n+1) = ln^2(1-z)/2
            let mut g3 = CompSum::new(); // sum H_n^(2) z^n = Li_2(z)/(1-z)
            let mut h = 0.0f64;
            let mut h2 = 0.0f64;
            let mut zp = 1.0f64;
            for n in 1..=700u32 {
                let nf = n as f64;
                h += 1.0 / nf;
                h2 += 1.0 / (nf * nf);
                zp *= z;
                g1.add(h * zp);
                g2.add(h * zp * z / (nf + 1.0));
                g3.add(h2 * zp);
            }
            let lm = (1.0 - z).ln();
            assert!((g1.value() * (1.0 - z) + lm).abs() < 1e-10, "z={z}");
            assert!((g2.value() - 0.5 * lm * lm).abs() < 1e-10, "z={z}");
            assert!((g3.value() - li2_real(z) / (1.0 - z)).abs() < 1e-10, "z={z}");
        }
    }

    #[test]
    fn nielsen_integral_route() {
        // f(x) = sum_j a_j x^j with a_j = (j+1)^2/(j+3/2); closed form for
        // x = -u < 0 is (3u+1)/(2u(u+1)^2) - atan(sqrt u)/(2 u^{3/2}), with
        // the defining series taking over near 0 where that form cancels
        let f = |x: f64| {
            debug_assert!(x <= 0.0);
            if x > -0.01 {
                let mut acc = 0.0;
                let mut xp = 1.0;
                for j in 0..25 {
                    let jf = j as f64;
                    acc += (jf + 1.0) * (jf + 1.0) / (jf + 1.5) * xp;
                    xp *= x;
                }
                acc
            } else {
                let u = -x;
                let su = u.sqrt();
                (3.0 * u + 1.0) / (2.0 * u * (u + 1.0).powi(2)) - su.atan() / (2.0 * u * su)
            }
        };
        // the two branches agree where they meet
        let mut series = 0.0;
        let mut xp = 1.0;
        for j in 0..60 {
            let jf = j as f64;
            series += (jf + 1.0) * (jf + 1.0) / (jf + 1.5) * xp;
            xp *= -0.125;
        }
        assert!((f(-0.125) - series).abs() < 1e-13);
        // antiderivative: int_0^x f = 1/(1-x) - atanh(sqrt x)/sqrt x
        let x = -0.125f64;
        let su = (-x).sqrt();
        let anti = 1.0 / (1.0 - x) - su.atan() / su;
        let q = quad::integrate_fn(|u: f64| f(-u), 0.0, -x, 1e-13).unwrap();
        assert!((-q.value - anti).abs() < 1e-12, "{} vs {anti}", -q.value);
        // Nielsen: sum_n (a_{n-1}/n^2) H_n x^n
        //            = (pi^2/6) int_0^x f - x int_0^1 f(tx) Li_2(t) dt,
        // and with a_{n-1} = n^2/(n+1/2) the left side is the base sum
        let direct = s_family(&SumSpec::new(2.0, 2.0), 1e-14).unwrap();
        let wi = quad::integrate_fn(|t: f64| f(t * x) * li2_real(t), 0.0, 1.0, 1e-13).unwrap();
        let nielsen = PI * PI / 6.0 * anti - x * wi.value;
        assert!(
            (nielsen - direct.value).abs() < 1e-11,
            "{nielsen} vs {}",
            direct.value
        );
    }

    #[test]
    fn ramanujan_h_links_to_the_odd_sum() {
        // H(x) - 2 atanh x - ln(1-x^2)/x = sum_k H_k x^{2k+1}/(2k+1),
        // the right side being (x/2) times the even-index sum
        for &x in &[0.3f64, 0.7] {
            let lhs = ramanujan_h(x).unwrap() - 2.0 * x.atanh() - (1.0 - x * x).ln() / x;
            let mut acc = CompSum::new();
            let mut h = 0.0f64;
            for k in 1..=400u32 {
                h += 1.0 / k as f64;
                acc.add(h * x.powi(2 * k as i32 + 1) / (2.0 * k as f64 + 1.0));
            }
            assert!((lhs - acc.value()).abs() < 1e-12, "x={x}: {lhs}");
            let route = real_part_checked(ramanujan_route(Complex64::new(x, 0.0)));
            assert!((lhs - x / 2.0 * route).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn clausen_from_hypergeometric_term_sum() {
        // beta^{3/2} Cl_2(theta) = sum_k 2F1(1,k;k+1;-1/beta^3)/(k(2k-1)),
        // theta = arccos((1-beta^3)/(1+beta^3)), here at beta = 2
        let beta = 2.0f64;
        let b3 = beta.powi(3);
        let theta = ((1.0 - b3) / (1.0 + b3)).acos();
        let expect = beta.powf(1.5) * cl2_f(theta);
        let term = |k: f64| {
            gauss_2f1(1.0, k, k + 1.0, -1.0 / b3, 1e-13).unwrap().value / (k * (2.0 * k - 1.0))
        };
        let mut head = CompSum::new();
        for k in 1..=300u32 {
            head.add(term(k as f64));
        }
        let s = head.value() + quad::sum_tail_euler_maclaurin(&term, 301.0, 1e-12).unwrap();
        assert!((s - expect).abs() < 1e-10, "{s} vs {expect}");
        // the same sum as a single integral, 2 b^3 int_0^1 atanh v/(v^2+b^3) dv
        // (swapping the term-wise Euler integrals k int_0^1 (1-t)^{k-1}/(1-xt) dt
        // with the summation), which also pins down the Clausen integral
        // int_0^1 atanh v/(v^2+b^3) dv = Cl_2(theta)/(2 b^{3/2})
        let q = quad::integrate(
            &QuadProblem::new(&|v: f64| v.atanh() / (v * v + b3), 0.0, 1.0, 1e-12)
                .singular(false, true),
        )
        .unwrap();
        assert!((2.0 * b3 * q.value - expect).abs() < 1e-10, "{}", 2.0 * b3 * q.value);
    }
}
