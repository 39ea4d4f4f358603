//! The identity registry: every record pairs two independent
//! evaluation routes of the same quantity, names the claim it checks
//! via `paper_ref`, and carries a seeded sampler over its admissible
//! domain.

use super::{Identity, Policy, Sampler};
use crate::ctet::{
    appendix_d_full, appendix_d_plus_minus, corollary5_log_sin_squared, ctet_clausen,
    ctet_rajantie, ctet_series, ctet_series_dd, ctet_srp, ctet_srp_consolidated,
    eq120_shifted_sine, eq90_log_cos_diff, j_integral, lobachevsky_pi_over_6, prop7a_log_sin_shift,
    prop7b_log_sin_cosh, prop7c, prop7d_sin, prop7d_tan, prop7d_tan_candidates, prop8_integral,
    prop9_pfq_closed_form, prop9_psi, rajantie_parts, Prop7cKind,
};
use crate::ctet::log_trig::prop8_angles;
use crate::error::{MathError, Result};
use crate::harmonic::sums::harris_vbar_direct;
use crate::harmonic::{
    bernoulli_trig_sums, cl2_legendre_series, eq59_partial_sum, harris_vbar, ik_exact,
    ik_quadrature, ik_rhs_exact, li2_legendre_series, prop4_series, prop5_cl2_series,
    prop6_cl2_integral, ramanujan_h, ramanujan_h_series, s2beta_closed, s_family, s_integral_reps,
    st_closed, SumSpec,
};
use crate::numkit::{constants, CompSum};
use crate::quad::{integrate_fn, integrate_semi_infinite, integrate_singular};
use crate::specfun::{
    chi2, cl2_sine_series, cl2_f, elliptic_k_agm, gauss_2f1, i_xu, lerch_phi, li2, li2_im_polar,
    li2_real, lobachevsky, lsn, pfq_series, ti2,
};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rec(
    id: &'static str,
    description: &'static str,
    paper_ref: &'static str,
    tolerance: f64,
    sampler: Sampler,
    lhs: impl Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
    rhs: impl Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
) -> Identity {
    Identity {
        id,
        description,
        paper_ref,
        tolerance,
        policy: Policy::Assert,
        sampler,
        lhs: Box::new(lhs),
        rhs: Box::new(rhs),
        alternates: Vec::new(),
    }
}

/// Value of one named kernel representation of the base S-family sum.
fn kernel_value(spec: &SumSpec, name: &str) -> Result<f64> {
    let reps = s_integral_reps(spec, 1e-11)?;
    reps.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, v)| v.value)
        .ok_or_else(|| MathError::Domain(format!("kernel {name} not applicable to this spec")))
}

/// Partial sum of the Clausen-generating series sum_j z^j/(2j+1)^2.
fn odd_square_series(z: f64, n_terms: usize) -> f64 {
    let mut acc = CompSum::new();
    let mut zp = 1.0f64;
    for j in 0..n_terms {
        acc.add(zp / ((2 * j + 1) as f64).powi(2));
        zp *= z;
    }
    acc.value()
}

pub fn catalog() -> Vec<Identity> {
    let mut v: Vec<Identity> = Vec::new();

    // ---- I-01: four independent definitions of Cl2 agree ----
    v.push(rec(
        "I-01a",
        "Clausen function: truncated sine series matches the closed evaluation",
        "Eq. (1)",
        1e-5,
        Sampler::new(&["theta"], &[&[PI / 3.0], &[FRAC_PI_2], &[1.0]], 2, &[(0.05, 6.1)]),
        |a| Ok(cl2_sine_series(a[0], 400_000).value),
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-01b",
        "Clausen function: defining log-sine integral matches the closed evaluation",
        "Eq. (1)",
        1e-9,
        Sampler::new(&["theta"], &[&[PI / 3.0], &[FRAC_PI_2], &[2.0]], 2, &[(0.05, 6.1)]),
        |a| {
            let th = a[0];
            let r = integrate_singular(move |t| -(2.0 * (0.5 * t).sin()).abs().ln(), 0.0, th, 1e-11)?;
            Ok(r.value)
        },
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-01c",
        "Clausen function: imaginary part of the unit-circle dilogarithm",
        "Eq. (1)",
        1e-12,
        Sampler::new(&["theta"], &[&[PI / 3.0], &[FRAC_PI_2], &[2.5]], 2, &[(0.05, 6.1)]),
        |a| Ok(li2(c(a[0].cos(), a[0].sin())).im),
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-01d",
        "Clausen function: second log-sine integral Ls_2 route",
        "Eq. (1)",
        1e-9,
        Sampler::new(&["theta"], &[&[PI / 3.0], &[1.0], &[3.0]], 2, &[(0.05, 6.1)]),
        |a| Ok(lsn(2, a[0], 1e-11)?.value),
        |a| Ok(cl2_f(a[0])),
    ));

    // ---- I-02: the central constant, series route vs Clausen route ----
    v.push(rec(
        "I-02a",
        "C(1,1): compensated/double-double series matches the Clausen closed form",
        "Eqs. (2)-(4)",
        1e-12,
        Sampler::new(
            &["tol"],
            &[&[1e-13], &[2e-13], &[9e-14], &[5e-14], &[1e-14]],
            0,
            &[],
        ),
        |a| Ok(ctet_series(a[0])?.value),
        |_| Ok(ctet_clausen().value),
    ));
    v.push(rec(
        "I-02b",
        "C(1,1): double-double partial sums converge to the Clausen closed form",
        "Eqs. (2)-(3)",
        1e-13,
        Sampler::new(&["n_terms"], &[&[40.0], &[50.0], &[60.0], &[70.0], &[80.0]], 0, &[]),
        |a| Ok(ctet_series_dd(a[0].round() as u32).to_f64()),
        |_| Ok(ctet_clausen().value),
    ));

    // ---- I-03: harmonic generating function and the kernel methods ----
    v.push(rec(
        "I-03a",
        "Generating function: sum_n H_n z^n equals -ln(1-z)/(1-z)",
        "Eqs. (5)-(6)",
        1e-12,
        Sampler::new(&["z"], &[&[0.5], &[-0.5], &[0.25]], 2, &[(-0.75, 0.75)]),
        |a| {
            let z = a[0];
            let mut acc = CompSum::new();
            let mut h = 0.0f64;
            let mut zp = 1.0f64;
            for n in 1..=600u32 {
                h += 1.0 / n as f64;
                zp *= z;
                acc.add(h * zp);
            }
            Ok(acc.value())
        },
        |a| Ok(-(1.0 - a[0]).ln() / (1.0 - a[0])),
    ));
    let base_sampler = || {
        Sampler::new(
            &["alpha", "beta"],
            &[&[2.0, 2.0], &[3.0, 2.0], &[2.0, 3.0]],
            2,
            &[(1.5, 3.5), (1.5, 4.0)],
        )
    };
    let s_lhs = |a: &[f64]| -> Result<f64> { Ok(s_family(&SumSpec::new(a[0], a[1]), 1e-13)?.value) };
    v.push(rec(
        "I-03b",
        "S(alpha,beta): direct sum matches the Gauss-kernel integral",
        "Eqs. (7)-(12)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "gauss_kernel"),
    ));
    v.push(rec(
        "I-03c",
        "S(alpha,beta): direct sum matches the exponential-kernel integral",
        "Eqs. (13)-(16)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "exp_kernel"),
    ));
    v.push(rec(
        "I-03d",
        "S(alpha,beta): direct sum matches the integration-by-parts kernel",
        "Eqs. (17)-(19)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "byparts_kernel"),
    ));
    v.push(rec(
        "I-03e",
        "S(alpha,beta): direct sum matches the polylogarithm kernel",
        "Eqs. (20)-(21)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "polylog_kernel"),
    ));
    v.push(rec(
        "I-03f",
        "S(alpha,beta): direct sum matches the free-parameter representation",
        "Eqs. (22)-(23)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "free_param_kernel"),
    ));
    v.push(rec(
        "I-03g",
        "S(alpha,beta): direct sum matches the Lerch-kernel integral",
        "Eqs. (24)-(26)",
        1e-8,
        base_sampler(),
        s_lhs,
        |a| kernel_value(&SumSpec::new(a[0], a[1]), "lerch_kernel"),
    ));

    // ---- I-04: dilogarithm building blocks ----
    v.push(rec(
        "I-04a",
        "Im Li2 at a polar point matches the Clausen decomposition",
        "Eqs. (27)-(30)",
        1e-12,
        Sampler::new(
            &["r", "theta"],
            &[&[0.5, 1.0], &[0.9, 2.0], &[0.3, 0.4]],
            2,
            &[(0.1, 0.98), (0.1, 3.0)],
        ),
        |a| Ok(li2(c(a[0] * a[1].cos(), a[0] * a[1].sin())).im),
        |a| Ok(li2_im_polar(a[0], a[1])),
    ));
    v.push(rec(
        "I-04b",
        "Inverse-tangent integral Ti2 matches its defining integral",
        "Eqs. (33)-(34)",
        1e-9,
        Sampler::new(&["x"], &[&[1.0], &[0.5], &[0.25]], 2, &[(0.05, 1.0)]),
        |a| Ok(ti2(a[0])),
        |a| {
            let x = a[0];
            Ok(integrate_fn(move |t| if t == 0.0 { 1.0 } else { t.atan() / t }, 0.0, x, 1e-12)?.value)
        },
    ));
    v.push(rec(
        "I-04c",
        "Legendre chi at an imaginary point reproduces Ti2",
        "Eqs. (31)-(32)",
        1e-13,
        Sampler::new(&["x"], &[&[1.0], &[0.5], &[0.125]], 2, &[(0.05, 0.99)]),
        |a| Ok(chi2(c(0.0, a[0])).im),
        |a| Ok(ti2(a[0])),
    ));

    // ---- I-05: the arctangent subsum and the Clausen duplication ----
    v.push(Identity {
        id: "I-05a",
        description: "Arctangent subsum sum_n (-1/8)^n/(n+1/2): printed constant vs direct sum",
        paper_ref: "Eq. (35)",
        tolerance: 1e-12,
        policy: Policy::Discrepancy,
        sampler: Sampler::new(
            &["n_terms"],
            &[&[30.0], &[35.0], &[40.0], &[45.0], &[50.0]],
            0,
            &[],
        ),
        lhs: Box::new(|a| {
            let n = a[0].round() as u32;
            let mut acc = CompSum::new();
            let mut pw = 1.0f64;
            for k in 0..n {
                acc.add(pw / (k as f64 + 0.5));
                pw *= -0.125;
            }
            Ok(acc.value())
        }),
        rhs: Box::new(|_| Ok(4.0 * 2.0f64.sqrt() * constants().omega)),
        alternates: vec![(
            "printed constant 2(2 sqrt2 omega - 1)",
            Box::new(|_| Ok(2.0 * (2.0 * 2.0f64.sqrt() * constants().omega - 1.0))),
        )],
    });
    v.push(rec(
        "I-05b",
        "C(1,1) rewritten through the duplicated Clausen pair",
        "Eq. (36)",
        1e-12,
        Sampler::constant(),
        |_| {
            let om = constants().omega;
            Ok(4.0 * 2.0f64.sqrt() * (cl2_f(2.0 * om) + 2.0 * cl2_f(2.0 * om + PI)))
        },
        |_| Ok(ctet_clausen().value),
    ));
    v.push(rec(
        "I-05c",
        "Clausen duplication: Cl2(2t) = 2Cl2(t) - 2Cl2(pi - t)",
        "Eq. (37)",
        1e-13,
        Sampler::new(&["theta"], &[&[1.0], &[2.0], &[0.3]], 2, &[(0.05, 3.1)]),
        |a| Ok(cl2_f(2.0 * a[0])),
        |a| Ok(2.0 * cl2_f(a[0]) - 2.0 * cl2_f(PI - a[0])),
    ));

    // ---- I-06: S-family variants with higher j and r ----
    v.push(rec(
        "I-06a",
        "S-family with squared denominator (j = 2) matches the Lerch kernel",
        "Eqs. (38)-(41)",
        1e-8,
        base_sampler(),
        |a| {
            let spec = SumSpec { alpha: a[0], beta: a[1], j: 2, r: 1, p: 1, q: 0 };
            Ok(s_family(&spec, 1e-13)?.value)
        },
        |a| kernel_value(&SumSpec { alpha: a[0], beta: a[1], j: 2, r: 1, p: 1, q: 0 }, "lerch_kernel"),
    ));
    v.push(rec(
        "I-06b",
        "S-family with second-order harmonic numbers matches the Lerch kernel",
        "Eqs. (42)-(43)",
        1e-8,
        base_sampler(),
        |a| {
            let spec = SumSpec { alpha: a[0], beta: a[1], j: 1, r: 2, p: 1, q: 0 };
            Ok(s_family(&spec, 1e-13)?.value)
        },
        |a| kernel_value(&SumSpec { alpha: a[0], beta: a[1], j: 1, r: 2, p: 1, q: 0 }, "lerch_kernel"),
    ));

    // ---- I-07: the half-odd-power companion sums s(x), t(x) ----
    v.push(rec(
        "I-07a",
        "s(x) closed form matches its defining series over H_{2n}",
        "Eq. (44)",
        1e-12,
        Sampler::new(&["x"], &[&[0.125], &[0.5], &[0.9]], 2, &[(0.05, 0.9)]),
        |a| {
            let x = a[0];
            let mut im = CompSum::new();
            let mut h = 0.0f64; // H_{2n}
            let mut pw = x.sqrt();
            for n in 0..1500u64 {
                im.add(pw * h / (n as f64 + 0.5));
                h += 1.0 / (2 * n + 1) as f64 + 1.0 / (2 * n + 2) as f64;
                pw *= -x;
            }
            Ok(im.value())
        },
        |a| Ok(st_closed(a[0])?.0.im),
    ));
    v.push(rec(
        "I-07b",
        "t(x) closed form matches its defining series over H_{2n+1}",
        "Eq. (45)",
        1e-12,
        Sampler::new(&["x"], &[&[0.125], &[0.5], &[0.9]], 2, &[(0.05, 0.9)]),
        |a| {
            let x = a[0];
            let mut im = CompSum::new();
            let mut h = 1.0f64; // H_{2n+1}
            let mut pw = x.sqrt();
            for n in 0..1500u64 {
                im.add(pw * h / (n as f64 + 0.5));
                h += 1.0 / (2 * n + 2) as f64 + 1.0 / (2 * n + 3) as f64;
                pw *= -x;
            }
            Ok(im.value())
        },
        |a| Ok(st_closed(a[0])?.1.im),
    ));

    // ---- I-08: Legendre-series machinery ----
    v.push(rec(
        "I-08a",
        "Exact arctangent-kernel Legendre moments match quadrature",
        "Eqs. (46)-(50)",
        1e-10,
        Sampler::new(
            &["j", "k"],
            &[&[0.0, 3.0], &[1.0, 4.0], &[0.0, 10.0]],
            2,
            &[(0.0, 1.0), (0.0, 20.0)],
        ),
        |a| Ok(ik_exact(a[0].round() as u8, a[1].round() as u32)?.to_f64()),
        |a| Ok(ik_quadrature(a[0].round() as u8, a[1].round() as u32, 1e-12)?.value),
    ));
    v.push(rec(
        "I-08b",
        "Legendre series of Cl2 with Richardson acceleration approaches the closed form",
        "Eqs. (51)-(53)",
        5e-3,
        Sampler::new(&["theta"], &[&[1.0], &[2.0], &[0.6], &[2.5]], 1, &[(0.3, 2.9)]),
        |a| {
            let s200 = cl2_legendre_series(a[0], 200)?.value;
            let s100 = cl2_legendre_series(a[0], 100)?.value;
            Ok(2.0 * s200 - s100)
        },
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-08c",
        "Squared-Pochhammer series matches the elliptic-integral kernel",
        "Eqs. (54)-(56)",
        1e-9,
        Sampler::new(&["x"], &[&[0.5], &[0.8], &[0.25]], 2, &[(0.05, 0.9)]),
        |a| {
            let x = a[0];
            let mut acc = CompSum::new();
            let mut coef = 1.0f64; // [(1/2)_k / k!]^2
            let mut xp = 1.0f64;
            for k in 0..2000u32 {
                acc.add(coef * xp / (2.0 * k as f64 + 1.0));
                let kf = k as f64;
                coef *= ((kf + 0.5) / (kf + 1.0)).powi(2);
                xp *= x;
            }
            Ok(acc.value())
        },
        |a| {
            let x = a[0];
            let r = integrate_singular(
                move |t| elliptic_k_agm(t.sqrt()) / t.sqrt(),
                0.0,
                x,
                1e-11,
            )?;
            Ok(r.value / (PI * x.sqrt()))
        },
    ));
    v.push(rec(
        "I-08d",
        "Legendre series of Li2 approaches the real dilogarithm",
        "Eqs. (57)-(58)",
        1e-2,
        Sampler::new(&["z"], &[&[0.5], &[-0.5], &[0.8], &[-0.9]], 1, &[(0.1, 0.9)]),
        |a| Ok(li2_legendre_series(a[0], 150)?.value),
        |a| Ok(li2_real(a[0])),
    ));
    v.push(rec(
        "I-08e",
        "Central-binomial Legendre sum converges to ln2 - 1",
        "Eqs. (59)-(62)",
        1e-3,
        Sampler::new(
            &["n_terms"],
            &[&[400.0], &[800.0], &[1500.0], &[3000.0], &[6000.0]],
            0,
            &[],
        ),
        |a| Ok(eq59_partial_sum(a[0].round() as u32)),
        |_| Ok(LN_2 - 1.0),
    ));

    // ---- I-09: arctangent-kernel series for Cl2 ----
    v.push(rec(
        "I-09a",
        "Arctangent-kernel Legendre series reproduces Cl2(theta(a))",
        "Eqs. (63)-(64)",
        1e-8,
        Sampler::new(&["a"], &[&[1.0], &[0.5], &[2.0]], 2, &[(0.2, 3.0)]),
        |a| Ok(prop4_series(a[0], 120)?.value),
        |a| {
            let x = a[0];
            Ok(cl2_f(((1.0 - x * x) / (1.0 + x * x)).acos()))
        },
    ));
    v.push(rec(
        "I-09b",
        "Exact plain Legendre moments match quadrature",
        "Eqs. (65)-(70)",
        1e-10,
        Sampler::new(
            &["j", "k"],
            &[&[0.0, 2.0], &[1.0, 5.0], &[0.0, 12.0]],
            2,
            &[(0.0, 1.0), (0.0, 20.0)],
        ),
        |a| {
            let q = ik_rhs_exact(a[0].round() as u8, a[1].round() as u32)?;
            Ok(q.to_f64().unwrap_or(f64::NAN))
        },
        |a| {
            let (j, k) = (a[0].round() as u32, a[1].round() as u32);
            let f = move |v: f64| v.powi((k + j) as i32) * crate::specfun::legendre_p(k, v);
            Ok(integrate_fn(f, 0.0, 1.0, 1e-12)?.value)
        },
    ));

    // ---- I-10: trapezoidal-kernel series and integral for Cl2 ----
    v.push(rec(
        "I-10a",
        "Shifted-cosine Legendre series reproduces Cl2(u)",
        "Eqs. (71)-(79)",
        1e-8,
        Sampler::new(&["u"], &[&[1.0], &[2.0], &[4.0]], 2, &[(0.2, 6.0)]),
        |a| Ok(prop5_cl2_series(a[0], 60)?.value),
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-10b",
        "Oscillatory integral representation reproduces Cl2(u)",
        "Eqs. (80)-(84)",
        1e-6,
        Sampler::new(&["u"], &[&[1.0], &[2.5], &[4.5]], 2, &[(0.3, 6.0)]),
        |a| Ok(prop6_cl2_integral(a[0], 1e-9)?.value),
        |a| Ok(cl2_f(a[0])),
    ));
    v.push(rec(
        "I-10c",
        "Generalized log-sine power integral at x = 1 is elementary",
        "Eqs. (85)-(88)",
        1e-9,
        Sampler::new(&["u"], &[&[1.0], &[2.0], &[3.0]], 2, &[(0.2, 3.1)]),
        |a| Ok(i_xu(1.0, a[0], 1e-11)?.value),
        |a| Ok(4.0 * (1.0 - (0.5 * a[0]).cos())),
    ));

    // ---- I-11: log-trigonometric integrals ----
    v.push(rec(
        "I-11a",
        "Shifted log-sine integral matches its Clausen closed form",
        "Eqs. (89), (103)-(105)",
        1e-9,
        Sampler::new(
            &["kappa", "u_frac", "alpha"],
            &[&[1.0, 0.6, 0.9], &[2.0, 0.4, 0.8], &[0.7, 0.9, 1.3]],
            2,
            &[(0.5, 2.0), (0.1, 0.95), (0.5, 1.4)],
        ),
        |a| {
            let (k, al) = (a[0], a[2]);
            let u = a[1] * al;
            let r = integrate_fn(move |x| ((k * x).sin() + al.sin()).ln(), 0.0, u, 1e-11)?;
            Ok(k * r.value)
        },
        |a| prop7a_log_sin_shift(a[0], a[1] * a[2], a[2]),
    ));
    v.push(rec(
        "I-11b",
        "Log of a cosine difference integrates to a Clausen pair",
        "Eq. (90)",
        1e-8,
        Sampler::new(
            &["k", "x_frac", "a"],
            &[&[1.0, 0.5, 1.2], &[1.5, 0.8, 1.4], &[0.6, 0.3, 1.0]],
            2,
            &[(0.5, 2.0), (0.1, 0.9), (1.0, 1.5)],
        ),
        |a| {
            let (k, aa) = (a[0], a[2]);
            let x = a[1] * aa / k;
            let r = integrate_fn(move |t| (aa.cos() - (k * t).cos()).abs().ln(), 0.0, x, 1e-11)?;
            Ok(r.value)
        },
        |a| Ok(eq90_log_cos_diff(a[0], a[1] * a[2] / a[0], a[2])),
    ));
    v.push(rec(
        "I-11c",
        "Log of sine minus hyperbolic cosine integrates to a dilogarithm group",
        "Eqs. (91)-(92), (106)-(111)",
        1e-9,
        Sampler::new(
            &["k", "x", "a"],
            &[&[1.0, 0.8, 0.9], &[2.0, 0.5, 0.4], &[0.7, 1.5, 1.2]],
            2,
            &[(0.5, 2.5), (0.2, 2.0), (0.3, 1.5)],
        ),
        |a| {
            let (k, x, aa) = (a[0], a[1], a[2]);
            let r = integrate_fn(move |t| (aa.cosh() - (k * t).sin()).ln(), 0.0, x, 1e-11)?;
            Ok(r.value)
        },
        |a| prop7b_log_sin_cosh(a[0], a[1], a[2]),
    ));
    v.push(rec(
        "I-11d",
        "First trigonometric moments x/sin and x/tan match their closed forms",
        "Eqs. (93)-(94), (112)-(115)",
        1e-9,
        Sampler::new(
            &["kind", "b"],
            &[&[0.0, 0.4], &[1.0, 0.4], &[0.0, FRAC_PI_2], &[1.0, FRAC_PI_2]],
            1,
            &[(0.0, 1.0), (0.2, 1.4)],
        ),
        |a| {
            let b = a[1];
            let f: Box<dyn Fn(f64) -> f64> = if a[0].round() as u32 == 0 {
                Box::new(|x: f64| x / x.sin())
            } else {
                Box::new(|x: f64| x / x.tan())
            };
            Ok(integrate_fn(|x| f(x), 0.0, b, 1e-11)?.value)
        },
        |a| {
            let kind = if a[0].round() as u32 == 0 { Prop7cKind::SinRatio } else { Prop7cKind::TanRatio };
            prop7c(kind, a[1])
        },
    ));
    v.push(rec(
        "I-11e",
        "Squared trigonometric moments x^2/sin^2 and x^2/tan^2 match their closed forms",
        "Eqs. (95)-(96), (116)",
        1e-9,
        Sampler::new(
            &["kind", "b"],
            &[&[0.0, FRAC_PI_4], &[1.0, FRAC_PI_4], &[0.0, 1.2], &[1.0, 0.6]],
            1,
            &[(0.0, 1.0), (0.2, 1.4)],
        ),
        |a| {
            let b = a[1];
            let f: Box<dyn Fn(f64) -> f64> = if a[0].round() as u32 == 0 {
                Box::new(|x: f64| (x / x.sin()).powi(2))
            } else {
                Box::new(|x: f64| (x / x.tan()).powi(2))
            };
            Ok(integrate_fn(|x| f(x), 0.0, b, 1e-11)?.value)
        },
        |a| {
            let kind = if a[0].round() as u32 == 0 { Prop7cKind::SinSquared } else { Prop7cKind::TanSquared };
            prop7c(kind, a[1])
        },
    ));
    v.push(rec(
        "I-11f",
        "Moment with shifted sine denominator matches its dilogarithm closed form",
        "Eqs. (97)-(98), (117)",
        1e-9,
        Sampler::new(
            &["a", "b"],
            &[&[0.5, 0.7], &[0.3, 1.5], &[0.8, 2.0]],
            2,
            &[(0.1, 0.9), (0.2, 2.8)],
        ),
        |a| {
            let (aa, b) = (a[0], a[1]);
            Ok(integrate_fn(move |x| x / (x.sin() + aa), 0.0, b, 1e-11)?.value)
        },
        |a| prop7d_sin(a[0], a[1]),
    ));
    v.push(Identity {
        id: "I-11g",
        description: "Moment with shifted tangent denominator: printed reduction has an ambiguous operator",
        paper_ref: "Eqs. (99)-(100), (118)-(119)",
        tolerance: 1e-9,
        policy: Policy::Discrepancy,
        sampler: Sampler::new(
            &["a", "b"],
            &[&[0.5, 0.7], &[0.3, 1.0], &[0.8, 0.4], &[0.6, 0.9], &[0.2, 1.2]],
            0,
            &[],
        ),
        lhs: Box::new(|a| {
            let (aa, b) = (a[0], a[1]);
            Ok(integrate_fn(move |x| x / (x.tan() + aa), 0.0, b, 1e-11)?.value)
        }),
        rhs: Box::new(|a| prop7d_tan(a[0], a[1])),
        alternates: vec![
            (
                "printed groups joined by '+'",
                Box::new(|a: &[f64]| Ok(prop7d_tan_candidates(a[0], a[1])?.0.re)),
            ),
            (
                "printed juxtaposition read as a product",
                Box::new(|a: &[f64]| Ok(prop7d_tan_candidates(a[0], a[1])?.1.re)),
            ),
        ],
    });
    v.push(rec(
        "I-11h",
        "Log of a squared-sine difference integrates to a Clausen pair",
        "Eqs. (101)-(102)",
        1e-8,
        Sampler::new(
            &["alpha", "u_frac"],
            &[&[1.0, 0.6], &[0.8, 0.3], &[1.3, 0.9]],
            2,
            &[(0.4, 1.4), (0.1, 0.95)],
        ),
        |a| {
            let al = a[0];
            let u = a[1] * al;
            let r = integrate_fn(
                move |x| (x.sin().powi(2) - al.sin().powi(2)).abs().ln(),
                0.0,
                u,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| Ok(corollary5_log_sin_squared(a[0], a[1] * a[0])),
    ));
    v.push(rec(
        "I-11i",
        "Shifted-argument sine moment reduces to a translated plain moment",
        "Eq. (120)",
        1e-8,
        Sampler::new(
            &["a", "b"],
            &[&[0.4, 0.9], &[0.2, 1.5], &[0.8, 0.5]],
            2,
            &[(0.1, 1.2), (0.1, 1.5)],
        ),
        |a| {
            let (aa, b) = (a[0], a[1]);
            Ok(integrate_fn(move |x| x / (x + aa).sin(), 0.0, b, 1e-11)?.value)
        },
        |a| eq120_shifted_sine(a[0], a[1], 1e-11),
    ));
    v.push(rec(
        "I-11j",
        "Bernoulli-series route to the first trigonometric moments",
        "Eqs. (121)-(129)",
        1e-9,
        Sampler::new(
            &["kind", "b"],
            &[&[0.0, FRAC_PI_2], &[1.0, FRAC_PI_2], &[0.0, 0.8], &[1.0, 1.1]],
            1,
            &[(0.0, 1.0), (0.2, 1.4)],
        ),
        |a| {
            let (s, t) = {
                let pair = bernoulli_trig_sums(a[1])?;
                (pair.0.value, pair.1.value)
            };
            Ok(if a[0].round() as u32 == 0 { s } else { t })
        },
        |a| {
            let kind = if a[0].round() as u32 == 0 { Prop7cKind::SinRatio } else { Prop7cKind::TanRatio };
            prop7c(kind, a[1])
        },
    ));

    // ---- I-12: Lobachevskiy's function ----
    v.push(rec(
        "I-12a",
        "Lobachevskiy function: Clausen closed form matches the defining integral",
        "Eqs. (130)-(131)",
        1e-9,
        Sampler::new(&["x"], &[&[PI / 6.0], &[0.5], &[1.2]], 2, &[(0.05, 1.5)]),
        |a| {
            let x = a[0];
            Ok(integrate_fn(move |t| -t.cos().abs().ln(), 0.0, x, 1e-11)?.value)
        },
        |a| lobachevsky(a[0]),
    ));
    v.push(rec(
        "I-12b",
        "Hyperbolic-kernel integral over the half line collapses to Clausen values",
        "Eq. (132)",
        1e-8,
        Sampler::new(&["t"], &[&[0.7], &[1.2], &[2.0]], 2, &[(0.25, 2.85)]),
        |a| {
            let t = a[0];
            // x cosh x / (cosh 2x - cos 2t), scaled by 2 e^{-2x} in both
            // numerator and denominator so huge probe points stay finite
            let c2t = (2.0 * t).cos();
            let r = integrate_semi_infinite(
                move |x| {
                    x * ((-x).exp() + (-3.0 * x).exp())
                        / (1.0 + (-4.0 * x).exp() - 2.0 * c2t * (-2.0 * x).exp())
                },
                0.0,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| Ok((cl2_f(a[0]) - 0.25 * cl2_f(2.0 * a[0])) / a[0].sin()),
    ));
    v.push(rec(
        "I-12c",
        "Lobachevskiy value at pi/6 through the trigamma function",
        "Eqs. (133)-(135)",
        1e-12,
        Sampler::constant(),
        |_| lobachevsky_pi_over_6(),
        |_| lobachevsky(PI / 6.0),
    ));

    // ---- I-13: the tail log-ratio integral ----
    v.push(rec(
        "I-13a",
        "Tail log-ratio integral matches its three-Clausen closed form",
        "Eqs. (136)-(139)",
        1e-8,
        Sampler::new(
            &["a", "b_gap"],
            &[&[1.0, 1.0], &[0.5, 0.3], &[1.5, 2.0]],
            2,
            &[(0.3, 2.0), (0.1, 2.0)],
        ),
        |a| {
            let (aa, b) = (a[0], a[0] + a[1]);
            let r = integrate_semi_infinite(
                move |u| ((u + aa) / (u - aa)).ln() / (1.0 + u * u),
                b,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| prop8_integral(a[0], a[0] + a[1]),
    ));
    v.push(rec(
        "I-13b",
        "The three-Clausen combination equals the log-kernel geometric integral",
        "Eqs. (140)-(143)",
        1e-8,
        Sampler::new(
            &["a", "b_gap"],
            &[&[1.0, 1.0], &[0.5, 0.5], &[1.2, 1.8]],
            2,
            &[(0.3, 2.0), (0.2, 2.0)],
        ),
        |a| {
            let (th, om, ch) = prop8_angles(a[0], a[0] + a[1]);
            Ok(0.5 * (cl2_f(2.0 * th) + cl2_f(2.0 * om) + cl2_f(2.0 * ch)))
        },
        |a| {
            let (aa, b) = (a[0], a[0] + a[1]);
            let (th, _, _) = prop8_angles(aa, b);
            let r = (b + aa) / (b - aa);
            let q = integrate_singular(
                move |y| y.ln() / (1.0 - 2.0 * y * th.cos() + y * y),
                0.0,
                r,
                1e-11,
            )?;
            Ok(-th.sin() * q.value)
        },
    ));
    v.push(rec(
        "I-13c",
        "Arctangent substitution form of the tail log-ratio integral",
        "Eq. (144)",
        1e-8,
        Sampler::new(
            &["a", "b_gap"],
            &[&[1.0, 1.0], &[0.6, 0.4], &[1.5, 1.5]],
            2,
            &[(0.3, 2.0), (0.2, 2.0)],
        ),
        |a| {
            let (aa, b) = (a[0], a[0] + a[1]);
            let r = integrate_fn(
                move |phi| ((phi.tan() + aa) / (phi.tan() - aa)).ln(),
                b.atan(),
                FRAC_PI_2,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| prop8_integral(a[0], a[0] + a[1]),
    ));

    // ---- I-14: the inverse-sine moment and its hypergeometric face ----
    v.push(rec(
        "I-14a",
        "3F2 of half-integral parameters reduces to the inverse-sine moment",
        "Eqs. (145)-(147)",
        1e-9,
        Sampler::new(&["z"], &[&[0.25], &[0.5], &[1.0]], 2, &[(0.05, 0.95)]),
        |a| Ok(pfq_series(&[0.5, 0.5, 0.5], &[1.5, 1.5], a[0], 1e-13)?.value),
        |a| prop9_pfq_closed_form(a[0]),
    ));
    v.push(rec(
        "I-14b",
        "Inverse-sine moment matches its Clausen closed form",
        "Eqs. (148)-(152)",
        1e-9,
        Sampler::new(&["x"], &[&[0.3], &[0.7], &[1.0]], 2, &[(0.05, 0.995)]),
        |a| {
            let x = a[0];
            Ok(integrate_fn(
                move |t| if t == 0.0 { 1.0 } else { t.asin() / t },
                0.0,
                x,
                1e-12,
            )?
            .value)
        },
        |a| prop9_psi(a[0]),
    ));
    v.push(rec(
        "I-14c",
        "Higher hypergeometrics rebuilt from log-sine moment integrals",
        "Eqs. (153)-(155)",
        1e-7,
        Sampler::new(
            &["k", "z"],
            &[&[2.0, 0.25], &[3.0, 0.25], &[2.0, 0.5], &[3.0, 0.5]],
            1,
            &[(2.0, 3.0), (0.1, 0.8)],
        ),
        |a| {
            let k = a[0].round() as usize;
            let z = a[1];
            let upper = vec![0.5; k + 1];
            let lower = vec![1.5; k];
            Ok(pfq_series(&upper, &lower, z, 1e-13)?.value)
        },
        |a| {
            let k = a[0].round() as usize;
            let z = a[1];
            let phi = z.sqrt().asin();
            let hl = 0.5 * z.ln();
            let l1 = integrate_singular(move |t| t.sin().ln(), 0.0, phi, 1e-11)?.value;
            match k {
                2 => Ok((hl * phi - l1) / z.sqrt()),
                3 => {
                    let l2 =
                        integrate_singular(move |t| t.sin().ln().powi(2), 0.0, phi, 1e-11)?.value;
                    Ok(0.5 / z.sqrt() * (hl * hl * phi - 2.0 * hl * l1 + l2))
                }
                _ => Err(MathError::Domain(format!("log-sine rebuild needs k in {{2,3}}, got {k}"))),
            }
        },
    ));

    // ---- I-15: the weighted-log quadrature route ----
    v.push(rec(
        "I-15a",
        "Weighted-log quadrature route agrees with the Clausen closed form",
        "Eq. (156)",
        1e-9,
        Sampler::new(&["tol"], &[&[1e-12], &[1e-11], &[1e-10], &[5e-12], &[2e-11]], 0, &[]),
        |a| Ok(ctet_rajantie(a[0])?.value),
        |_| Ok(ctet_clausen().value),
    ));
    v.push(rec(
        "I-15b",
        "Partial-fractions split: the elementary piece and the total both close",
        "Eqs. (157)-(158)",
        1e-9,
        Sampler::new(&["tol"], &[&[1e-11], &[1e-10], &[5e-11], &[2e-11], &[1e-9]], 0, &[]),
        |a| Ok(rajantie_parts(a[0])?.0.value),
        |_| Ok(constants().theta_plus * 4.0f64.ln()),
    ));
    v.push(rec(
        "I-15c",
        "Shifted-log circular-weight integral matches its dilogarithm closed form",
        "Eqs. (159)-(160)",
        1e-9,
        Sampler::new(
            &["c_over_d", "d"],
            &[&[1.2, 1.7320508075688772], &[2.0, 1.5], &[1.5, 2.0]],
            2,
            &[(1.05, 3.0), (1.2, 2.5)],
        ),
        |a| {
            let (cc, d) = (a[0] * a[1], a[1]);
            let r = integrate_fn(move |x| (x + cc).ln() / (d * d - x * x).sqrt(), 0.0, 1.0, 1e-11)?;
            Ok(r.value)
        },
        |a| j_integral(a[0] * a[1], a[1]),
    ));

    // ---- I-16: the generating-integral (SRP) route ----
    v.push(rec(
        "I-16a",
        "Generating-integral route agrees with the series route",
        "Eqs. (161)-(164)",
        1e-11,
        Sampler::constant(),
        |_| Ok(ctet_srp().value),
        |_| Ok(ctet_series(1e-14)?.value),
    ));
    v.push(rec(
        "I-16b",
        "Generating-integral Clausen sum consolidates by angle multiplicity",
        "Eq. (165)",
        1e-12,
        Sampler::constant(),
        |_| Ok(ctet_srp().value),
        |_| Ok(ctet_srp_consolidated().value),
    ));
    v.push(rec(
        "I-16c",
        "Odd auxiliary function: power series matches the dilogarithm form",
        "Eqs. (166)-(168)",
        1e-9,
        Sampler::new(&["z"], &[&[0.5], &[-0.4], &[0.25]], 2, &[(-0.8, 0.8)]),
        |a| Ok(harris_vbar(a[0], 120)?.0),
        |a| Ok(harris_vbar_direct(a[0])),
    ));

    // ---- I-17: Ramanujan's odd-harmonic function ----
    v.push(rec(
        "I-17a",
        "Ramanujan's H(x): closed form matches the defining series",
        "Eqs. (A.1)-(A.2)",
        1e-11,
        Sampler::new(&["x"], &[&[0.1], &[0.3], &[0.6]], 2, &[(0.05, 0.8)]),
        |a| ramanujan_h(a[0]),
        |a| Ok(ramanujan_h_series(a[0], 4000)),
    ));
    v.push(rec(
        "I-17b",
        "Even-weight odd-harmonic sum matches its dilogarithm closed form",
        "Eqs. (A.3)-(A.6)",
        1e-11,
        Sampler::new(&["x"], &[&[0.3], &[0.7], &[0.5]], 2, &[(0.05, 0.8)]),
        |a| {
            let x = a[0];
            let mut acc = CompSum::new();
            let mut h = 0.0f64;
            let x2 = x * x;
            let mut xp = 1.0f64;
            for k in 1..=4000u32 {
                h += 1.0 / k as f64;
                xp *= x2;
                acc.add(h * xp / (k as f64 + 0.5));
            }
            Ok(acc.value())
        },
        |a| {
            let x = a[0];
            let l = ((1.0 - x) / (1.0 + x)).ln();
            Ok(2.0 / x
                * (LN_2 * l + 0.25 * l * l + PI * PI / 12.0 + li2_real((x - 1.0) / (x + 1.0))))
        },
    ));

    // ---- I-18: Lerch/chi building blocks ----
    v.push(rec(
        "I-18a",
        "Odd-square series equals the Legendre-chi quotient",
        "Eqs. (B.3)-(B.4), (B.9)",
        1e-12,
        Sampler::new(&["z"], &[&[0.25], &[0.5], &[0.9]], 2, &[(0.05, 0.95)]),
        |a| Ok(odd_square_series(a[0], 800)),
        |a| Ok(chi2(c(a[0].sqrt(), 0.0)).re / a[0].sqrt()),
    ));
    v.push(rec(
        "I-18b",
        "Half-shifted Lerch value matches its log-kernel integral",
        "Eqs. (B.1)-(B.2)",
        1e-8,
        Sampler::new(&["z"], &[&[-0.125], &[0.5], &[-0.5]], 2, &[(-0.8, 0.85)]),
        |a| {
            let z = a[0];
            let r = integrate_singular(
                move |u| -0.25 * u.ln() / (u.sqrt() * (1.0 - z * u)),
                0.0,
                1.0,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| Ok(0.25 * lerch_phi(c(a[0], 0.0), 2, 0.5)?.re),
    ));
    v.push(rec(
        "I-18c",
        "Rainville reduction: 3F2(1,1/2,1/2;3/2,3/2;z) as a dilogarithm pair",
        "Eqs. (B.5)-(B.8)",
        1e-11,
        Sampler::new(&["z"], &[&[0.25], &[0.5], &[0.85]], 2, &[(0.05, 0.95)]),
        |a| Ok(pfq_series(&[1.0, 0.5, 0.5], &[1.5, 1.5], a[0], 1e-13)?.value),
        |a| {
            let z = a[0];
            let s = z.sqrt();
            Ok((4.0 * li2_real(s) - li2_real(z)) / (4.0 * s))
        },
    ));
    v.push(rec(
        "I-18d",
        "Log-log integral closes through the half-shifted Lerch value",
        "Eq. (B.10)",
        1e-8,
        Sampler::new(&["z"], &[&[0.25], &[0.5], &[0.8]], 2, &[(0.05, 0.9)]),
        |a| {
            let z = a[0];
            let r = integrate_singular(
                move |x| x.ln() * (1.0 - z * x * x).ln(),
                0.0,
                1.0,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| {
            let z = a[0];
            let phi_half = lerch_phi(c(z, 0.0), 2, 0.5)?.re;
            let phi_three_half = (phi_half - 4.0) / z;
            let s = z.sqrt();
            Ok(2.0 - 2.0 / s * s.atanh() - 0.5 * z * phi_three_half - (1.0 - z).ln())
        },
    ));

    // ---- I-19: the alpha = 2 family and its hypergeometric scaffolding ----
    v.push(rec(
        "I-19a",
        "S(2, beta) matches its two-term Clausen closed form",
        "Eqs. (C.1)-(C.2)",
        1e-12,
        Sampler::new(&["beta"], &[&[1.5], &[2.0], &[3.0]], 2, &[(1.2, 4.5)]),
        |a| Ok(s_family(&SumSpec::new(2.0, a[0]), 1e-14)?.value),
        |a| s2beta_closed(a[0]),
    ));
    v.push(rec(
        "I-19b",
        "Clausen value at theta(beta) equals the inverse-tanh kernel integral",
        "Eqs. (C.3)-(C.6), (C.10)-(C.12)",
        1e-8,
        Sampler::new(&["beta"], &[&[1.5], &[2.0], &[3.0]], 2, &[(1.2, 4.0)]),
        |a| {
            let b3 = a[0].powi(3);
            let th = ((1.0 - b3) / (1.0 + b3)).acos();
            Ok(a[0].powf(1.5) * cl2_f(th))
        },
        |a| {
            let b3 = a[0].powi(3);
            let r = integrate_singular(move |t| t.atanh() / (t * t + b3), 0.0, 1.0, 1e-11)?;
            Ok(2.0 * b3 * r.value)
        },
    ));
    v.push(rec(
        "I-19c",
        "Euler integral for 2F1(1,k;k+1;x) matches the series evaluation",
        "Eqs. (C.7)-(C.9)",
        1e-8,
        Sampler::new(
            &["k", "x"],
            &[&[1.0, 0.5], &[2.0, -0.5], &[3.5, 0.7]],
            2,
            &[(1.0, 5.0), (-0.85, 0.85)],
        ),
        |a| Ok(gauss_2f1(1.0, a[0], a[0] + 1.0, a[1], 1e-13)?.value),
        |a| {
            let (k, x) = (a[0], a[1]);
            let r = integrate_singular(move |t| t.powf(k - 1.0) / (1.0 - x * t), 0.0, 1.0, 1e-11)?;
            Ok(k * r.value)
        },
    ));

    // ---- I-20: the hyperbolic-kernel pair ----
    v.push(rec(
        "I-20a",
        "Finite hyperbolic-kernel integral matches its Clausen closed form",
        "Eqs. (D.1)-(D.4)",
        1e-8,
        Sampler::new(
            &["y", "t"],
            &[&[1.0, 0.7], &[0.5, 1.5], &[2.0, 2.2]],
            2,
            &[(0.3, 3.0), (0.25, 2.85)],
        ),
        |a| {
            let (y, t) = (a[0], a[1]);
            let r = integrate_fn(
                move |x| x * x.cosh() / ((2.0 * x).cosh() - (2.0 * t).cos()),
                0.0,
                y,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| appendix_d_full(a[0], a[1]),
    ));
    v.push(rec(
        "I-20b",
        "Split components in the angular variable match their closed forms",
        "Eqs. (D.13)-(D.15)",
        1e-7,
        Sampler::new(
            &["sign", "y", "t"],
            &[&[0.0, 1.0, 0.7], &[1.0, 1.0, 0.7], &[0.0, 2.0, 1.4], &[1.0, 0.6, 2.2]],
            1,
            &[(0.0, 1.0), (0.3, 2.5), (0.25, 2.85)],
        ),
        |a| {
            let (y, t) = (a[1], a[2]);
            let plus = a[0].round() as u32 == 0;
            let upper = (1.0 / y.cosh()).acos();
            let r = integrate_fn(
                move |th| {
                    let num = (1.0 + th.sin()).ln() - th.cos().ln();
                    let den = 1.0 + if plus { 1.0 } else { -1.0 } * t.cos() * th.cos();
                    num / den
                },
                0.0,
                upper,
                1e-11,
            )?;
            Ok(r.value)
        },
        |a| {
            let (ip, im) = appendix_d_plus_minus(a[1], a[2])?;
            Ok(if a[0].round() as u32 == 0 { ip } else { im })
        },
    ));
    v.push(rec(
        "I-20c",
        "Large-argument limits of the split components are single Clausen values",
        "Eqs. (D.5)-(D.12)",
        1e-8,
        Sampler::new(
            &["sign", "t"],
            &[&[0.0, 0.7], &[1.0, 0.7], &[0.0, 1.8], &[1.0, 2.4]],
            1,
            &[(0.0, 1.0), (0.25, 2.85)],
        ),
        |a| {
            let (ip, im) = appendix_d_plus_minus(40.0, a[1])?;
            Ok(if a[0].round() as u32 == 0 { ip } else { im })
        },
        |a| {
            let t = a[1];
            let arg = if a[0].round() as u32 == 0 { PI - t } else { t };
            Ok(2.0 / t.sin() * cl2_f(arg))
        },
    ));

    v
}
