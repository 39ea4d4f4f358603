//! Harmonic-number machinery: the S-family sums with their closed forms and
//! integral representations, Ramanujan's H function, Harris's vbar expansion,
//! Legendre-polynomial series for Cl_2 and Li_2, and exact rational-pair
//! Legendre integrals.

pub mod legendre_series;
pub mod sums;

pub use legendre_series::{
    cl2_legendre_series, eq59_partial_sum, ik_exact, ik_quadrature, ik_rhs_exact,
    li2_legendre_series, prop4_series, prop5_cl2_series, prop6_cl2_integral, Basis,
    RationalPair,
};
pub use sums::{
    bernoulli_trig_sums, harm, harm_exact, harris_vbar, ramanujan_h, ramanujan_h_series,
    s2beta_closed, s22_closed_forms, s_family, s_integral_reps, st_closed, SumSpec,
};
