//! Four independent evaluations of the fully symmetric tetrahedron
//! constant C(1,1), plus the family of closed-form log-trigonometric
//! integrals that underpin the quadrature route.

pub mod log_trig;
pub mod routes;

pub use log_trig::{
    appendix_d_full, appendix_d_plus_minus, corollary5_log_sin_squared, eq120_shifted_sine,
    eq90_log_cos_diff, j_integral, lobachevsky_pi_over_6, prop7a_log_sin_shift,
    prop7b_log_sin_cosh, prop7c, prop7d_sin, prop7d_tan, prop7d_tan_candidates, prop8_integral,
    prop9_pfq_closed_form, prop9_psi, Prop7cKind,
};
pub use routes::{
    all_routes, ctet_clausen, ctet_rajantie, ctet_series, ctet_series_dd, ctet_srp,
    ctet_srp_consolidated, rajantie_parts, CtetRoute, RouteKind, SrpParameters,
};
