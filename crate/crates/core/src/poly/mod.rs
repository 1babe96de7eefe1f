//! Exact polynomial arithmetic and real-root machinery.

mod bivariate;
mod roots;
mod univariate;

pub use bivariate::BivariatePoly;
pub use roots::{
    cauchy_bound, compare_root_with, compare_zeta, compare_zeta_with_budget, default_width,
    is_real_rooted, isolate_negative_roots, real_root_count, sturm_count, RootAnalysis,
    RootInterval, Zeta, ZetaOrder, DEFAULT_WIDTH_BITS, REFINEMENT_BUDGET,
};
pub use univariate::UnivariatePoly;
