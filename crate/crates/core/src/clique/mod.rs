//! The B-clique polynomial `sum_K x^|K| y^|K ∩ B|` by four independent
//! strategies, plus the weighted variant and the univariate clique
//! polynomial used as an independent reference.

mod classical;
mod enumerate;
mod multiaffine;
mod strategies;
mod weighted;

pub use classical::classical_clique_poly;
pub use enumerate::{enumerate_cliques, for_each_clique, CliqueBudget, BUDGET_ENV, DEFAULT_CLIQUE_BUDGET};
pub use multiaffine::MultiaffineVertexPoly;
pub use strategies::{
    cbpoly_bruteforce, cbpoly_edge_recurrence, cbpoly_peo, cbpoly_peo_steps,
    cbpoly_vertex_recurrence, compute, Strategy,
};
pub use weighted::weighted_cbpoly;
