//! Bivariate B-restricted clique polynomials: exact computation by several
//! independent strategies, certified largest negative roots, and
//! executable checkers for inequalities and stability claims about them.

pub mod analysis;
pub mod clique;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod poly;
pub mod rational;
pub mod report;
pub mod spectral;
pub mod stability;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use poly::{BivariatePoly, UnivariatePoly};
pub use report::{CheckReport, Verdict};
