use num_bigint::BigInt;

use crate::graph::{Graph, VertexSet};

/// Coefficients of the univariate clique polynomial `C(G; x)`, lowest
/// degree first, built level by level: every `(k+1)`-clique is a `k`-clique
/// extended by a common neighbor of larger index.
pub fn classical_clique_poly(g: &Graph) -> Vec<BigInt> {
    let mut level = vec![(VertexSet::EMPTY, g.vertices())];
    let mut counts = Vec::new();
    while !level.is_empty() {
        counts.push(BigInt::from(level.len()));
        let mut next = Vec::new();
        for (clique, candidates) in level {
            for v in candidates {
                next.push((clique.with(v), candidates.after(v).intersection(g.neighbors(v))));
            }
        }
        level = next;
    }
    counts
}
