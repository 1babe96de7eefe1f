use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// A perfect elimination ordering `v_1, ..., v_n`: the earlier neighbors of
/// every vertex form a clique. Only constructible through verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Peo {
    order: Vec<usize>,
}

impl Peo {
    /// Verifies `order` against `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::InvalidOrdering(format!(
                "ordering has {} entries for {} vertices",
                order.len(),
                n
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &order {
            if v >= n || seen.contains(v) {
                return Err(Error::InvalidOrdering(format!("not a permutation of 0..{n}")));
            }
            let earlier = g.neighbors(v).intersection(seen);
            for a in earlier {
                if let Some(b) = earlier.without(a).difference(g.neighbors(a)).first() {
                    return Err(Error::NotPeo {
                        vertex: g.label(v),
                        u: g.label(a),
                        v: g.label(b),
                    });
                }
            }
            seen = seen.with(v);
        }
        Ok(Peo { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `N(v_i) ∩ {v_1, ..., v_{i-1}}` for position `i` (0-based).
    pub fn earlier_neighbors(&self, g: &Graph, i: usize) -> VertexSet {
        let before: VertexSet = self.order[..i].iter().copied().collect();
        g.neighbors(self.order[i]).intersection(before)
    }

    /// Whether this ordering was verified for `g`.
    pub fn fits(&self, g: &Graph) -> bool {
        Peo::new(g, self.order.clone()).is_ok()
    }
}

/// Maximum cardinality search: repeatedly visit the unvisited vertex with
/// the most visited neighbors, smallest index on ties.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        order.push(v);
        visited = visited.with(v);
        for u in g.neighbors(v).difference(visited) {
            weight[u] += 1;
        }
    }
    order
}

/// Returns a verified PEO when `g` is chordal.
pub fn is_chordal(g: &Graph) -> Option<Peo> {
    Peo::new(g, maximum_cardinality_search(g)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn worked_example() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn worked_example_is_chordal_and_identity_order_verifies() {
        let g = worked_example();
        assert!(is_chordal(&g).is_some());
        assert!(Peo::new(&g, vec![0, 1, 2, 3]).is_ok());
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        assert!(is_chordal(&cycle(4)).is_none());
        assert!(is_chordal(&cycle(5)).is_none());
    }

    #[test]
    fn every_ordering_of_k5_verifies() {
        let g = complete(5);
        assert!(Peo::new(&g, vec![4, 2, 0, 3, 1]).is_ok());
        assert!(is_chordal(&g).is_some());
    }

    #[test]
    fn rejects_bad_orderings() {
        let g = path(3);
        // the middle vertex last: its earlier neighbors 0 and 2 are non-adjacent
        assert!(matches!(Peo::new(&g, vec![0, 2, 1]), Err(Error::NotPeo { vertex: 2, .. })));
        assert!(Peo::new(&g, vec![0, 1]).is_err());
        assert!(Peo::new(&g, vec![0, 1, 1]).is_err());
    }

    #[test]
    fn earlier_neighbors_follow_order() {
        let g = worked_example();
        let peo = Peo::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(peo.earlier_neighbors(&g, 3).to_vec(), vec![1, 2]);
        assert_eq!(peo.earlier_neighbors(&g, 0), VertexSet::EMPTY);
    }
}
