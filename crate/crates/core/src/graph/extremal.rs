use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, VertexSet};

/// B-restricted extremal parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub alpha_b: usize,
    /// `None` when `G[B]` is acyclic.
    pub girth_b: Option<usize>,
}

pub fn extremal_params(g: &Graph, b: VertexSet) -> ExtremalParams {
    ExtremalParams {
        alpha_b: b_independence(g, b),
        girth_b: b_girth(g, b),
    }
}

/// Size of the largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, candidates: VertexSet, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut rest = candidates;
        while let Some(v) = rest.first() {
            if size + rest.len() <= *best {
                return;
            }
            rest = rest.without(v);
            grow(g, size + 1, rest.intersection(g.neighbors(v)), best);
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    grow(g, 0, g.vertices(), &mut best);
    best
}

/// `G` contains no `K_r`.
pub fn is_kr_free(g: &Graph, r: usize) -> bool {
    clique_number(g) < r
}

/// Largest independent set contained in `b`.
pub fn b_independence(g: &Graph, b: VertexSet) -> usize {
    fn search(g: &Graph, candidates: VertexSet, size: usize, best: &mut usize) {
        let Some(v) = candidates.first() else {
            *best = (*best).max(size);
            return;
        };
        if size + candidates.len() <= *best {
            return;
        }
        // take v, dropping its neighbors
        search(g, candidates.without(v).difference(g.neighbors(v)), size + 1, best);
        // skip v; only useful if v has a neighbor among the candidates
        if !g.neighbors(v).intersection(candidates).is_empty() {
            search(g, candidates.without(v), size, best);
        }
    }
    let mut best = 0;
    search(g, b.intersection(g.vertices()), 0, &mut best);
    best
}

/// Girth of `G[B]` by breadth-first search from every vertex of `B`.
pub fn b_girth(g: &Graph, b: VertexSet) -> Option<usize> {
    let b = b.intersection(g.vertices());
    let mut best: Option<usize> = None;
    for root in b {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).intersection(b) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn worked_example() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&complete(3)), 3);
        assert_eq!(clique_number(&worked_example()), 3);
        assert_eq!(clique_number(&edgeless(5)), 1);
        assert_eq!(clique_number(&petersen()), 2);
        assert!(is_kr_free(&cycle(5), 3));
        assert!(!is_kr_free(&complete(4), 4));
    }

    #[test]
    fn b_independence_examples() {
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(b_independence(&complete(3), b), 1);
        assert_eq!(b_independence(&edgeless(5), VertexSet::full(5)), 5);
        assert_eq!(b_independence(&worked_example(), b), 1);
        assert_eq!(b_independence(&petersen(), VertexSet::full(10)), 4);
        assert_eq!(b_independence(&cycle(5), VertexSet::EMPTY), 0);
    }

    #[test]
    fn b_girth_examples() {
        assert_eq!(b_girth(&cycle(5), VertexSet::full(5)), Some(5));
        let g = worked_example();
        assert_eq!(b_girth(&g, [1, 2].into_iter().collect()), None);
        assert_eq!(b_girth(&g, [1, 2, 3].into_iter().collect()), Some(3));
        assert_eq!(b_girth(&petersen(), VertexSet::full(10)), Some(5));
        assert_eq!(b_girth(&complete_bipartite(3, 3), VertexSet::full(6)), Some(4));
        assert_eq!(b_girth(&cycle(6), VertexSet::full(6).without(0)), None);
    }
}
