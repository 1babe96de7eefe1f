//! Named graph families used by tests, the corpus and the CLI.

use super::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("family constructors produce simple graphs")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn edgeless(n: usize) -> Graph {
    build(n, [])
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Star `K_{1,k}` with the center at index 0.
pub fn star(k: usize) -> Graph {
    build(k + 1, (1..=k).map(|v| (0, v)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Circulant graph on `n` vertices joining `v` and `v ± s` for each offset `s`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for &s in offsets {
            let w = (v + s) % n;
            let e = (v.min(w), v.max(w));
            if v != w && !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    build(n, edges)
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    build(10, outer.chain(inner).chain(spokes))
}

/// Disjoint union of two graphs; vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g
        .edges()
        .into_iter()
        .chain(h.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    build(g.n() + h.n(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(circulant(8, &[1, 2]).edge_count(), 16);
        assert_eq!(circulant(6, &[3]).edge_count(), 3);
        assert_eq!(star(3).degree(0), 3);
        assert_eq!(disjoint_union(&cycle(3), &path(2)).edge_count(), 4);
    }
}
