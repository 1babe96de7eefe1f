//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are indexed `0..n` internally. Each graph also carries the
//! 1-based external label of every vertex, so induced subgraphs keep
//! reporting the labels of the graph they were cut from.

mod chordal;
mod connectivity;
mod extremal;
pub mod families;
mod geometry;
mod parse;
mod vertex_set;

pub use chordal::{is_chordal, maximum_cardinality_search, Peo};
pub use connectivity::{is_connected, vertex_connectivity, vertex_connectivity_menger, BRUTE_FORCE_LIMIT};
pub use extremal::{b_girth, b_independence, clique_number, extremal_params, is_kr_free, ExtremalParams};
pub use geometry::{check_neighborhood_geometry, neighborhood_geometry, NeighborhoodGeometry};
pub(crate) use geometry::find_triangle;
pub use parse::{parse_graph, GraphFile};
pub use vertex_set::{Members, VertexSet};

use crate::error::{Error, Result};

/// Exhaustive operations are bounded by the bitset width.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `1..=n`.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: (1..=n).collect(),
        })
    }

    /// Builds a graph from 0-based edges; rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidVertexSet(format!("self-loop at vertex {}", u + 1)));
        }
        if self.adjacent(u, v) {
            return Err(Error::InvalidVertexSet(format!(
                "duplicate edge {} {}",
                u + 1,
                v + 1
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Replaces the external labels; they must be distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidVertexSet(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::InvalidVertexSet("labels are not distinct".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Checks that `s` only names vertices of this graph.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::InvalidVertexSet(format!(
                "{:?} is not a subset of the {} vertices",
                s,
                self.n()
            )))
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    /// `G[S]` together with the map from new indices to old indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.intersection(self.vertices()).to_vec();
        let mut adj = vec![0u64; map.len()];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.adjacent(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        let labels = map.iter().map(|&v| self.labels[v]).collect();
        (Graph { adj, labels }, map)
    }

    /// Maps a set of old indices into the index space of an induced subgraph.
    pub fn restrict_set(map: &[usize], s: VertexSet) -> VertexSet {
        map.iter()
            .enumerate()
            .filter(|(_, &old)| s.contains(old))
            .map(|(new, _)| new)
            .collect()
    }

    /// `G - v`, plus the index map.
    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G - uv` on the same vertex set.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n() || v >= self.n() || !self.adjacent(u, v) {
            return Err(Error::InvalidVertexSet(format!("no edge between {u} and {v}")));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Common neighborhood: vertices outside `s` adjacent to all of `s`.
    pub fn common_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        if s.is_empty() {
            return Err(Error::InvalidVertexSet(
                "common neighborhood of the empty set is undefined".into(),
            ));
        }
        self.check_set(s)?;
        Ok(s
            .iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.neighbors(v)))
            .difference(s))
    }

    /// Common neighborhood of `s` restricted to the vertex mask `within`.
    pub(crate) fn common_neighbors_in(&self, s: VertexSet, within: VertexSet) -> VertexSet {
        s.iter()
            .fold(within, |acc, v| acc.intersection(self.neighbors(v)))
            .difference(s)
    }

    /// Degree of `v` in `G[within]`.
    pub(crate) fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        self.neighbors(v).intersection(within).len()
    }

    /// Returns the common degree, or the first vertex whose degree differs
    /// from vertex 0.
    pub fn regular_degree(&self) -> Result<usize> {
        let Some(d) = (0..self.n()).map(|v| self.degree(v)).next() else {
            return Ok(0);
        };
        match (0..self.n()).find(|&v| self.degree(v) != d) {
            None => Ok(d),
            Some(v) => Err(Error::NotRegular {
                vertex: self.label(v),
                degree: self.degree(v),
                expected: d,
            }),
        }
    }

    /// 1-based labels of a vertex set, ascending by index.
    pub fn set_labels(&self, s: VertexSet) -> Vec<usize> {
        s.iter().map(|v| self.labels[v]).collect()
    }

    pub(crate) fn adjacency_bits(&self) -> &[u64] {
        &self.adj
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn worked_example() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::edgeless(65).is_err());
    }

    #[test]
    fn induced_subgraph_of_example_is_triangle() {
        let g = worked_example();
        let s: VertexSet = [1, 2, 3].into_iter().collect();
        let (h, map) = g.induced_subgraph(s);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.labels(), &[2, 3, 4]);
        assert_eq!(h, complete(3).with_labels(vec![2, 3, 4]).unwrap());
    }

    #[test]
    fn induced_subgraph_identity_and_edge() {
        let g = worked_example();
        assert_eq!(g.induced_subgraph(g.vertices()).0, g);
        let k3 = complete(3);
        let (e, _) = k3.induced_subgraph([1, 2].into_iter().collect());
        assert_eq!(e.edges(), vec![(0, 1)]);
        assert_eq!(e.labels(), &[2, 3]);
        let (empty, _) = k3.induced_subgraph(VertexSet::EMPTY);
        assert_eq!(empty.n(), 0);
    }

    #[test]
    fn common_neighborhood_examples() {
        let g = worked_example();
        let s: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(g.common_neighborhood(s).unwrap().to_vec(), vec![3]);
        let k3 = complete(3);
        assert_eq!(k3.common_neighborhood(s).unwrap().to_vec(), vec![0]);
        let p3 = path(3);
        let ends: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(p3.common_neighborhood(ends).unwrap().to_vec(), vec![1]);
        assert!(p3.common_neighborhood(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn edge_removal_keeps_vertices() {
        let g = complete(3).without_edge(0, 1).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
        assert!(g.without_edge(0, 1).is_err());
    }

    #[test]
    fn regularity() {
        assert_eq!(petersen().regular_degree().unwrap(), 3);
        assert!(matches!(path(3).regular_degree(), Err(Error::NotRegular { .. })));
    }
}
