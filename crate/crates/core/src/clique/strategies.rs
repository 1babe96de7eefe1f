use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::{for_each_clique, CliqueBudget};
use crate::error::{Error, Result};
use crate::graph::{is_chordal, Graph, Peo, VertexSet};
use crate::poly::BivariatePoly;

fn y_power(b: VertexSet, v: usize) -> u32 {
    u32::from(b.contains(v))
}

/// `1 + sum_v x y^[v in B]` over the vertices of `mask`.
fn edgeless_poly(mask: VertexSet, b: VertexSet) -> BivariatePoly {
    let mut p = BivariatePoly::one();
    p.add_term(1, 0, BigInt::from(mask.difference(b).len()));
    p.add_term(1, 1, BigInt::from(mask.intersection(b).len()));
    p
}

/// Counts every clique by size and size of its intersection with `b`.
pub fn cbpoly_bruteforce(g: &Graph, b: VertexSet, budget: CliqueBudget) -> Result<BivariatePoly> {
    g.check_set(b)?;
    let n = g.n();
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for_each_clique(g, budget, |k| counts[k.len()][k.intersection(b).len()] += 1)?;
    let mut p = BivariatePoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            p.add_term(i as u32, j as u32, BigInt::from(c));
        }
    }
    Ok(p)
}

struct VertexDeletion<'a> {
    g: &'a Graph,
    b: VertexSet,
    budget: CliqueBudget,
    memo: HashMap<(u64, u64), BivariatePoly>,
}

impl VertexDeletion<'_> {
    fn solve(&mut self, s: VertexSet) -> Result<BivariatePoly> {
        if s.is_empty() {
            return Ok(BivariatePoly::one());
        }
        let key = (s.bits(), s.intersection(self.b).bits());
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        if self.memo.len() as u64 >= self.budget.0 {
            return Err(self.budget.exceeded("vertex-deletion memo"));
        }
        let v = s
            .iter()
            .min_by_key(|&v| self.g.degree_in(v, s))
            .expect("nonempty set");
        let rest = self.solve(s.without(v))?;
        let through_v = self.solve(self.g.neighbors(v).intersection(s))?;
        let p = &rest + &through_v.shift(1, y_power(self.b, v));
        self.memo.insert(key, p.clone());
        Ok(p)
    }
}

/// Deletes a minimum-degree vertex `v` and adds the cliques through `v`:
/// `C(G) = C(G - v) + x y^[v in B] C(G[N(v)])`.
pub fn cbpoly_vertex_recurrence(
    g: &Graph,
    b: VertexSet,
    budget: CliqueBudget,
) -> Result<BivariatePoly> {
    g.check_set(b)?;
    VertexDeletion {
        g,
        b,
        budget,
        memo: HashMap::new(),
    }
    .solve(g.vertices())
}

struct EdgeDeletion {
    b: VertexSet,
    budget: CliqueBudget,
    memo: HashMap<(u64, Vec<u64>), BivariatePoly>,
}

impl EdgeDeletion {
    /// `adj` is the adjacency of a graph living on `mask`; entries outside
    /// the mask are zero.
    fn solve(&mut self, mask: VertexSet, adj: Vec<u64>) -> Result<BivariatePoly> {
        let key = (mask.bits(), adj);
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        if self.memo.len() as u64 >= self.budget.0 {
            return Err(self.budget.exceeded("edge-deletion memo"));
        }
        let mut cur = key.1.clone();
        let mut total = BivariatePoly::zero();
        while let Some((u, v)) = widest_edge(mask, &cur) {
            let common = VertexSet::from_bits(cur[u] & cur[v]);
            let sub: Vec<u64> = (0..cur.len())
                .map(|w| if common.contains(w) { cur[w] & common.bits() } else { 0 })
                .collect();
            let lifted = self.solve(common, sub)?;
            total += &lifted.shift(2, y_power(self.b, u) + y_power(self.b, v));
            cur[u] &= !(1 << v);
            cur[v] &= !(1 << u);
        }
        total += &edgeless_poly(mask, self.b);
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// Edge with the largest common neighborhood, first in index order on ties.
fn widest_edge(mask: VertexSet, adj: &[u64]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, (usize, usize))> = None;
    for u in mask {
        for v in VertexSet::from_bits(adj[u]).after(u) {
            let width = (adj[u] & adj[v]).count_ones() as usize;
            if best.map_or(true, |(w, _)| width > w) {
                best = Some((width, (u, v)));
            }
        }
    }
    best.map(|(_, e)| e)
}

/// Deletes edges one at a time down to the edgeless graph, adding
/// `x^2 y^([u in B] + [v in B]) C(G[N(u) ∩ N(v)])` for each deleted `uv`.
pub fn cbpoly_edge_recurrence(
    g: &Graph,
    b: VertexSet,
    budget: CliqueBudget,
) -> Result<BivariatePoly> {
    g.check_set(b)?;
    EdgeDeletion {
        b,
        budget,
        memo: HashMap::new(),
    }
    .solve(g.vertices(), g.adjacency_bits().to_vec())
}

/// Polynomials of `G_1, ..., G_n`, where `G_i` is induced by the first `i`
/// vertices of the ordering.
pub fn cbpoly_peo_steps(g: &Graph, b: VertexSet, peo: &Peo) -> Result<Vec<BivariatePoly>> {
    g.check_set(b)?;
    let peo = Peo::new(g, peo.order().to_vec())?;
    let mut acc = BivariatePoly::one();
    let mut steps = Vec::with_capacity(g.n());
    for (i, &v) in peo.order().iter().enumerate() {
        let mut term = BivariatePoly::monomial(1, y_power(b, v), 1);
        for u in peo.earlier_neighbors(g, i) {
            let factor = &BivariatePoly::one() + &BivariatePoly::monomial(1, y_power(b, u), 1);
            term = &term * &factor;
        }
        acc += &term;
        steps.push(acc.clone());
    }
    Ok(steps)
}

/// Adds, for each `v_i` of a perfect elimination ordering,
/// `x y^[v_i in B]` times the product of `1 + x y^[u in B]` over its earlier
/// neighbors `u`.
pub fn cbpoly_peo(g: &Graph, b: VertexSet, peo: &Peo) -> Result<BivariatePoly> {
    Ok(cbpoly_peo_steps(g, b, peo)?
        .pop()
        .unwrap_or_else(BivariatePoly::one))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Brute,
    Vertex,
    Edge,
    Peo,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Brute, Strategy::Vertex, Strategy::Edge, Strategy::Peo];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Brute => "brute",
            Strategy::Vertex => "vertex",
            Strategy::Edge => "edge",
            Strategy::Peo => "peo",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown strategy {s:?}")))
    }
}

/// Runs one strategy. The PEO strategy uses maximum cardinality search and
/// fails on non-chordal graphs.
pub fn compute(g: &Graph, b: VertexSet, strategy: Strategy, budget: CliqueBudget) -> Result<BivariatePoly> {
    match strategy {
        Strategy::Brute => cbpoly_bruteforce(g, b, budget),
        Strategy::Vertex => cbpoly_vertex_recurrence(g, b, budget),
        Strategy::Edge => cbpoly_edge_recurrence(g, b, budget),
        Strategy::Peo => {
            let peo = is_chordal(g).ok_or(Error::NotChordal)?;
            cbpoly_peo(g, b, &peo)
        }
    }
}
