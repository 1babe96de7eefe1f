//! Seeded test corpora: exhaustive small graphs, random graphs with sampled
//! `B`, regular families, and homomorphism generators.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::clique::{
    cbpoly_bruteforce, cbpoly_edge_recurrence, cbpoly_peo, cbpoly_vertex_recurrence,
    classical_clique_poly, CliqueBudget, Strategy,
};
use crate::error::Result;
use crate::graph::{families, is_chordal, Graph, VertexSet};
use crate::report::{CheckReport, GraphWitness};
use crate::weighted::Homomorphism;

pub const STRATEGY_AGREEMENT: &str = "strategy-agreement";
pub const SPECIALIZATION: &str = "specialization-identities";

pub const DEFAULT_SEED: u64 = 42;

/// Largest order enumerated exhaustively.
pub const EXHAUSTIVE_MAX_N: usize = 4;
pub const RANDOM_PER_SMALL_ORDER: usize = 500;
pub const RANDOM_LARGE: usize = 300;
pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub b: VertexSet,
}

/// Every labeled graph on `n` vertices, indexed by the bits of its edge
/// list in lexicographic pair order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "exhaustive enumeration is limited to small orders");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("pairs are distinct and in range")
    })
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random edges are simple")
}

pub fn random_subset(rng: &mut impl Rng, n: usize, k: usize) -> VertexSet {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.into_iter().take(k).collect()
}

/// `{0, ceil(n/3), n}` without repetitions.
pub fn b_sizes(n: usize) -> Vec<usize> {
    let mut sizes = vec![0, n.div_ceil(3), n];
    sizes.dedup();
    sizes
}

fn with_sampled_b(rng: &mut impl Rng, name: &str, g: Graph, out: &mut Vec<Instance>) {
    let n = g.n();
    for k in b_sizes(n) {
        out.push(Instance {
            name: format!("{name} |B|={k}"),
            b: random_subset(rng, n, k),
            graph: g.clone(),
        });
    }
}

/// All labeled graphs with `n <= 4`, 500 random graphs for each of
/// `n = 5, 6`, and 300 random graphs with `7 <= n <= 10` at densities
/// `{0.2, 0.5, 0.8}`; every graph appears with one random `B` of each
/// size in [`b_sizes`].
pub fn standard_corpus(seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in 1..=EXHAUSTIVE_MAX_N {
        for (k, g) in labeled_graphs(n).enumerate() {
            with_sampled_b(&mut rng, &format!("labeled n={n} #{k}"), g, &mut out);
        }
    }
    for n in 5..=6 {
        for k in 0..RANDOM_PER_SMALL_ORDER {
            let g = random_graph(&mut rng, n, 0.5);
            with_sampled_b(&mut rng, &format!("random n={n} #{k}"), g, &mut out);
        }
    }
    for k in 0..RANDOM_LARGE {
        let n = 7 + k % 4;
        let p = DENSITIES[k % DENSITIES.len()];
        let g = random_graph(&mut rng, n, p);
        with_sampled_b(&mut rng, &format!("random n={n} p={p} #{k}"), g, &mut out);
    }
    out
}

/// Regular graphs with well-understood spectra.
pub fn regular_family() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=8 {
        out.push((format!("C{n}"), families::cycle(n)));
    }
    for n in 2..=6 {
        out.push((format!("K{n}"), families::complete(n)));
    }
    for d in 2..=4 {
        out.push((format!("K{d},{d}"), families::complete_bipartite(d, d)));
    }
    out.push(("circulant(8;1,2)".into(), families::circulant(8, &[1, 2])));
    out.push(("circulant(9;1,3)".into(), families::circulant(9, &[1, 3])));
    out.push(("circulant(10;1,4)".into(), families::circulant(10, &[1, 4])));
    out.push(("Petersen".into(), families::petersen()));
    out.push(("edgeless4".into(), families::edgeless(4)));
    out
}

/// Inclusion of a random induced subgraph `G[S]` into `G`.
pub fn random_induced_embedding(rng: &mut impl Rng, g: &Graph) -> Homomorphism {
    let k = rng.gen_range(1..=g.n());
    let s = random_subset(rng, g.n(), k);
    let (sub, map) = g.induced_subgraph(s);
    Homomorphism::new(sub, g.clone(), map).expect("inclusion maps into the graph")
}

/// A random relabeling `G -> pi(G)`.
pub fn random_isomorphism(rng: &mut impl Rng, g: &Graph) -> Homomorphism {
    let mut pi: Vec<usize> = (0..g.n()).collect();
    pi.shuffle(rng);
    let edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (pi[u], pi[v])).collect();
    let target = Graph::from_edges(g.n(), &edges).expect("a permutation keeps the graph simple");
    Homomorphism::new(g.clone(), target, pi).expect("permutation is total")
}

/// Surjective homomorphism onto a quotient: vertices are merged into random
/// independent classes and the target has an edge between two classes
/// whenever some source edge joins them.
pub fn random_surjection(rng: &mut impl Rng, g: &Graph) -> Homomorphism {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut map = vec![0; g.n()];
    for v in order {
        let open: Vec<usize> = (0..classes.len())
            .filter(|&c| classes[c].intersection(g.neighbors(v)).is_empty())
            .collect();
        let c = if open.is_empty() || rng.gen_bool(0.3) {
            classes.push(VertexSet::EMPTY);
            classes.len() - 1
        } else {
            open[rng.gen_range(0..open.len())]
        };
        classes[c] = classes[c].with(v);
        map[v] = c;
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (map[u].min(map[v]), map[u].max(map[v])))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let target = Graph::from_edges(classes.len(), &edges).expect("classes are independent");
    Homomorphism::new(g.clone(), target, map).expect("every vertex has a class")
}

/// Brute force, both recurrences and (on chordal graphs) PEO induction
/// must produce identical coefficient maps.
pub fn check_strategy_agreement(instances: &[Instance], budget: CliqueBudget) -> Result<CheckReport> {
    let mut chordal = 0u64;
    let mut discrepancies = 0u64;
    let mut witness = None;
    for inst in instances {
        let (g, b) = (&inst.graph, inst.b);
        let mut results = vec![
            (Strategy::Brute, cbpoly_bruteforce(g, b, budget)?),
            (Strategy::Vertex, cbpoly_vertex_recurrence(g, b, budget)?),
            (Strategy::Edge, cbpoly_edge_recurrence(g, b, budget)?),
        ];
        if let Some(peo) = is_chordal(g) {
            chordal += 1;
            results.push((Strategy::Peo, cbpoly_peo(g, b, &peo)?));
        }
        if results.iter().any(|(_, p)| p != &results[0].1) {
            discrepancies += 1;
            if witness.is_none() {
                let polys: serde_json::Map<_, _> = results
                    .iter()
                    .map(|(s, p)| (s.name().to_string(), json!(p)))
                    .collect();
                witness = Some(json!({
                    "instance": inst.name,
                    "graph": GraphWitness::new(g, b),
                    "polynomials": polys,
                }));
            }
        }
    }
    let details = json!({
        "instances": instances.len(),
        "chordal_instances": chordal,
        "discrepancies": discrepancies,
    });
    Ok(match witness {
        Some(w) => CheckReport::violated(STRATEGY_AGREEMENT, w),
        None => CheckReport::holds(STRATEGY_AGREEMENT),
    }
    .with_details(details))
}

/// `C_V(G; x, y) = C(G; xy)` and `C_∅(G; x, y) = C(G; x)` against the
/// level-wise classical clique polynomial. Each distinct graph is checked
/// once.
pub fn check_specializations(instances: &[Instance], budget: CliqueBudget) -> Result<CheckReport> {
    let mut graphs = 0u64;
    let mut witness = None;
    let mut previous: Option<&Graph> = None;
    for inst in instances {
        let g = &inst.graph;
        if previous == Some(g) {
            continue;
        }
        previous = Some(g);
        graphs += 1;
        let classical = classical_clique_poly(g);
        let all = cbpoly_bruteforce(g, g.vertices(), budget)?;
        let none = cbpoly_bruteforce(g, VertexSet::EMPTY, budget)?;
        let level = |i: usize| classical.get(i).cloned().unwrap_or_else(BigInt::zero);
        let mismatch = (0..=g.n() as u32)
            .flat_map(|i| (0..=i).map(move |j| (i, j)))
            .find_map(|(i, j)| {
                let diag = if i == j { level(i as usize) } else { BigInt::zero() };
                let flat = if j == 0 { level(i as usize) } else { BigInt::zero() };
                if all.coeff(i, j) != diag {
                    Some(("b_all", i, j, diag, all.coeff(i, j)))
                } else if none.coeff(i, j) != flat {
                    Some(("b_empty", i, j, flat, none.coeff(i, j)))
                } else {
                    None
                }
            });
        if let (Some((identity, i, j, expected, actual)), None) = (mismatch, &witness) {
            witness = Some(json!({
                "instance": inst.name,
                "graph": GraphWitness::new(g, VertexSet::EMPTY),
                "identity": identity,
                "i": i, "j": j,
                "expected": expected.to_string(),
                "actual": actual.to_string(),
            }));
        }
    }
    let details = json!({"graphs": graphs});
    Ok(match witness {
        Some(w) => CheckReport::violated(SPECIALIZATION, w),
        None => CheckReport::holds(SPECIALIZATION),
    }
    .with_details(details))
}
