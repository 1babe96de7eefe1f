//! Library results against independent brute-force and floating-point
//! oracles that share no code with the library algorithms.

use bclique_core::clique::{
    cbpoly_bruteforce, classical_clique_poly, compute, CliqueBudget, Strategy,
};
use bclique_core::corpus::{labeled_graphs, random_graph, random_subset, regular_family};
use bclique_core::graph::{b_girth, b_independence, is_chordal, vertex_connectivity, Graph};
use bclique_core::poly::{isolate_negative_roots, real_root_count, sturm_count};
use bclique_core::rational::{int, to_f64};
use bclique_core::spectral::{adjacency_eigen, eigenvalues};
use bclique_core::{BivariatePoly, UnivariatePoly, VertexSet};
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.edges().contains(&(u.min(v), u.max(v)))
}

fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(k, &u)| s[k + 1..].iter().all(|&v| adjacent(g, u, v)))
}

/// Sum over every vertex subset that happens to be a clique.
fn subset_polynomial(g: &Graph, b: VertexSet) -> BivariatePoly {
    let mut p = BivariatePoly::zero();
    for s in subsets(g.n()) {
        if is_clique(g, &s) {
            let j = s.iter().filter(|&&v| b.contains(v)).count();
            p.add_term(s.len() as u32, j as u32, BigInt::from(1));
        }
    }
    p
}

/// Connected induced subgraph in which every vertex has degree two.
fn induces_cycle(g: &Graph, s: &[usize]) -> bool {
    let deg = |v: usize| s.iter().filter(|&&u| adjacent(g, u, v)).count();
    if s.iter().any(|&v| deg(v) != 2) {
        return false;
    }
    let mut seen = vec![s[0]];
    let mut stack = vec![s[0]];
    while let Some(v) = stack.pop() {
        for &u in s {
            if adjacent(g, u, v) && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == s.len()
}

fn chordal_oracle(g: &Graph) -> bool {
    !subsets(g.n()).any(|s| s.len() >= 4 && induces_cycle(g, &s))
}

fn connected_after_removing(g: &Graph, removed: &[usize]) -> bool {
    let rest: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    if rest.len() <= 1 {
        return false;
    }
    let mut seen = vec![rest[0]];
    let mut stack = vec![rest[0]];
    while let Some(v) = stack.pop() {
        for &u in &rest {
            if adjacent(g, u, v) && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    seen.len() == rest.len()
}

/// Smallest removal set that disconnects the graph or leaves one vertex.
fn connectivity_oracle(g: &Graph) -> usize {
    (0..g.n())
        .find(|&k| subsets(g.n()).any(|s| s.len() == k && !connected_after_removing(g, &s)))
        .unwrap_or(g.n().saturating_sub(1))
}

fn independence_oracle(g: &Graph, b: VertexSet) -> usize {
    subsets(g.n())
        .filter(|s| s.iter().all(|&v| b.contains(v)))
        .filter(|s| s.iter().enumerate().all(|(k, &u)| s[k + 1..].iter().all(|&v| !adjacent(g, u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Shortest cycle inside `B` by trying every vertex sequence of each length.
fn girth_oracle(g: &Graph, b: VertexSet) -> Option<usize> {
    fn extend(g: &Graph, b: VertexSet, path: &mut Vec<usize>, len: usize) -> bool {
        if path.len() == len {
            return adjacent(g, path[0], *path.last().unwrap());
        }
        for v in 0..g.n() {
            let last = *path.last().unwrap();
            if b.contains(v) && v > path[0] && !path.contains(&v) && adjacent(g, last, v) {
                path.push(v);
                if extend(g, b, path, len) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (3..=g.n()).find(|&len| b.iter().any(|s| extend(g, b, &mut vec![s], len)))
}

fn oracle_graphs() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out: Vec<Graph> = (1..=4).flat_map(labeled_graphs).collect();
    for _ in 0..150 {
        let n = rng.gen_range(5..=8);
        let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
        out.push(random_graph(&mut rng, n, p));
    }
    out
}

#[test]
fn every_strategy_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in oracle_graphs() {
        let k = rng.gen_range(0..=g.n());
        let b = random_subset(&mut rng, g.n(), k);
        let expected = subset_polynomial(&g, b);
        for s in Strategy::ALL {
            if s == Strategy::Peo && !chordal_oracle(&g) {
                continue;
            }
            let got = compute(&g, b, s, CliqueBudget::default()).unwrap();
            assert_eq!(got, expected, "{s} on {:?} B={:?}", g.edges(), b.to_vec());
        }
    }
}

#[test]
fn classical_polynomial_counts_cliques_by_size() {
    for g in oracle_graphs() {
        let mut counts = vec![BigInt::from(0); g.n() + 1];
        for s in subsets(g.n()).filter(|s| is_clique(&g, s)) {
            counts[s.len()] += 1;
        }
        while counts.len() > 1 && counts.last() == Some(&BigInt::from(0)) {
            counts.pop();
        }
        assert_eq!(classical_clique_poly(&g), counts);
    }
}

#[test]
fn chordality_matches_induced_cycle_search() {
    for g in oracle_graphs() {
        assert_eq!(is_chordal(&g).is_some(), chordal_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn connectivity_matches_separator_search() {
    for g in oracle_graphs() {
        assert_eq!(vertex_connectivity(&g), connectivity_oracle(&g), "{:?}", g.edges());
    }
}

#[test]
fn independence_and_girth_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for g in oracle_graphs() {
        let k = rng.gen_range(0..=g.n());
        let b = random_subset(&mut rng, g.n(), k);
        assert_eq!(b_independence(&g, b), independence_oracle(&g, b));
        assert_eq!(b_girth(&g, b), girth_oracle(&g, b), "{:?} B={:?}", g.edges(), b.to_vec());
    }
}

fn random_poly(rng: &mut impl Rng) -> UnivariatePoly {
    let degree = rng.gen_range(1..=7);
    let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
    if coeffs[degree] == 0 {
        coeffs[degree] = 1;
    }
    // isolation works on (-inf, 0) and requires p(0) != 0
    if coeffs[0] == 0 {
        coeffs[0] = -1;
    }
    UnivariatePoly::from_ints(&coeffs)
}

/// Roots as eigenvalues of the companion matrix.
fn companion_roots(p: &UnivariatePoly) -> Vec<nalgebra::Complex<f64>> {
    let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let d = c.len() - 1;
    let lead = c[d];
    let m = DMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().copied().collect()
}

#[test]
fn sturm_counts_match_companion_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut compared = 0;
    let mut tried = 0;
    while compared < 500 {
        tried += 1;
        assert!(tried < 5000, "too many ill-conditioned samples");
        let p = random_poly(&mut rng);
        let roots = companion_roots(&p);
        // double roots and near-real pairs are not decidable in floating point
        let ambiguous = roots.iter().any(|z| z.im.abs() > 1e-9 && z.im.abs() < 1e-3)
            || roots.iter().enumerate().any(|(i, a)| roots[i + 1..].iter().any(|b| (a - b).norm() < 1e-3));
        if ambiguous {
            continue;
        }
        compared += 1;
        let real: Vec<f64> = roots.iter().filter(|z| z.im.abs() <= 1e-9).map(|z| z.re).collect();
        assert_eq!(real_root_count(&p).unwrap(), real.len(), "{p}");
        let negative: Vec<f64> = real.iter().copied().filter(|&r| r < -1e-9).collect();
        let analysis = isolate_negative_roots(&p, &bclique_core::poly::default_width()).unwrap();
        assert_eq!(analysis.negative_roots().len(), negative.len(), "{p}");
        for iv in analysis.negative_roots() {
            let (lo, hi) = (to_f64(&iv.lo), to_f64(&iv.hi));
            assert!(negative.iter().any(|&r| r >= lo - 1e-7 && r <= hi + 1e-7), "{p}: [{lo}, {hi}]");
        }
        if let Some(&top) = negative.iter().max_by(|a, b| a.total_cmp(b)) {
            assert!((analysis.zeta().approx() - top).abs() < 1e-7);
        }
        if !negative.is_empty() {
            assert_eq!(sturm_count(&p, &int(-1000), &int(0)).ok(), Some(negative.len()));
        }
    }
}

fn symmetric_oracle(g: &Graph) -> Vec<f64> {
    let m = DMatrix::from_fn(g.n(), g.n(), |i, j| if adjacent(g, i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

#[test]
fn jacobi_matches_library_symmetric_solver() {
    let mut graphs: Vec<Graph> = regular_family().into_iter().map(|(_, g)| g).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..60 {
        let n = rng.gen_range(2..=14);
        graphs.push(random_graph(&mut rng, n, 0.4));
    }
    for g in graphs {
        let ours = adjacency_eigen(&g).unwrap().values;
        let theirs = symmetric_oracle(&g);
        for (a, b) in ours.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b} on {:?}", g.edges());
        }
    }
}

#[test]
fn spectral_invariants_on_regular_family() {
    for (name, g) in regular_family() {
        let p = eigenvalues(&g).unwrap();
        assert!(p.max_residual <= 1e-9, "{name}");
        let trace: f64 = p.eigenvalues.iter().sum();
        let squares: f64 = p.eigenvalues.iter().map(|x| x * x).sum();
        assert!(trace.abs() < 1e-9, "{name}");
        assert!((squares - 2.0 * g.edge_count() as f64).abs() < 1e-6, "{name}");
        assert!(p.lambda_certified, "{name}");
        let lambda = to_f64(&p.lambda);
        let true_lambda = symmetric_oracle(&g)[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
        assert!(lambda >= true_lambda - 1e-12 && lambda - true_lambda < 1e-9, "{name}");
    }
}

#[test]
fn subset_polynomial_sections_match_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in oracle_graphs().into_iter().take(120) {
        let b = random_subset(&mut rng, g.n(), g.n() / 2);
        let p = cbpoly_bruteforce(&g, b, CliqueBudget::default()).unwrap();
        let y = BigRational::new(BigInt::from(rng.gen_range(0..5)), BigInt::from(3));
        let x = BigRational::new(BigInt::from(rng.gen_range(-6..6)), BigInt::from(5));
        let mut direct = BigRational::from_integer(0.into());
        for s in subsets(g.n()).filter(|s| is_clique(&g, s)) {
            let j = s.iter().filter(|&&v| b.contains(v)).count();
            direct += num_traits::pow(x.clone(), s.len()) * num_traits::pow(y.clone(), j);
        }
        assert_eq!(p.section_at_y(&y).eval(&x), direct);
    }
}
