use bclique_core::analysis::{check_induced_monotonicity, check_spanning_monotonicity, default_y_grid, zeta};
use bclique_core::clique::{
    cbpoly_bruteforce, cbpoly_edge_recurrence, cbpoly_vertex_recurrence, classical_clique_poly,
    enumerate_cliques, weighted_cbpoly, CliqueBudget,
};
use bclique_core::graph::{is_chordal, parse_graph, Peo};
use bclique_core::poly::{compare_zeta, ZetaOrder};
use bclique_core::rational::{format_rational, int, parse_rational, rat};
use bclique_core::spectral::{eigenvalues, spectral_bounds};
use bclique_core::weighted::{induced_weights, WeightFunction};
use bclique_core::{Graph, Verdict, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(bits, in_b)| {
                let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let edges: Vec<_> = all.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let b: VertexSet = (0..n).filter(|&v| in_b[v]).collect();
                (g, b)
            })
    })
}

fn budget() -> CliqueBudget {
    CliqueBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recurrences_agree_with_enumeration((g, b) in graph_strategy(9)) {
        let brute = cbpoly_bruteforce(&g, b, budget()).unwrap();
        prop_assert_eq!(&cbpoly_vertex_recurrence(&g, b, budget()).unwrap(), &brute);
        prop_assert_eq!(&cbpoly_edge_recurrence(&g, b, budget()).unwrap(), &brute);
    }

    #[test]
    fn coefficient_sum_counts_cliques((g, b) in graph_strategy(9)) {
        let p = cbpoly_bruteforce(&g, b, budget()).unwrap();
        let count = enumerate_cliques(&g, budget()).unwrap().len();
        prop_assert_eq!(p.coefficient_sum(), BigInt::from(count));
    }

    #[test]
    fn y_one_section_is_classical((g, b) in graph_strategy(9)) {
        let p = cbpoly_bruteforce(&g, b, budget()).unwrap();
        let section = p.section_at_y(&int(1));
        let classical = classical_clique_poly(&g);
        prop_assert_eq!(section.coeffs().len(), classical.len());
        for (a, c) in section.coeffs().iter().zip(&classical) {
            prop_assert_eq!(a, &BigRational::from_integer(c.clone()));
        }
    }

    #[test]
    fn diagonal_is_clique_polynomial_of_b((g, b) in graph_strategy(9)) {
        let p = cbpoly_bruteforce(&g, b, budget()).unwrap();
        let (sub, _) = g.induced_subgraph(b);
        let mut expected = if b.is_empty() { vec![BigInt::from(1)] } else { classical_clique_poly(&sub) };
        let mut diag = p.diagonal();
        while diag.len() > 1 && diag.last() == Some(&BigInt::from(0)) { diag.pop(); }
        while expected.len() > 1 && expected.last() == Some(&BigInt::from(0)) { expected.pop(); }
        prop_assert_eq!(diag, expected);
    }

    #[test]
    fn unit_weights_change_nothing((g, b) in graph_strategy(8)) {
        let w = WeightFunction::uniform(b, 1);
        prop_assert_eq!(weighted_cbpoly(&g, b, &w, budget()).unwrap(), cbpoly_bruteforce(&g, b, budget()).unwrap());
    }

    #[test]
    fn weights_are_invisible_at_y_one((g, b) in graph_strategy(8), seed in 1u64..5) {
        let w = WeightFunction::uniform(b, seed);
        let p = weighted_cbpoly(&g, b, &w, budget()).unwrap();
        let q = cbpoly_bruteforce(&g, b, budget()).unwrap();
        prop_assert_eq!(p.section_at_y(&int(1)), q.section_at_y(&int(1)));
    }

    #[test]
    fn chordal_graphs_verify_their_ordering((g, _b) in graph_strategy(9)) {
        if let Some(peo) = is_chordal(&g) {
            prop_assert!(Peo::new(&g, peo.order().to_vec()).is_ok());
        }
    }

    #[test]
    fn zeta_is_a_negative_root_or_absent((g, b) in graph_strategy(8), k in 0usize..5) {
        let y = default_y_grid()[k].clone();
        let an = zeta(&g, b, &y).unwrap();
        if let Some(iv) = an.zeta().interval() {
            prop_assert!(iv.hi <= int(0));
            prop_assert!(an.sign_at(&iv.lo) * an.sign_at(&iv.hi) < 0);
            prop_assert!(iv.width() <= bclique_core::poly::default_width());
        }
    }

    #[test]
    fn vertex_deletion_never_certifies_a_violation((g, b) in graph_strategy(7), pick in 0usize..7) {
        let v = pick % g.n();
        let r = check_induced_monotonicity(&g, b, Some(v), &default_y_grid()).unwrap();
        prop_assert_ne!(r.verdict, Verdict::Violated);
    }

    #[test]
    fn edge_deletion_never_certifies_a_violation((g, b) in graph_strategy(7), pick in 0usize..32) {
        let edges = g.edges();
        if !edges.is_empty() {
            let e = edges[pick % edges.len()];
            let r = check_spanning_monotonicity(&g, b, e, &default_y_grid()).unwrap();
            prop_assert_ne!(r.verdict, Verdict::Violated);
        }
    }

    #[test]
    fn compare_zeta_is_antisymmetric((g, b) in graph_strategy(6), (h, c) in graph_strategy(6)) {
        let y = rat(1, 2);
        let a = zeta(&g, b, &y).unwrap();
        let z = zeta(&h, c, &y).unwrap();
        prop_assert_eq!(compare_zeta(&a, &z), compare_zeta(&z, &a).reversed());
        prop_assert_eq!(compare_zeta(&a, &a), ZetaOrder::Equal);
    }

    #[test]
    fn induced_weights_conserve_total((g, b) in graph_strategy(8), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = bclique_core::corpus::random_surjection(&mut rng, &g);
        let w = WeightFunction::uniform(b, 2);
        let (b_h, w_h) = induced_weights(&f, b, &w).unwrap();
        prop_assert_eq!(w_h.total(), w.total());
        prop_assert_eq!(b_h, f.image_set(b));
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn graph_files_round_trip((g, b) in graph_strategy(9)) {
        let mut text = format!("n {}\n", g.n());
        for (u, v) in g.edges() {
            text.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        if !b.is_empty() {
            text.push('b');
            for v in b.iter() {
                text.push_str(&format!(" {}", v + 1));
            }
            text.push('\n');
        }
        let f = parse_graph(&text).unwrap();
        prop_assert_eq!(f.graph, g);
        prop_assert_eq!(f.b, b);
    }
}

#[test]
fn common_neighborhood_maxima_never_exceed_n_minus_j() {
    for (name, g) in bclique_core::corpus::regular_family() {
        let b: VertexSet = (0..g.n().min(10)).collect();
        let p = eigenvalues(&g).unwrap();
        let bounds = spectral_bounds(&g, b, &p).unwrap();
        for (&j, &m) in &bounds.mj_exact {
            assert!(m <= g.n() - j, "{name} j={j}");
            assert!(BigRational::from_integer(m.into()) <= bounds.mj_bound[&j] || j >= g.n(), "{name} j={j}");
        }
    }
}
