//! Largest negative roots of y-sections, deletion monotonicity, and the
//! independence and girth bounds at `y = 1`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::clique::{cbpoly_bruteforce, CliqueBudget};
use crate::error::{Error, Result};
use crate::graph::{b_girth, b_independence, Graph, VertexSet};
use crate::poly::{
    compare_root_with, compare_zeta, default_width, isolate_negative_roots, BivariatePoly,
    RootAnalysis, Zeta, ZetaOrder,
};
use crate::rational::{format_rational, int, parse_rational, pow2_neg, rat};
use crate::report::{CheckReport, GraphWitness, Verdict};

pub const INDUCED_MONOTONICITY: &str = "induced-subgraph-monotonicity";
pub const SPANNING_MONOTONICITY: &str = "spanning-subgraph-monotonicity";
pub const INDEPENDENCE_BOUND: &str = "b-independence-bound";
pub const GIRTH_BOUND: &str = "b-girth-bound";

const NEG_INFINITY_NOTE: &str =
    "a side without negative roots is ordered below every finite root";
const OUTSIDE_UNIT_NOTE: &str = "grid includes y outside [0, 1], where the claim is not asserted";
const INDEPENDENCE_FOOTER: &str = "the usual derivation writes the clique polynomial of an independent \
     set of size alpha as (1+x)^alpha; it is 1 + alpha x, and the inequality checked here is the one \
     consistent with 1 + alpha x";

/// `{0, 1/4, 1/2, 3/4, 1}`
pub fn default_y_grid() -> Vec<BigRational> {
    vec![int(0), rat(1, 4), rat(1, 2), rat(3, 4), int(1)]
}

/// Isolation width used inside checkers; comparisons refine on demand.
pub(crate) fn checker_width() -> BigRational {
    pow2_neg(12)
}

/// `zeta_G(B; y)` isolated to the default width.
pub fn zeta(g: &Graph, b: VertexSet, y: &BigRational) -> Result<RootAnalysis> {
    let p = cbpoly_bruteforce(g, b, CliqueBudget::default())?;
    zeta_of(&p, y, &default_width())
}

/// Largest negative root of the section of `p` at `y >= 0`.
pub fn zeta_of(p: &BivariatePoly, y: &BigRational, width: &BigRational) -> Result<RootAnalysis> {
    if y.is_negative() {
        return Err(Error::OutOfRange(format!(
            "y = {} must be nonnegative",
            format_rational(y)
        )));
    }
    isolate_negative_roots(&p.section_at_y(y), width)
}

fn analyses(p: &BivariatePoly, ys: &[BigRational]) -> Result<Vec<RootAnalysis>> {
    ys.iter().map(|y| zeta_of(p, y, &checker_width())).collect()
}

/// Which removal produced the subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Removal {
    None,
    Vertex(usize),
    Edge(usize, usize),
}

impl Removal {
    fn to_value(self, g: &Graph) -> Value {
        match self {
            Removal::None => Value::Null,
            Removal::Vertex(v) => json!({"vertex": v + 1, "label": g.label(v)}),
            Removal::Edge(u, v) => json!({"edge": [u + 1, v + 1], "labels": [g.label(u), g.label(v)]}),
        }
    }

    fn from_value(v: &Value) -> Result<Self> {
        let bad = || Error::OutOfRange(format!("malformed removal {v}"));
        if v.is_null() {
            return Ok(Removal::None);
        }
        if let Some(x) = v.get("vertex") {
            let x = x.as_u64().ok_or_else(bad)? as usize;
            return Ok(Removal::Vertex(x.checked_sub(1).ok_or_else(bad)?));
        }
        let e = v.get("edge").and_then(Value::as_array).ok_or_else(bad)?;
        let end = |k: usize| -> Result<usize> {
            let x = e.get(k).and_then(Value::as_u64).ok_or_else(bad)? as usize;
            x.checked_sub(1).ok_or_else(bad)
        };
        Ok(Removal::Edge(end(0)?, end(1)?))
    }

    /// `(H, B_H)`; a removed vertex of `B` leaves `B` with it.
    fn apply(self, g: &Graph, b: VertexSet) -> Result<(Graph, VertexSet)> {
        match self {
            Removal::None => Ok((g.clone(), b)),
            Removal::Vertex(v) => {
                if v >= g.n() {
                    return Err(Error::VertexOutOfRange(v));
                }
                let (h, map) = g.without_vertex(v);
                Ok((h, Graph::restrict_set(&map, b.without(v))))
            }
            Removal::Edge(u, v) => Ok((g.without_edge(u, v)?, b)),
        }
    }

    fn claim(self) -> (&'static str, ZetaOrder) {
        match self {
            Removal::Edge(..) => (SPANNING_MONOTONICITY, ZetaOrder::Less),
            _ => (INDUCED_MONOTONICITY, ZetaOrder::Greater),
        }
    }
}

/// Compares `zeta_H` against `zeta_G` at every `y`. A vertex removal
/// asserts `zeta_H <= zeta_G`, an edge removal `zeta_G <= zeta_H`.
fn monotonicity_report(
    g: &Graph,
    b: VertexSet,
    removal: Removal,
    ys: &[BigRational],
    full: &[RootAnalysis],
    sub: &[RootAnalysis],
) -> CheckReport {
    let (claim, bad) = removal.claim();
    let removed = removal.to_value(g);
    let mut rows = Vec::new();
    let mut violation = None;
    let mut unresolved = 0;
    let mut saw_neg_infinity = false;
    for (k, y) in ys.iter().enumerate() {
        let order = compare_zeta(&sub[k], &full[k]);
        let (zg, zh) = (full[k].zeta(), sub[k].zeta());
        saw_neg_infinity |= zg == Zeta::NegInfinity || zh == Zeta::NegInfinity;
        if order == bad && violation.is_none() {
            violation = Some(k);
        }
        if order == ZetaOrder::Unresolved {
            unresolved += 1;
        }
        rows.push(json!({
            "y": format_rational(y),
            "subgraph_vs_graph": order,
            "zeta_graph": zg,
            "zeta_subgraph": zh,
        }));
    }
    let details = json!({"removed": removed, "rows": rows});
    let mut report = match violation {
        Some(k) => CheckReport::violated(
            claim,
            json!({
                "graph": GraphWitness::new(g, b),
                "removed": removed,
                "y": format_rational(&ys[k]),
                "zeta_graph": full[k].zeta(),
                "zeta_subgraph": sub[k].zeta(),
            }),
        ),
        None if unresolved > 0 => CheckReport::unresolved(
            claim,
            format!("{unresolved} comparison(s) unresolved after the refinement budget"),
        ),
        None => CheckReport::holds(claim),
    }
    .with_details(details);
    if saw_neg_infinity {
        report = report.note(NEG_INFINITY_NOTE);
    }
    if ys.iter().any(|y| y > &BigRational::one()) {
        report = report.note(OUTSIDE_UNIT_NOTE);
    }
    report
}

fn check_removal(g: &Graph, b: VertexSet, removal: Removal, ys: &[BigRational]) -> Result<CheckReport> {
    g.check_set(b)?;
    let (h, bh) = removal.apply(g, b)?;
    let budget = CliqueBudget::default();
    let full = analyses(&cbpoly_bruteforce(g, b, budget)?, ys)?;
    let sub = analyses(&cbpoly_bruteforce(&h, bh, budget)?, ys)?;
    Ok(monotonicity_report(g, b, removal, ys, &full, &sub))
}

/// `zeta_{G-v}(B; y) <= zeta_G(B; y)` on the grid; `None` compares `G`
/// with itself.
pub fn check_induced_monotonicity(
    g: &Graph,
    b: VertexSet,
    v: Option<usize>,
    ys: &[BigRational],
) -> Result<CheckReport> {
    check_removal(g, b, v.map_or(Removal::None, Removal::Vertex), ys)
}

/// `zeta_G(B; y) <= zeta_{G-uv}(B; y)` on the grid.
pub fn check_spanning_monotonicity(
    g: &Graph,
    b: VertexSet,
    edge: (usize, usize),
    ys: &[BigRational],
) -> Result<CheckReport> {
    check_removal(g, b, Removal::Edge(edge.0, edge.1), ys)
}

/// Deletes the vertices of `order` one at a time, checking each step.
/// Each section is isolated once and shared by neighboring steps.
pub fn vertex_deletion_suite(
    g: &Graph,
    b: VertexSet,
    order: &[usize],
    ys: &[BigRational],
) -> Result<Vec<CheckReport>> {
    g.check_set(b)?;
    let budget = CliqueBudget::default();
    let mut remaining = g.vertices();
    let (mut cur, mut map) = g.induced_subgraph(remaining);
    let mut cur_b = b;
    let mut cur_an = analyses(&cbpoly_bruteforce(&cur, cur_b, budget)?, ys)?;
    let mut reports = Vec::with_capacity(order.len());
    for &v in order {
        let pos = map
            .iter()
            .position(|&old| old == v)
            .ok_or(Error::VertexOutOfRange(v))?;
        remaining = remaining.without(v);
        let (next, next_map) = g.induced_subgraph(remaining);
        let next_b = Graph::restrict_set(&next_map, b);
        let next_an = analyses(&cbpoly_bruteforce(&next, next_b, budget)?, ys)?;
        reports.push(monotonicity_report(&cur, cur_b, Removal::Vertex(pos), ys, &cur_an, &next_an));
        (cur, map, cur_b, cur_an) = (next, next_map, next_b, next_an);
    }
    Ok(reports)
}

/// Deletes the edges of `order` one at a time, checking each step.
pub fn edge_deletion_suite(
    g: &Graph,
    b: VertexSet,
    order: &[(usize, usize)],
    ys: &[BigRational],
) -> Result<Vec<CheckReport>> {
    g.check_set(b)?;
    let budget = CliqueBudget::default();
    let mut cur = g.clone();
    let mut cur_an = analyses(&cbpoly_bruteforce(&cur, b, budget)?, ys)?;
    let mut reports = Vec::with_capacity(order.len());
    for &(u, v) in order {
        let next = cur.without_edge(u, v)?;
        let next_an = analyses(&cbpoly_bruteforce(&next, b, budget)?, ys)?;
        reports.push(monotonicity_report(&cur, b, Removal::Edge(u, v), ys, &cur_an, &next_an));
        (cur, cur_an) = (next, next_an);
    }
    Ok(reports)
}

fn witness_graph(w: &Value) -> Result<(Graph, VertexSet)> {
    let gw: GraphWitness = serde_json::from_value(w["graph"].clone())
        .map_err(|e| Error::OutOfRange(format!("malformed witness graph: {e}")))?;
    gw.to_graph()
}

fn witness_rational(w: &Value, key: &str) -> Result<BigRational> {
    let s = w[key]
        .as_str()
        .ok_or_else(|| Error::OutOfRange(format!("witness lacks {key}")))?;
    parse_rational(s)
}

/// Recomputes a monotonicity violation from its witness alone; `true`
/// when the certified strict inequality reappears.
pub fn replay_monotonicity(report: &CheckReport) -> Result<bool> {
    let w = report
        .witness
        .as_ref()
        .ok_or_else(|| Error::OutOfRange("report has no witness".into()))?;
    let (g, b) = witness_graph(w)?;
    let removal = Removal::from_value(&w["removed"])?;
    let y = witness_rational(w, "y")?;
    let again = check_removal(&g, b, removal, &[y])?;
    Ok(again.claim == report.claim && again.verdict == Verdict::Violated)
}

/// `alpha_B(G) <= -1/zeta_G(B; 1)`, compared exactly as
/// `zeta >= -1/alpha`.
pub fn check_b_independence_bound(g: &Graph, b: VertexSet) -> Result<CheckReport> {
    g.check_set(b)?;
    let alpha = b_independence(g, b);
    if alpha == 0 {
        return Ok(CheckReport::holds(INDEPENDENCE_BOUND)
            .with_details(json!({"alpha_b": 0}))
            .note("B is empty, so alpha_B = 0")
            .note(INDEPENDENCE_FOOTER));
    }
    let an = zeta(g, b, &BigRational::one())?;
    let threshold = -BigRational::new(BigInt::one(), BigInt::from(alpha));
    let Some(order) = compare_root_with(&an, &threshold) else {
        return Ok(CheckReport::not_applicable(
            INDEPENDENCE_BOUND,
            "the section at y = 1 has no negative root",
        )
        .with_details(json!({"alpha_b": alpha, "zeta": Zeta::NegInfinity}))
        .note(INDEPENDENCE_FOOTER));
    };
    let details = json!({
        "alpha_b": alpha,
        "zeta": an.zeta(),
        "threshold": format_rational(&threshold),
        "equality": order == Ordering::Equal,
    });
    let report = if order == Ordering::Less {
        CheckReport::violated(
            INDEPENDENCE_BOUND,
            json!({"graph": GraphWitness::new(g, b), "alpha_b": alpha, "zeta": an.zeta()}),
        )
    } else {
        CheckReport::holds(INDEPENDENCE_BOUND)
    };
    Ok(report.with_details(details).note(INDEPENDENCE_FOOTER))
}

/// Exact `floor(-2 / zeta)` for a finite `zeta < 0`.
pub fn floor_neg_two_over_zeta(an: &RootAnalysis) -> Option<BigInt> {
    let iv = an.zeta().interval()?.clone();
    let two = int(2);
    // -2/zeta >= m  <=>  zeta >= -2/m   (m > 0)
    let at_least = |m: &BigInt| -> bool {
        if !m.is_positive() {
            return true;
        }
        let q = -&two / BigRational::from_integer(m.clone());
        compare_root_with(an, &q) != Some(Ordering::Less)
    };
    let guess = (-&two / iv.midpoint()).floor().to_integer();
    let mut m = guess.max(BigInt::zero());
    while !at_least(&m) {
        m -= 1;
    }
    while at_least(&(&m + 1)) {
        m += 1;
    }
    Some(m)
}

/// `g_B(G) <= 2 + floor(-2 / zeta_G(B; 1))`.
pub fn check_b_girth_bound(g: &Graph, b: VertexSet) -> Result<CheckReport> {
    g.check_set(b)?;
    let Some(girth) = b_girth(g, b) else {
        return Ok(CheckReport::not_applicable(GIRTH_BOUND, "G[B] is acyclic")
            .note(INDEPENDENCE_FOOTER));
    };
    let an = zeta(g, b, &BigRational::one())?;
    let Some(floor) = floor_neg_two_over_zeta(&an) else {
        return Ok(CheckReport::not_applicable(
            GIRTH_BOUND,
            "the section at y = 1 has no negative root",
        )
        .with_details(json!({"girth_b": girth, "zeta": Zeta::NegInfinity}))
        .note(INDEPENDENCE_FOOTER));
    };
    let bound: BigInt = &floor + 2;
    let details = json!({
        "girth_b": girth,
        "zeta": an.zeta(),
        "floor_neg_two_over_zeta": floor.to_string(),
        "bound": bound.to_string(),
    });
    let report = if BigInt::from(girth) > bound {
        CheckReport::violated(
            GIRTH_BOUND,
            json!({"graph": GraphWitness::new(g, b), "girth_b": girth, "zeta": an.zeta()}),
        )
    } else {
        CheckReport::holds(GIRTH_BOUND)
    };
    Ok(report.with_details(details).note(INDEPENDENCE_FOOTER))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn contains(an: &RootAnalysis, q: &BigRational) -> bool {
        let iv = an.zeta().interval().cloned().unwrap();
        &iv.lo < q && q < &iv.hi
    }

    #[test]
    fn zeta_examples() {
        let e3 = families::edgeless(3);
        assert!(contains(&zeta(&e3, VertexSet::EMPTY, &int(1)).unwrap(), &rat(-1, 3)));
        let c4 = families::cycle(4);
        assert!(contains(&zeta(&c4, VertexSet::full(4), &int(1)).unwrap(), &rat(-1, 2)));
        let k2 = families::complete(2);
        assert!(contains(&zeta(&k2, VertexSet::EMPTY, &rat(7, 3)).unwrap(), &int(-1)));
        assert!(zeta(&k2, VertexSet::EMPTY, &int(-1)).is_err());
    }

    #[test]
    fn induced_examples() {
        let e3 = families::edgeless(3);
        let r = check_induced_monotonicity(&e3, VertexSet::EMPTY, Some(0), &default_y_grid()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let r = check_induced_monotonicity(&e3, VertexSet::EMPTY, None, &default_y_grid()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let rows = r.details.unwrap()["rows"].as_array().unwrap().clone();
        assert!(rows.iter().all(|row| row["subgraph_vs_graph"] == "equal"));
    }

    #[test]
    fn spanning_examples() {
        let k2 = families::complete(2);
        let r = check_spanning_monotonicity(&k2, VertexSet::EMPTY, (0, 1), &[int(1)]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let rows = r.details.unwrap()["rows"].as_array().unwrap().clone();
        assert_eq!(rows[0]["subgraph_vs_graph"], "greater");
    }

    #[test]
    fn suites_walk_the_whole_chain() {
        let g = families::petersen();
        let b = VertexSet::from_iter([0, 1, 2, 3, 4]);
        let order: Vec<usize> = (0..10).rev().collect();
        let reports = vertex_deletion_suite(&g, b, &order[..9], &default_y_grid()).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Holds));
        let edges = g.edges();
        let reports = edge_deletion_suite(&g, b, &edges, &default_y_grid()).unwrap();
        assert_eq!(reports.len(), 15);
        assert!(reports.iter().all(|r| r.verdict == Verdict::Holds));
    }

    #[test]
    fn independence_bound_equality_on_edgeless() {
        let g = families::edgeless(4);
        let r = check_b_independence_bound(&g, VertexSet::full(4)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.details.unwrap()["equality"], true);
        let r = check_b_independence_bound(&g, VertexSet::EMPTY).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn girth_bound_examples() {
        let c4 = families::cycle(4);
        let r = check_b_girth_bound(&c4, VertexSet::full(4)).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.details.unwrap()["bound"], "6");
        let p3 = families::path(3);
        let r = check_b_girth_bound(&p3, VertexSet::full(3)).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn floor_is_exact_at_rational_roots() {
        // zeta = -1/2 exactly: -2/zeta = 4
        let an = zeta_of(&BivariatePoly::from_terms([(0, 0, 1), (1, 0, 4), (2, 0, 4)]), &int(1), &pow2_neg(3)).unwrap();
        assert_eq!(floor_neg_two_over_zeta(&an), Some(BigInt::from(4)));
    }
}
