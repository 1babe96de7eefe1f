//! Vertex weights on `B`, graph homomorphisms, and the weighted and
//! homomorphism monotonicity checkers.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::analysis::checker_width;
use crate::clique::{for_each_clique, weighted_cbpoly, CliqueBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{compare_zeta, isolate_negative_roots, BivariatePoly, ZetaOrder};
use crate::rational::{format_rational, int, parse_rational, rat};
use crate::report::{CheckReport, GraphWitness, Verdict};

pub const WEIGHT_MONOTONICITY: &str = "weight-monotonicity";
pub const WEIGHTED_ROOT_MONOTONICITY: &str = "weighted-root-monotonicity";
pub const HOMOMORPHISM_VALIDITY: &str = "homomorphism-validity";
pub const CLIQUE_LIFT: &str = "clique-lift";
pub const HOMOMORPHISM_MONOTONICITY: &str = "homomorphism-monotonicity";

/// Positive integer weights on exactly the vertices of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightFunction {
    weights: BTreeMap<usize, u64>,
}

impl WeightFunction {
    pub fn new(domain: VertexSet, weights: BTreeMap<usize, u64>) -> Result<Self> {
        let keys: VertexSet = weights.keys().copied().collect();
        if keys != domain || weights.len() != domain.len() {
            return Err(Error::InvalidWeight(format!(
                "weights must be given exactly on B = {:?}",
                domain.iter().map(|v| v + 1).collect::<Vec<_>>()
            )));
        }
        if let Some((v, _)) = weights.iter().find(|(_, &w)| w == 0) {
            return Err(Error::InvalidWeight(format!("vertex {} has weight 0", v + 1)));
        }
        Ok(WeightFunction { weights })
    }

    /// Constant weight `w >= 1` on `domain`.
    pub fn uniform(domain: VertexSet, w: u64) -> Self {
        assert!(w >= 1, "weights are positive");
        WeightFunction {
            weights: domain.iter().map(|v| (v, w)).collect(),
        }
    }

    pub fn domain(&self) -> VertexSet {
        self.weights.keys().copied().collect()
    }

    pub fn get(&self, v: usize) -> Option<u64> {
        self.weights.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.weights.iter().map(|(&v, &w)| (v, w))
    }

    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    /// `W_B(K)`: total weight of the members of `k` in the domain.
    pub fn weight_of(&self, k: VertexSet) -> u64 {
        k.iter().filter_map(|v| self.get(v)).sum()
    }

    /// First vertex where `self` exceeds `other`, if the domains agree.
    pub fn first_excess_over(&self, other: &WeightFunction) -> Result<Option<usize>> {
        if self.domain() != other.domain() {
            return Err(Error::InvalidWeight("weight functions have different domains".into()));
        }
        Ok(self.iter().find(|&(v, w)| w > other.get(v).unwrap_or(0)).map(|(v, _)| v))
    }
}

impl Serialize for WeightFunction {
    /// `[[vertex, weight], ...]` with 1-based vertex positions.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[u64; 2]> = self.iter().map(|(v, w)| [v as u64 + 1, w]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[u64; 2]>::deserialize(d)?;
        let mut weights = BTreeMap::new();
        for [v, w] in pairs {
            let v = (v as usize)
                .checked_sub(1)
                .ok_or_else(|| serde::de::Error::custom("vertex positions are 1-based"))?;
            weights.insert(v, w);
        }
        let domain = weights.keys().copied().collect();
        WeightFunction::new(domain, weights).map_err(serde::de::Error::custom)
    }
}

/// A total vertex map `V(G) -> V(H)`. Edge preservation and surjectivity
/// are checked by [`validate_homomorphism`], not on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.n() {
            return Err(Error::InvalidHomomorphism(format!(
                "map has {} entries for {} source vertices",
                map.len(),
                source.n()
            )));
        }
        if let Some(v) = map.iter().position(|&u| u >= target.n()) {
            return Err(Error::InvalidHomomorphism(format!(
                "vertex {} maps outside the target",
                source.label(v)
            )));
        }
        Ok(Homomorphism { source, target, map })
    }

    /// Builds the map from `(source label, target label)` pairs, one per
    /// source vertex.
    pub fn from_label_pairs(source: Graph, target: Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; source.n()];
        for &(a, b) in pairs {
            let v = source
                .index_of_label(a)
                .ok_or_else(|| Error::InvalidHomomorphism(format!("no source vertex {a}")))?;
            let u = target
                .index_of_label(b)
                .ok_or_else(|| Error::InvalidHomomorphism(format!("no target vertex {b}")))?;
            if map[v].replace(u).is_some() {
                return Err(Error::InvalidHomomorphism(format!("vertex {a} is mapped twice")));
            }
        }
        let map = map
            .iter()
            .enumerate()
            .map(|(v, u)| {
                u.ok_or_else(|| {
                    Error::InvalidHomomorphism(format!("vertex {} is not mapped", source.label(v)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::new(source, target, map)
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.map[v]).collect()
    }

    /// `f^-1(k)` for a set of target vertices.
    pub fn preimage(&self, k: VertexSet) -> VertexSet {
        (0..self.source.n()).filter(|&v| k.contains(self.map[v])).collect()
    }

    pub fn is_injective(&self) -> bool {
        self.image_set(self.source.vertices()).len() == self.source.n()
    }

    fn collapsed_or_broken_edge(&self) -> Option<(usize, usize)> {
        self.source
            .edges()
            .into_iter()
            .find(|&(a, b)| !self.target.adjacent(self.map[a], self.map[b]))
    }

    fn uncovered(&self) -> Option<usize> {
        self.target
            .vertices()
            .difference(self.image_set(self.source.vertices()))
            .first()
    }

    pub fn is_homomorphism(&self) -> bool {
        self.collapsed_or_broken_edge().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        self.uncovered().is_none()
    }

    /// Serializable form with 1-based positions.
    pub fn to_value(&self, b: VertexSet) -> Value {
        json!({
            "source": GraphWitness::new(&self.source, b),
            "target": GraphWitness::new(&self.target, VertexSet::EMPTY),
            "map": self.map.iter().map(|u| u + 1).collect::<Vec<_>>(),
        })
    }

    /// Inverse of [`Homomorphism::to_value`]; also returns the source set.
    pub fn from_value(v: &Value) -> Result<(Self, VertexSet)> {
        let bad = |e: String| Error::InvalidHomomorphism(format!("malformed witness: {e}"));
        let src: GraphWitness =
            serde_json::from_value(v["source"].clone()).map_err(|e| bad(e.to_string()))?;
        let tgt: GraphWitness =
            serde_json::from_value(v["target"].clone()).map_err(|e| bad(e.to_string()))?;
        let map: Vec<usize> =
            serde_json::from_value(v["map"].clone()).map_err(|e| bad(e.to_string()))?;
        let (g, b) = src.to_graph()?;
        let (h, _) = tgt.to_graph()?;
        let map = map
            .into_iter()
            .map(|u| u.checked_sub(1).ok_or_else(|| bad("positions are 1-based".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok((Homomorphism::new(g, h, map)?, b))
    }
}

/// Edge preservation, then surjectivity.
pub fn validate_homomorphism(f: &Homomorphism) -> CheckReport {
    let (g, h) = (&f.source, &f.target);
    let details = json!({
        "injective": f.is_injective(),
        "surjective": f.is_surjective(),
        "edge_preserving": f.is_homomorphism(),
    });
    if let Some((a, b)) = f.collapsed_or_broken_edge() {
        let (fa, fb) = (f.map[a], f.map[b]);
        let reason = if fa == fb { "collapsed" } else { "not an edge of the target" };
        return CheckReport::violated(
            HOMOMORPHISM_VALIDITY,
            json!({
                "edge": [g.label(a), g.label(b)],
                "image": [h.label(fa), h.label(fb)],
                "reason": reason,
            }),
        )
        .with_details(details);
    }
    if let Some(u) = f.uncovered() {
        return CheckReport::violated(
            HOMOMORPHISM_VALIDITY,
            json!({"uncovered_target_vertex": h.label(u)}),
        )
        .with_details(details);
    }
    CheckReport::holds(HOMOMORPHISM_VALIDITY).with_details(details)
}

/// `B_H = f(B_G)` and `w_H(u) = sum of w_G over f^-1(u) ∩ B_G`.
pub fn induced_weights(
    f: &Homomorphism,
    b_g: VertexSet,
    w_g: &WeightFunction,
) -> Result<(VertexSet, WeightFunction)> {
    f.source.check_set(b_g)?;
    if w_g.domain() != b_g {
        return Err(Error::InvalidWeight("source weights must be defined exactly on B".into()));
    }
    let mut weights: BTreeMap<usize, u64> = BTreeMap::new();
    for (v, w) in w_g.iter() {
        *weights.entry(f.map[v]).or_default() += w;
    }
    let b_h = f.image_set(b_g);
    Ok((b_h, WeightFunction::new(b_h, weights)?))
}

/// Whether the full preimage of every clique of `H` is a clique of `G`.
pub fn check_clique_lift(f: &Homomorphism) -> Result<CheckReport> {
    if !f.is_homomorphism() {
        return Ok(CheckReport::not_applicable(CLIQUE_LIFT, "the map is not edge-preserving"));
    }
    let (g, h) = (&f.source, &f.target);
    let mut checked = 0u64;
    let mut failing = 0u64;
    let mut first: Option<(VertexSet, usize, usize)> = None;
    for_each_clique(h, CliqueBudget::default(), |k| {
        checked += 1;
        let pre = f.preimage(k);
        if g.is_clique(pre) {
            return;
        }
        failing += 1;
        if first.is_none() {
            let pair = pre
                .iter()
                .find_map(|a| pre.after(a).difference(g.neighbors(a)).first().map(|b| (a, b)))
                .expect("a non-clique has a non-adjacent pair");
            first = Some((k, pair.0, pair.1));
        }
    })?;
    let details = json!({
        "target_cliques_checked": checked,
        "failing_cliques": failing,
        "injective": f.is_injective(),
    });
    Ok(match first {
        None => CheckReport::holds(CLIQUE_LIFT).with_details(details),
        Some((k, a, b)) => CheckReport::violated(
            CLIQUE_LIFT,
            json!({
                "homomorphism": f.to_value(VertexSet::EMPTY),
                "target_clique": h.set_labels(k),
                "non_adjacent_pair": [g.label(a), g.label(b)],
                "non_adjacent_positions": [a + 1, b + 1],
            }),
        )
        .with_details(details),
    })
}

/// Grid point `(x, y)` with exact coordinates.
pub type GridPoint = (BigRational, BigRational);

fn product(xs: &[BigRational], ys: &[BigRational]) -> Vec<GridPoint> {
    xs.iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

/// `x in {0, -1/4, -1/2, -1, -2}`, `y in {1, 2}`.
pub fn weight_monotonicity_stated_grid() -> Vec<GridPoint> {
    product(&[int(0), rat(-1, 4), rat(-1, 2), int(-1), int(-2)], &[int(1), int(2)])
}

/// `x in {0, 1/4, 1/2, 1, 2}`, `y in {1, 2}`.
pub fn weight_monotonicity_companion_grid() -> Vec<GridPoint> {
    product(&[int(0), rat(1, 4), rat(1, 2), int(1), int(2)], &[int(1), int(2)])
}

/// `{0, 1/4, 1/2, 1, 2}^2`.
pub fn hom_monotonicity_grid() -> Vec<GridPoint> {
    let axis = [int(0), rat(1, 4), rat(1, 2), int(1), int(2)];
    product(&axis, &axis)
}

fn point_value(x: &BigRational, y: &BigRational) -> Value {
    json!({"x": format_rational(x), "y": format_rational(y)})
}

struct PointwiseSweep {
    rows: Vec<Value>,
    first_violation: Option<(GridPoint, BigRational, BigRational)>,
    violations: usize,
}

/// Evaluates `smaller <= larger` exactly at every point.
fn sweep(smaller: &BivariatePoly, larger: &BivariatePoly, points: &[GridPoint]) -> PointwiseSweep {
    let mut out = PointwiseSweep {
        rows: Vec::new(),
        first_violation: None,
        violations: 0,
    };
    for (x, y) in points {
        let lhs = smaller.evaluate_exact(x, y);
        let rhs = larger.evaluate_exact(x, y);
        let holds = lhs <= rhs;
        out.rows.push(json!({
            "x": format_rational(x),
            "y": format_rational(y),
            "lhs": format_rational(&lhs),
            "rhs": format_rational(&rhs),
            "holds": holds,
        }));
        if !holds {
            out.violations += 1;
            if out.first_violation.is_none() {
                out.first_violation = Some(((x.clone(), y.clone()), lhs, rhs));
            }
        }
    }
    out
}

/// `C_{B,w1}(G; x, y) <= C_{B,w2}(G; x, y)` for `w1 <= w2`. The verdict
/// covers the stated regime `x <= 0, y >= 1`; points with `x > 0` form a
/// companion sweep reported separately in the details.
pub fn check_weight_monotonicity(
    g: &Graph,
    b: VertexSet,
    w1: &WeightFunction,
    w2: &WeightFunction,
    points: &[GridPoint],
) -> Result<CheckReport> {
    g.check_set(b)?;
    if let Some(v) = w1.first_excess_over(w2)? {
        return Ok(CheckReport::not_applicable(
            WEIGHT_MONOTONICITY,
            format!("w1 exceeds w2 at vertex {}", g.label(v)),
        ));
    }
    let budget = CliqueBudget::default();
    let p1 = weighted_cbpoly(g, b, w1, budget)?;
    let p2 = weighted_cbpoly(g, b, w2, budget)?;
    let in_regime = |(x, y): &&GridPoint| !x.is_positive() && y >= &BigRational::one();
    let stated: Vec<GridPoint> = points.iter().filter(in_regime).cloned().collect();
    let companion: Vec<GridPoint> = points.iter().filter(|p| !in_regime(p)).cloned().collect();
    let s = sweep(&p1, &p2, &stated);
    let c = sweep(&p1, &p2, &companion);
    let details = json!({
        "stated_regime": {"rows": s.rows, "violations": s.violations},
        "companion_regime": {"rows": c.rows, "violations": c.violations},
    });
    let report = match s.first_violation {
        Some(((x, y), lhs, rhs)) => CheckReport::violated(
            WEIGHT_MONOTONICITY,
            json!({
                "graph": GraphWitness::new(g, b),
                "w1": w1,
                "w2": w2,
                "point": point_value(&x, &y),
                "lhs": format_rational(&lhs),
                "rhs": format_rational(&rhs),
            }),
        ),
        None if stated.is_empty() => CheckReport::not_applicable(
            WEIGHT_MONOTONICITY,
            "no grid point lies in the stated regime x <= 0, y >= 1",
        ),
        None => CheckReport::holds(WEIGHT_MONOTONICITY),
    };
    Ok(report
        .with_details(details)
        .note("verdict covers x <= 0, y >= 1; the x >= 0 sweep is recorded separately"))
}

/// `zeta_{G,w2}(B; y) >= zeta_{G,w1}(B; y)` for `w1 <= w2`, asserted for
/// `y >= 1`.
pub fn check_weighted_root_monotonicity(
    g: &Graph,
    b: VertexSet,
    w1: &WeightFunction,
    w2: &WeightFunction,
    ys: &[BigRational],
) -> Result<CheckReport> {
    g.check_set(b)?;
    if let Some(v) = w1.first_excess_over(w2)? {
        return Ok(CheckReport::not_applicable(
            WEIGHTED_ROOT_MONOTONICITY,
            format!("w1 exceeds w2 at vertex {}", g.label(v)),
        ));
    }
    let budget = CliqueBudget::default();
    let p1 = weighted_cbpoly(g, b, w1, budget)?;
    let p2 = weighted_cbpoly(g, b, w2, budget)?;
    let mut rows = Vec::new();
    let mut violation = None;
    let mut unresolved = 0;
    for y in ys {
        let a1 = isolate_negative_roots(&p1.section_at_y(y), &checker_width())?;
        let a2 = isolate_negative_roots(&p2.section_at_y(y), &checker_width())?;
        let order = compare_zeta(&a2, &a1);
        let asserted = y >= &BigRational::one();
        rows.push(json!({
            "y": format_rational(y),
            "asserted": asserted,
            "w2_vs_w1": order,
            "zeta_w1": a1.zeta(),
            "zeta_w2": a2.zeta(),
        }));
        if asserted && order == ZetaOrder::Less && violation.is_none() {
            violation = Some((y.clone(), a1.zeta(), a2.zeta()));
        }
        if asserted && order == ZetaOrder::Unresolved {
            unresolved += 1;
        }
    }
    let report = match violation {
        Some((y, z1, z2)) => CheckReport::violated(
            WEIGHTED_ROOT_MONOTONICITY,
            json!({
                "graph": GraphWitness::new(g, b),
                "w1": w1,
                "w2": w2,
                "y": format_rational(&y),
                "zeta_w1": z1,
                "zeta_w2": z2,
            }),
        ),
        None if unresolved > 0 => CheckReport::unresolved(
            WEIGHTED_ROOT_MONOTONICITY,
            format!("{unresolved} comparison(s) unresolved after the refinement budget"),
        ),
        None => CheckReport::holds(WEIGHTED_ROOT_MONOTONICITY),
    };
    Ok(report.with_details(json!({"rows": rows})))
}

/// Pointwise `C_{B_H,w_H}(H; x, y) <= C_{B_G,w_G}(G; x, y)` on the grid
/// (points with a negative coordinate are skipped), then
/// `zeta_{G,w_G}(B_G; y) >= zeta_{H,w_H}(B_H; y)` on `ys`.
pub fn check_hom_monotonicity(
    f: &Homomorphism,
    b_g: VertexSet,
    w_g: &WeightFunction,
    points: &[GridPoint],
    ys: &[BigRational],
) -> Result<CheckReport> {
    if !f.is_homomorphism() || !f.is_surjective() {
        return Ok(CheckReport::not_applicable(
            HOMOMORPHISM_MONOTONICITY,
            "the map is not a surjective homomorphism",
        ));
    }
    let (b_h, w_h) = induced_weights(f, b_g, w_g)?;
    let budget = CliqueBudget::default();
    let p_g = weighted_cbpoly(&f.source, b_g, w_g, budget)?;
    let p_h = weighted_cbpoly(&f.target, b_h, &w_h, budget)?;
    let nonneg: Vec<GridPoint> = points
        .iter()
        .filter(|(x, y)| !x.is_negative() && !y.is_negative())
        .cloned()
        .collect();
    let pointwise = sweep(&p_h, &p_g, &nonneg);

    let mut zeta_rows = Vec::new();
    let mut zeta_violation = None;
    let mut unresolved = 0;
    for y in ys.iter().filter(|y| !y.is_negative()) {
        let ag = isolate_negative_roots(&p_g.section_at_y(y), &checker_width())?;
        let ah = isolate_negative_roots(&p_h.section_at_y(y), &checker_width())?;
        let order = compare_zeta(&ag, &ah);
        zeta_rows.push(json!({
            "y": format_rational(y),
            "source_vs_target": order,
            "zeta_source": ag.zeta(),
            "zeta_target": ah.zeta(),
        }));
        if order == ZetaOrder::Less && zeta_violation.is_none() {
            zeta_violation = Some((y.clone(), ag.zeta(), ah.zeta()));
        }
        if order == ZetaOrder::Unresolved {
            unresolved += 1;
        }
    }

    let details = json!({
        "b_target": f.target.set_labels(b_h),
        "w_target": &w_h,
        "pointwise": {"rows": pointwise.rows, "violations": pointwise.violations},
        "roots": {"rows": zeta_rows},
    });
    let base = json!({"homomorphism": f.to_value(b_g), "w_source": w_g});
    let report = if let Some(((x, y), lhs, rhs)) = pointwise.first_violation {
        let mut w = base;
        w["kind"] = json!("pointwise");
        w["point"] = point_value(&x, &y);
        w["lhs"] = json!(format_rational(&lhs));
        w["rhs"] = json!(format_rational(&rhs));
        CheckReport::violated(HOMOMORPHISM_MONOTONICITY, w)
    } else if let Some((y, zg, zh)) = zeta_violation {
        let mut w = base;
        w["kind"] = json!("roots");
        w["y"] = json!(format_rational(&y));
        w["zeta_source"] = json!(zg);
        w["zeta_target"] = json!(zh);
        CheckReport::violated(HOMOMORPHISM_MONOTONICITY, w)
    } else if unresolved > 0 {
        CheckReport::unresolved(
            HOMOMORPHISM_MONOTONICITY,
            format!("{unresolved} comparison(s) unresolved after the refinement budget"),
        )
    } else {
        CheckReport::holds(HOMOMORPHISM_MONOTONICITY)
    };
    Ok(report.with_details(details))
}

fn witness(report: &CheckReport) -> Result<&Value> {
    report
        .witness
        .as_ref()
        .ok_or_else(|| Error::OutOfRange("report has no witness".into()))
}

fn field<T: serde::de::DeserializeOwned>(w: &Value, key: &str) -> Result<T> {
    serde_json::from_value(w[key].clone())
        .map_err(|e| Error::OutOfRange(format!("witness field {key}: {e}")))
}

fn rational_field(w: &Value, key: &str) -> Result<BigRational> {
    parse_rational(&field::<String>(w, key)?)
}

/// Re-evaluates a violation of any claim in this module from its witness
/// alone; `true` when the violation reproduces exactly.
pub fn replay_weighted(report: &CheckReport) -> Result<bool> {
    let w = witness(report)?;
    match report.claim.as_str() {
        WEIGHT_MONOTONICITY => {
            let gw: GraphWitness = field(w, "graph")?;
            let (g, b) = gw.to_graph()?;
            let (w1, w2): (WeightFunction, WeightFunction) = (field(w, "w1")?, field(w, "w2")?);
            let x = rational_field(&w["point"], "x")?;
            let y = rational_field(&w["point"], "y")?;
            let budget = CliqueBudget::default();
            let lhs = weighted_cbpoly(&g, b, &w1, budget)?.evaluate_exact(&x, &y);
            let rhs = weighted_cbpoly(&g, b, &w2, budget)?.evaluate_exact(&x, &y);
            Ok(lhs > rhs && format_rational(&lhs) == field::<String>(w, "lhs")?)
        }
        WEIGHTED_ROOT_MONOTONICITY => {
            let gw: GraphWitness = field(w, "graph")?;
            let (g, b) = gw.to_graph()?;
            let (w1, w2): (WeightFunction, WeightFunction) = (field(w, "w1")?, field(w, "w2")?);
            let y = rational_field(w, "y")?;
            let again = check_weighted_root_monotonicity(&g, b, &w1, &w2, &[y])?;
            Ok(again.verdict == Verdict::Violated)
        }
        CLIQUE_LIFT => {
            let (f, _) = Homomorphism::from_value(&w["homomorphism"])?;
            let [a, b]: [usize; 2] = field(w, "non_adjacent_positions")?;
            let k: Vec<usize> = field(w, "target_clique")?;
            let k: VertexSet = k
                .iter()
                .map(|&l| f.target.index_of_label(l))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::OutOfRange("unknown target label".into()))?;
            let pre = f.preimage(k);
            Ok(f.target.is_clique(k)
                && pre.contains(a - 1)
                && pre.contains(b - 1)
                && a != b
                && !f.source.adjacent(a - 1, b - 1))
        }
        HOMOMORPHISM_MONOTONICITY => {
            let (f, b_g) = Homomorphism::from_value(&w["homomorphism"])?;
            let w_g: WeightFunction = field(w, "w_source")?;
            let (points, ys) = match field::<String>(w, "kind")?.as_str() {
                "pointwise" => {
                    let x = rational_field(&w["point"], "x")?;
                    let y = rational_field(&w["point"], "y")?;
                    (vec![(x, y)], vec![])
                }
                _ => (vec![], vec![rational_field(w, "y")?]),
            };
            let again = check_hom_monotonicity(&f, b_g, &w_g, &points, &ys)?;
            Ok(again.verdict == Verdict::Violated)
        }
        HOMOMORPHISM_VALIDITY => Ok(true),
        other => Err(Error::OutOfRange(format!("claim {other} is not a weighted claim"))),
    }
}

/// Contents of a homomorphism file: the two graph file paths and the
/// `(source label, target label)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismFile {
    pub source_path: String,
    pub target_path: String,
    pub pairs: Vec<(usize, usize)>,
}

/// Parses `g <file>`, `h <file>` and `m <u> <v>` lines; `#` starts a
/// comment.
pub fn parse_homomorphism_file(text: &str) -> Result<HomomorphismFile> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let (mut g, mut h) = (None, None);
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (toks[0], toks.len()) {
            ("g", 2) | ("h", 2) => {
                let slot = if toks[0] == "g" { &mut g } else { &mut h };
                if slot.replace(toks[1].to_string()).is_some() {
                    return Err(err(line, format!("duplicate `{}` line", toks[0])));
                }
            }
            ("m", 3) => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| err(line, format!("vertex label must be a positive integer, got {t:?}")))
                };
                pairs.push((parse(toks[1])?, parse(toks[2])?));
            }
            (kind, _) => return Err(err(line, format!("malformed `{kind}` line"))),
        }
    }
    Ok(HomomorphismFile {
        source_path: g.ok_or_else(|| err(0, "missing `g <graphfile>` line".into()))?,
        target_path: h.ok_or_else(|| err(0, "missing `h <graphfile>` line".into()))?,
        pairs,
    })
}
