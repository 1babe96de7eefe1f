//! Dense symmetric eigenvalues by cyclic Jacobi rotations, certified
//! `(n, d, lambda)` parameters for regular graphs, and the checkers for the
//! mixing-lemma neighborhood bound, the coefficient bound, the effective
//! degree bound and the largest-negative-root bound.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{checker_width, zeta_of};
use crate::clique::{cbpoly_bruteforce, CliqueBudget};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::{compare_root_with, BivariatePoly};
use crate::rational::{ceil_dyadic, format_rational, int, parse_rational, sqrt_upper, to_f64};
use crate::report::{CheckReport, GraphWitness, Verdict};

pub const NEIGHBORHOOD_BOUND: &str = "common-neighborhood-bound";
pub const COEFFICIENT_BOUND: &str = "coefficient-bound";
pub const EFFECTIVE_DEGREE_BOUND: &str = "effective-degree-bound";
pub const ROOT_BOUND: &str = "negative-root-bound";

/// Largest `|B|` for which all subsets of `B` are enumerated.
pub const MAX_SUBSET_BITS: usize = 16;

const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
/// Bits of the dyadic grid used for outward rounding.
const ROUNDING_BITS: u32 = 40;

/// Eigenvalues in descending order with unit eigenvectors (`vectors[k]`
/// belongs to `values[k]`).
#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    /// Frobenius norm of the off-diagonal part at termination.
    pub off_diagonal: f64,
    pub sweeps: usize,
}

fn off_norm(m: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (p, row) in m.iter().enumerate() {
        for (q, x) in row.iter().enumerate() {
            if p != q {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// `1e-12`.
pub fn jacobi_eigen(a: &[Vec<f64>]) -> Result<SymmetricEigen> {
    let n = a.len();
    let mut m = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut sweeps = 0;
    loop {
        let off = off_norm(&m);
        if off <= OFF_DIAGONAL_TOLERANCE {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence);
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in m.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (m[p][k], m[q][k]);
                    m[p][k] = c * x - s * y;
                    m[q][k] = s * x + c * y;
                }
                for row in v.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| m[j][j].total_cmp(&m[i][i]));
    Ok(SymmetricEigen {
        values: idx.iter().map(|&i| m[i][i]).collect(),
        vectors: idx.iter().map(|&i| v.iter().map(|row| row[i]).collect()).collect(),
        off_diagonal: off_norm(&m),
        sweeps,
    })
}

fn adjacency_f64(g: &Graph) -> Vec<Vec<f64>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| if g.adjacent(u, v) { 1.0 } else { 0.0 }).collect())
        .collect()
}

/// Jacobi spectrum of the adjacency matrix of any graph.
pub fn adjacency_eigen(g: &Graph) -> Result<SymmetricEigen> {
    jacobi_eigen(&adjacency_f64(g))
}

/// Exact positive semidefiniteness by symmetric elimination with diagonal
/// pivots: a zero pivot must have a zero row.
fn is_psd(mut m: Vec<Vec<BigRational>>) -> bool {
    let n = m.len();
    for k in 0..n {
        let pivot = m[k][k].clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if m[k][k + 1..].iter().any(|x| !x.is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k + 1..n {
                let delta = &f * &m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    true
}

/// Exact test that every eigenvalue of `A` other than the one on the
/// all-ones vector lies in `[-lambda, lambda]`: both
/// `lambda I - A + ((d - lambda)/n) J` and `lambda I + A - ((d + lambda)/n) J`
/// must be positive semidefinite.
pub fn certify_lambda(g: &Graph, d: usize, lambda: &BigRational) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let nn = int(n as i64);
    let dd = int(d as i64);
    let build = |sign: i64, shift: BigRational| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| {
                        let mut x = &shift / &nn;
                        if g.adjacent(u, v) {
                            x -= int(sign);
                        }
                        if u == v {
                            x += lambda;
                        }
                        x
                    })
                    .collect()
            })
            .collect()
    };
    is_psd(build(1, &dd - lambda)) && is_psd(build(-1, -(&dd + lambda)))
}

/// `(n, d, lambda)` for a regular graph. `lambda` is a rational upper bound
/// on every nontrivial `|mu|`, verified exactly by [`certify_lambda`].
#[derive(Clone, Debug, Serialize)]
pub struct SpectralProfile {
    pub n: usize,
    pub d: usize,
    pub eigenvalues: Vec<f64>,
    /// Every eigenvalue of the adjacency matrix lies within this distance
    /// of a listed value.
    pub error_radius: f64,
    pub max_residual: f64,
    pub lambda_estimate: f64,
    #[serde(serialize_with = "ser_rational")]
    pub lambda: BigRational,
    pub lambda_certified: bool,
}

fn ser_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Jacobi spectrum of a regular graph plus a certified `lambda`.
pub fn eigenvalues(g: &Graph) -> Result<SpectralProfile> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let d = g.regular_degree()?;
    let a = adjacency_f64(g);
    let eig = jacobi_eigen(&a)?;
    let n = g.n();
    let mut max_residual: f64 = 0.0;
    for (mu, vec) in eig.values.iter().zip(&eig.vectors) {
        for (row, vi) in a.iter().zip(vec) {
            let av: f64 = row.iter().zip(vec).map(|(x, y)| x * y).sum();
            max_residual = max_residual.max((av - mu * vi).abs());
        }
    }
    let error_radius = eig.off_diagonal + 64.0 * f64::EPSILON * (n as f64) * (d as f64 + 1.0);
    let lambda_estimate = eig.values.iter().skip(1).map(|x| x.abs()).fold(0.0, f64::max);

    let mut candidates = Vec::new();
    let nearest = lambda_estimate.round();
    if (lambda_estimate - nearest).abs() <= 1e-9 {
        candidates.push(int(nearest as i64));
    }
    let mut cushion = error_radius.max(1e-12);
    for _ in 0..4 {
        candidates.push(ceil_dyadic(lambda_estimate + cushion, ROUNDING_BITS));
        cushion *= 16.0;
    }
    let certified = candidates.iter().find(|c| certify_lambda(g, d, c)).cloned();
    let (lambda, lambda_certified) = match certified {
        Some(l) => (l, true),
        None => (candidates.pop().expect("candidates are nonempty"), false),
    };
    Ok(SpectralProfile {
        n,
        d,
        eigenvalues: eig.values,
        error_radius,
        max_residual,
        lambda_estimate,
        lambda,
        lambda_certified,
    })
}

impl SpectralProfile {
    fn check_j(&self, j: usize) -> Result<()> {
        if j == 0 || j >= self.n {
            return Err(Error::OutOfRange(format!(
                "j = {j} must satisfy 1 <= j <= n - 1 = {}",
                self.n.saturating_sub(1)
            )));
        }
        Ok(())
    }

    /// `(d/n) j (n - j)`, exact.
    fn linear_part(&self, j: usize) -> BigRational {
        BigRational::new(BigInt::from(self.d * j * (self.n - j)), BigInt::from(self.n))
    }

    fn radicand(&self, j: usize) -> usize {
        j * (self.n - j)
    }

    /// Exact `value <= (d/n) j (n - j) + lambda sqrt(j (n - j))`, by
    /// squaring the nonnegative side.
    pub fn within_mixing_bound(&self, j: usize, value: &BigRational) -> bool {
        let excess = value - self.linear_part(j);
        if !excess.is_positive() {
            return true;
        }
        &excess * &excess <= &self.lambda * &self.lambda * int(self.radicand(j) as i64)
    }

    /// Exact `floor` of the mixing bound for `1 <= j <= n` (zero radicand
    /// at `j = n`).
    pub fn mixing_floor(&self, j: usize) -> BigInt {
        let mut k = self.mixing_enclosure(j, ROUNDING_BITS).floor().to_integer();
        while !self.within_mixing_bound(j, &BigRational::from_integer(k.clone())) {
            k -= 1;
        }
        while self.within_mixing_bound(j, &BigRational::from_integer(&k + 1)) {
            k += 1;
        }
        k
    }

    /// Rational upper enclosure of the mixing bound, square root rounded
    /// up on a `2^-bits` grid.
    pub fn mixing_enclosure(&self, j: usize, bits: u32) -> BigRational {
        let root = sqrt_upper(&BigUint::from(self.radicand(j)), bits);
        self.linear_part(j) + &self.lambda * root
    }
}

/// Upper enclosure of `(d/n) j (n - j) + lambda sqrt(j (n - j))`.
pub fn mixing_neighborhood_bound(profile: &SpectralProfile, j: usize) -> Result<BigRational> {
    profile.check_j(j)?;
    Ok(profile.mixing_enclosure(j, ROUNDING_BITS))
}

/// `M_j` tables: exact maxima of `|N(S)|` over `S ⊆ B, |S| = j`, the
/// spectral upper bounds, and the resulting bound on the effective degree.
#[derive(Clone, Debug)]
pub struct SpectralBounds {
    pub mj_exact: BTreeMap<usize, usize>,
    /// Maximizing subset for each `j`.
    pub mj_argmax: BTreeMap<usize, VertexSet>,
    pub mj_bound: BTreeMap<usize, BigRational>,
    pub mj_bound_floor: BTreeMap<usize, BigInt>,
    /// Upper enclosure of `max_{0 <= j <= |B|} (j + M_j bound)`.
    pub dy_bound: BigRational,
}

impl SpectralBounds {
    pub fn to_value(&self, g: &Graph) -> Value {
        let rows: Vec<Value> = self
            .mj_exact
            .iter()
            .map(|(&j, &m)| {
                json!({
                    "j": j,
                    "m_exact": m,
                    "m_exact_set": g.set_labels(self.mj_argmax[&j]),
                    "m_bound": format_rational(&self.mj_bound[&j]),
                    "m_bound_approx": to_f64(&self.mj_bound[&j]),
                    "m_bound_floor": self.mj_bound_floor[&j].to_string(),
                })
            })
            .collect();
        json!({"m": rows, "d_bound": format_rational(&self.dy_bound)})
    }
}

fn subset_budget(b: VertexSet) -> Result<()> {
    if b.len() > MAX_SUBSET_BITS {
        return Err(Error::Budget(format!(
            "|B| = {} exceeds the subset enumeration limit {MAX_SUBSET_BITS}",
            b.len()
        )));
    }
    Ok(())
}

/// Nonempty subsets of `b` in increasing order of their bit patterns.
fn subsets(b: VertexSet) -> impl Iterator<Item = VertexSet> {
    let members = b.to_vec();
    (1u64..(1u64 << members.len())).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

pub fn spectral_bounds(g: &Graph, b: VertexSet, profile: &SpectralProfile) -> Result<SpectralBounds> {
    g.check_set(b)?;
    subset_budget(b)?;
    let n = g.n();
    let mut mj_exact = BTreeMap::new();
    let mut mj_argmax = BTreeMap::new();
    for s in subsets(b) {
        let j = s.len();
        let size = g.common_neighborhood(s)?.len();
        if mj_exact.get(&j).map_or(true, |&m| size > m) {
            mj_exact.insert(j, size);
            mj_argmax.insert(j, s);
        }
    }
    let mut mj_bound = BTreeMap::new();
    let mut mj_bound_floor = BTreeMap::new();
    for &j in mj_exact.keys() {
        mj_bound.insert(j, profile.mixing_enclosure(j, ROUNDING_BITS));
        mj_bound_floor.insert(j, profile.mixing_floor(j));
    }
    // j = 0 contributes 0 + (d/n) 0 n + lambda 0 = 0
    let dy_bound = (1..=b.len().min(n))
        .map(|j| int(j as i64) + profile.mixing_enclosure(j, ROUNDING_BITS))
        .fold(BigRational::zero(), |acc, x| if x > acc { x } else { acc });
    Ok(SpectralBounds {
        mj_exact,
        mj_argmax,
        mj_bound,
        mj_bound_floor,
        dy_bound,
    })
}

fn regular_profile(g: &Graph, claim: &str) -> Result<std::result::Result<SpectralProfile, CheckReport>> {
    match eigenvalues(g) {
        Ok(p) => Ok(Ok(p)),
        Err(Error::NotRegular { vertex, degree, expected }) => Ok(Err(CheckReport::not_applicable(
            claim,
            format!("not regular: vertex {vertex} has degree {degree}, expected {expected}"),
        ))),
        Err(e) => Err(e),
    }
}

fn profile_value(p: &SpectralProfile) -> Value {
    serde_json::to_value(p).expect("profile serializes")
}

/// `|N(S)| <= (d/n) j (n - j) + lambda sqrt(j (n - j))` for every nonempty
/// `S ⊆ B` with `|S| = j <= n - 1`, decided exactly.
pub fn check_common_neighborhood_bound(g: &Graph, b: VertexSet) -> Result<CheckReport> {
    g.check_set(b)?;
    subset_budget(b)?;
    let profile = match regular_profile(g, NEIGHBORHOOD_BOUND)? {
        Ok(p) => p,
        Err(r) => return Ok(r),
    };
    let n = g.n();
    let mut checked = 0u64;
    let mut violation = None;
    let mut table: BTreeMap<usize, (usize, BigRational)> = BTreeMap::new();
    for s in subsets(b) {
        let j = s.len();
        if j >= n {
            continue;
        }
        checked += 1;
        let size = g.common_neighborhood(s)?.len();
        let entry = table
            .entry(j)
            .or_insert_with(|| (0, profile.mixing_enclosure(j, ROUNDING_BITS)));
        entry.0 = entry.0.max(size);
        if violation.is_none() && !profile.within_mixing_bound(j, &int(size as i64)) {
            violation = Some((s, size));
        }
    }
    let rows: Vec<Value> = table
        .iter()
        .map(|(j, (m, bound))| {
            json!({"j": j, "max_common_neighborhood": m, "bound": format_rational(bound), "bound_approx": to_f64(bound)})
        })
        .collect();
    let details = json!({"profile": profile_value(&profile), "subsets_checked": checked, "rows": rows});
    let mut report = match violation {
        Some((s, size)) => CheckReport::violated(
            NEIGHBORHOOD_BOUND,
            json!({
                "graph": GraphWitness::new(g, b),
                "subset": s.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "common_neighborhood_size": size,
                "lambda": format_rational(&profile.lambda),
            }),
        ),
        None => CheckReport::holds(NEIGHBORHOOD_BOUND),
    }
    .with_details(details);
    if b.len() >= n {
        report = report.note("S = V is skipped: the bound requires |S| <= n - 1");
    }
    if !profile.lambda_certified {
        report = report.note("lambda could not be certified exactly; bounds use an uncertified estimate");
    }
    Ok(report)
}

fn binom(n: &BigInt, k: usize) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    binomial(n.clone(), BigInt::from(k))
}

/// `c_{i,j} <= C(|B|, j) C(M_j, i - j)` for `j >= 1`, once with the exact
/// `M_j` and once with the floor of its spectral bound.
pub fn check_coefficient_bounds(g: &Graph, b: VertexSet) -> Result<CheckReport> {
    g.check_set(b)?;
    subset_budget(b)?;
    let profile = match regular_profile(g, COEFFICIENT_BOUND)? {
        Ok(p) => p,
        Err(r) => return Ok(r),
    };
    let bounds = spectral_bounds(g, b, &profile)?;
    let p = cbpoly_bruteforce(g, b, CliqueBudget::default())?;
    let b_len = BigInt::from(b.len());
    let mut rows = Vec::new();
    let mut exact_violation = None;
    let mut spectral_violation = None;
    let mut rechecks = 0u64;
    for (i, j, c) in p.terms() {
        if j == 0 {
            continue;
        }
        let (i, j) = (i as usize, j as usize);
        let lead = binom(&b_len, j);
        let exact = &lead * binom(&BigInt::from(bounds.mj_exact[&j]), i - j);
        // first pass: floor of the dyadic enclosure; a failure is confirmed
        // against the exact floor before it counts
        let coarse_floor = bounds.mj_bound[&j].floor().to_integer();
        let mut spectral = &lead * binom(&coarse_floor, i - j);
        let mut spectral_ok = c <= &spectral;
        if !spectral_ok {
            rechecks += 1;
            spectral = &lead * binom(&bounds.mj_bound_floor[&j], i - j);
            spectral_ok = c <= &spectral;
        }
        let exact_ok = c <= &exact;
        if !exact_ok && exact_violation.is_none() {
            exact_violation = Some((i, j, c.clone(), exact.clone()));
        }
        if !spectral_ok && spectral_violation.is_none() {
            spectral_violation = Some((i, j, c.clone(), spectral.clone()));
        }
        rows.push(json!({
            "i": i, "j": j, "c": c.to_string(),
            "exact_bound": exact.to_string(), "exact_ok": exact_ok,
            "spectral_bound": spectral.to_string(), "spectral_ok": spectral_ok,
        }));
    }
    let verdict_of = |v: &Option<_>| if v.is_some() { Verdict::Violated } else { Verdict::Holds };
    let details = json!({
        "profile": profile_value(&profile),
        "bounds": bounds.to_value(g),
        "table": rows,
        "exact_m_verdict": verdict_of(&exact_violation),
        "spectral_m_verdict": verdict_of(&spectral_violation),
        "exact_rechecks": rechecks,
    });
    let witness = |kind: &str, (i, j, c, bound): (usize, usize, BigInt, BigInt)| {
        json!({
            "graph": GraphWitness::new(g, b),
            "kind": kind,
            "i": i, "j": j, "c": c.to_string(), "bound": bound.to_string(),
        })
    };
    Ok(match (exact_violation, spectral_violation) {
        (Some(v), _) => CheckReport::violated(COEFFICIENT_BOUND, witness("exact", v)),
        (None, Some(v)) => CheckReport::violated(COEFFICIENT_BOUND, witness("spectral", v)),
        (None, None) => CheckReport::holds(COEFFICIENT_BOUND),
    }
    .with_details(details))
}

/// `D(y) = max { i : a_i(y) > 0 }`.
pub fn effective_degree(p: &BivariatePoly, y: &BigRational) -> Result<usize> {
    if y.is_negative() {
        return Err(Error::OutOfRange("y must be nonnegative".into()));
    }
    let s = p.section_at_y(y);
    s.coeffs()
        .iter()
        .rposition(|a| a.is_positive())
        .ok_or(Error::ZeroPolynomial)
}

/// `D(y) <= max_{0 <= j <= |B|} (j + (d/n) j (n - j) + lambda sqrt(j (n - j)))`,
/// decided exactly term by term.
pub fn check_effective_degree_bound(g: &Graph, b: VertexSet, ys: &[BigRational]) -> Result<CheckReport> {
    g.check_set(b)?;
    let profile = match regular_profile(g, EFFECTIVE_DEGREE_BOUND)? {
        Ok(p) => p,
        Err(r) => return Ok(r),
    };
    let p = cbpoly_bruteforce(g, b, CliqueBudget::default())?;
    let n = g.n();
    let mut rows = Vec::new();
    let mut violation = None;
    for y in ys {
        let dy = effective_degree(&p, y)?;
        // D <= j + bound_j  <=>  D - j <= bound_j
        let ok = (0..=b.len().min(n)).any(|j| {
            let target = int(dy as i64 - j as i64);
            if j == 0 || j == n {
                !target.is_positive() || (j == n && target <= profile.linear_part(j))
            } else {
                profile.within_mixing_bound(j, &target)
            }
        });
        rows.push(json!({"y": format_rational(y), "d": dy, "ok": ok}));
        if !ok && violation.is_none() {
            violation = Some((y.clone(), dy));
        }
    }
    let bound = (0..=b.len().min(n))
        .map(|j| {
            if j == 0 || j == n {
                int(j as i64)
            } else {
                int(j as i64) + profile.mixing_enclosure(j, ROUNDING_BITS)
            }
        })
        .fold(BigRational::zero(), |a, x| if x > a { x } else { a });
    let details = json!({
        "profile": profile_value(&profile),
        "bound": format_rational(&bound),
        "bound_approx": to_f64(&bound),
        "rows": rows,
    });
    Ok(match violation {
        Some((y, dy)) => CheckReport::violated(
            EFFECTIVE_DEGREE_BOUND,
            json!({"graph": GraphWitness::new(g, b), "y": format_rational(&y), "d": dy}),
        ),
        None => CheckReport::holds(EFFECTIVE_DEGREE_BOUND),
    }
    .with_details(details))
}

/// `zeta_G(B; y) >= -1/D(y)` at every `y` of the grid.
pub fn check_root_bound(g: &Graph, b: VertexSet, ys: &[BigRational]) -> Result<CheckReport> {
    g.check_set(b)?;
    let profile = match regular_profile(g, ROOT_BOUND)? {
        Ok(p) => p,
        Err(r) => return Ok(r),
    };
    let p = cbpoly_bruteforce(g, b, CliqueBudget::default())?;
    let mut rows = Vec::new();
    let mut violation = None;
    let mut saw_neg_infinity = false;
    let mut skipped = 0;
    for y in ys {
        let dy = effective_degree(&p, y)?;
        if dy == 0 {
            skipped += 1;
            rows.push(json!({"y": format_rational(y), "d": 0, "verdict": Verdict::NotApplicable}));
            continue;
        }
        let an = zeta_of(&p, y, &checker_width())?;
        let threshold = -BigRational::new(BigInt::one(), BigInt::from(dy));
        let order = compare_root_with(&an, &threshold);
        saw_neg_infinity |= order.is_none();
        let holds = matches!(order, Some(Ordering::Greater | Ordering::Equal));
        let verdict = if holds { Verdict::Holds } else { Verdict::Violated };
        rows.push(json!({
            "y": format_rational(y),
            "d": dy,
            "threshold": format_rational(&threshold),
            "zeta": an.zeta(),
            "verdict": verdict,
        }));
        if !holds && violation.is_none() {
            violation = Some(json!({
                "graph": GraphWitness::new(g, b),
                "y": format_rational(y),
                "d": dy,
                "threshold": format_rational(&threshold),
                "zeta": an.zeta(),
            }));
        }
    }
    let details = json!({"profile": profile_value(&profile), "rows": rows});
    let mut report = match violation {
        Some(w) => CheckReport::violated(ROOT_BOUND, w),
        None if skipped == ys.len() => {
            CheckReport::not_applicable(ROOT_BOUND, "D(y) = 0 at every grid point")
        }
        None => CheckReport::holds(ROOT_BOUND),
    }
    .with_details(details);
    if saw_neg_infinity {
        report = report.note("a section without negative roots counts as a violation of the lower bound");
    }
    Ok(report)
}

/// Recomputes a spectral violation from its witness alone.
pub fn replay_spectral(report: &CheckReport) -> Result<bool> {
    let w = report
        .witness
        .as_ref()
        .ok_or_else(|| Error::OutOfRange("report has no witness".into()))?;
    let gw: GraphWitness = serde_json::from_value(w["graph"].clone())
        .map_err(|e| Error::OutOfRange(format!("malformed witness graph: {e}")))?;
    let (g, b) = gw.to_graph()?;
    match report.claim.as_str() {
        ROOT_BOUND => {
            let y = parse_rational(w["y"].as_str().unwrap_or_default())?;
            let p = cbpoly_bruteforce(&g, b, CliqueBudget::default())?;
            let dy = effective_degree(&p, &y)?;
            let an = zeta_of(&p, &y, &checker_width())?;
            let threshold = -BigRational::new(BigInt::one(), BigInt::from(dy));
            let below = matches!(compare_root_with(&an, &threshold), None | Some(Ordering::Less));
            Ok(below && w["d"].as_u64() == dy.to_u64())
        }
        NEIGHBORHOOD_BOUND => {
            let profile = eigenvalues(&g)?;
            let s: Vec<usize> = serde_json::from_value(w["subset"].clone())
                .map_err(|e| Error::OutOfRange(e.to_string()))?;
            let s: VertexSet = s.iter().map(|v| v - 1).collect();
            let size = g.common_neighborhood(s)?.len();
            Ok(!profile.within_mixing_bound(s.len(), &int(size as i64)))
        }
        COEFFICIENT_BOUND | EFFECTIVE_DEGREE_BOUND => {
            let again = if report.claim == COEFFICIENT_BOUND {
                check_coefficient_bounds(&g, b)?
            } else {
                let y = parse_rational(w["y"].as_str().unwrap_or_default())?;
                check_effective_degree_bound(&g, b, &[y])?
            };
            Ok(again.verdict == Verdict::Violated)
        }
        other => Err(Error::OutOfRange(format!("claim {other} is not a spectral claim"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;
    use crate::rational::rat;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn complete_graph_spectrum() {
        let p = eigenvalues(&families::complete(4)).unwrap();
        assert!(close(&p.eigenvalues, &[3.0, -1.0, -1.0, -1.0]));
        assert_eq!(p.lambda, int(1));
        assert!(p.lambda_certified);
    }

    #[test]
    fn four_cycle_spectrum() {
        let p = eigenvalues(&families::cycle(4)).unwrap();
        assert!(close(&p.eigenvalues, &[2.0, 0.0, 0.0, -2.0]));
        assert_eq!(p.lambda, int(2));
    }

    #[test]
    fn petersen_spectrum() {
        let p = eigenvalues(&families::petersen()).unwrap();
        let mut expected = vec![3.0];
        expected.extend([1.0; 5]);
        expected.extend([-2.0; 4]);
        assert!(close(&p.eigenvalues, &expected));
        assert!(p.max_residual <= 1e-9);
        assert_eq!(p.lambda, int(2));
    }

    #[test]
    fn irrational_lambda_is_rounded_up_and_certified() {
        let p = eigenvalues(&families::cycle(5)).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(to_f64(&p.lambda) >= golden);
        assert!(to_f64(&p.lambda) - golden < 1e-9);
        assert!(p.lambda_certified);
        assert!(!certify_lambda(&families::cycle(5), 2, &rat(161, 100)));
    }

    #[test]
    fn non_regular_rejected() {
        assert!(matches!(eigenvalues(&families::path(3)), Err(Error::NotRegular { .. })));
        let r = check_root_bound(&families::path(3), VertexSet::EMPTY, &[int(1)]).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn mixing_bound_examples() {
        let p = eigenvalues(&families::complete(4)).unwrap();
        let b1 = to_f64(&mixing_neighborhood_bound(&p, 1).unwrap());
        assert!((b1 - (2.25 + 3f64.sqrt())).abs() < 1e-9);
        assert!(b1 >= 2.25 + 3f64.sqrt());
        assert!(mixing_neighborhood_bound(&p, 4).is_err());
        assert!(mixing_neighborhood_bound(&p, 0).is_err());
        let e = eigenvalues(&families::edgeless(5)).unwrap();
        assert_eq!(mixing_neighborhood_bound(&e, 2).unwrap(), int(0));
    }

    #[test]
    fn neighborhood_bound_holds_on_small_families() {
        for g in [families::complete(4), families::cycle(4), families::cycle(5), families::edgeless(4)] {
            let r = check_common_neighborhood_bound(&g, g.vertices()).unwrap();
            assert_eq!(r.verdict, Verdict::Holds);
        }
    }

    #[test]
    fn coefficient_bounds_examples() {
        let c5 = families::cycle(5);
        let r = check_coefficient_bounds(&c5, c5.vertices()).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let k4 = families::complete(4);
        let r = check_coefficient_bounds(&k4, VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn effective_degree_examples() {
        let k4 = families::complete(4);
        let p = cbpoly_bruteforce(&k4, k4.vertices(), CliqueBudget::default()).unwrap();
        assert_eq!(effective_degree(&p, &int(1)).unwrap(), 4);
        assert_eq!(effective_degree(&p, &rat(1, 2)).unwrap(), 4);
        assert_eq!(effective_degree(&p, &int(0)).unwrap(), 0);
        let q = cbpoly_bruteforce(&k4, VertexSet::from_iter([0]), CliqueBudget::default()).unwrap();
        assert_eq!(effective_degree(&q, &int(0)).unwrap(), 3);
    }

    #[test]
    fn root_bound_falsified_on_k4() {
        let k4 = families::complete(4);
        let r = check_root_bound(&k4, k4.vertices(), &[int(1)]).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w["d"], 4);
        assert_eq!(w["threshold"], "-1/4");
        assert!(replay_spectral(&r).unwrap());
    }

    #[test]
    fn root_bound_equality_on_c4() {
        let c4 = families::cycle(4);
        let r = check_root_bound(&c4, c4.vertices(), &[int(1)]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let e = families::edgeless(3);
        let r = check_root_bound(&e, VertexSet::EMPTY, &[int(1)]).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
    }
}
