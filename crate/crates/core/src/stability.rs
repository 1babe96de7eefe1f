//! Exact refutation of real stability: real-rootedness of y-sections and
//! of restrictions to lines `t -> (a t + c, b t + d)` with `a, b > 0`.
//! Passing every test is consistent with stability but never proves it.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::clique::{cbpoly_bruteforce, cbpoly_peo, CliqueBudget, MultiaffineVertexPoly};
use crate::error::{Error, Result};
use crate::graph::{
    check_neighborhood_geometry, clique_number, is_chordal, vertex_connectivity, Graph, VertexSet,
};
use crate::poly::{is_real_rooted, real_root_count, BivariatePoly, UnivariatePoly};
use crate::rational::{format_rational, int, parse_rational, rat};
use crate::report::{CheckReport, GraphWitness, Verdict};

pub const SECTION_SCAN: &str = "section-real-rootedness";
pub const LINE_RESTRICTION: &str = "line-restriction-stability";
pub const MAIN_THEOREM: &str = "chordal-stability";
pub const TRIANGLE_FREE: &str = "triangle-free-stability";

pub const DEFAULT_TRIALS: usize = 200;

/// Cap on refuting trials listed in a report.
const MAX_LISTED_REFUTATIONS: usize = 5;

const CONSISTENT: &str = "consistent: no refutation found; this is not a proof of stability";

/// `{0, 1/2, 1, 2, 5}`
pub fn default_stability_grid() -> Vec<BigRational> {
    vec![int(0), rat(1, 2), int(1), int(2), int(5)]
}

/// The line `t -> (a t + c, b t + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Line {
    /// Numerators and denominators uniform on `1..=64`; `c` and `d` get a
    /// random sign.
    pub fn sample(rng: &mut impl Rng) -> Self {
        let mut q = |signed: bool| {
            let n = BigInt::from(rng.gen_range(1..=64i64));
            let d = BigInt::from(rng.gen_range(1..=64i64));
            let r = BigRational::new(n, d);
            if signed && rng.gen_bool(0.5) {
                -r
            } else {
                r
            }
        };
        let (a, b) = (q(false), q(false));
        let (c, d) = (q(true), q(true));
        Line { a, b, c, d }
    }

    fn to_value(&self) -> Value {
        json!({
            "a": format_rational(&self.a),
            "b": format_rational(&self.b),
            "c": format_rational(&self.c),
            "d": format_rational(&self.d),
        })
    }

    fn from_value(v: &Value) -> Result<Self> {
        let get = |k: &str| -> Result<BigRational> {
            parse_rational(
                v[k].as_str()
                    .ok_or_else(|| Error::OutOfRange(format!("line lacks {k}")))?,
            )
        };
        Ok(Line {
            a: get("a")?,
            b: get("b")?,
            c: get("c")?,
            d: get("d")?,
        })
    }
}

/// `P(a t + c, b t + d)` as an exact polynomial in `t`.
pub fn restrict_to_line(p: &BivariatePoly, line: &Line) -> UnivariatePoly {
    let lx = UnivariatePoly::linear(line.a.clone(), line.c.clone());
    let ly = UnivariatePoly::linear(line.b.clone(), line.d.clone());
    let powers = |base: &UnivariatePoly, top: u32| {
        let mut out = vec![UnivariatePoly::constant(int(1))];
        for _ in 0..top {
            let next = out.last().expect("nonempty") * base;
            out.push(next);
        }
        out
    };
    let px = powers(&lx, p.x_degree().unwrap_or(0));
    let py = powers(&ly, p.y_degree().unwrap_or(0));
    let mut total = UnivariatePoly::zero();
    for (i, j, c) in p.terms() {
        let term = (&px[i as usize] * &py[j as usize]).scale(&BigRational::from_integer(c.clone()));
        total = &total + &term;
    }
    total
}

/// Whether a nonzero univariate polynomial has a nonreal root; the zero
/// polynomial counts as consistent.
fn has_nonreal_root(p: &UnivariatePoly) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    Ok(!is_real_rooted(p)?)
}

fn coeff_strings(p: &UnivariatePoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

fn nonzero(p: &BivariatePoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// Real stability forces every real-y section to be real-rooted or zero.
pub fn section_realrooted_scan(p: &BivariatePoly, ys: &[BigRational]) -> Result<CheckReport> {
    nonzero(p)?;
    let mut rows = Vec::new();
    let mut witness = None;
    for y in ys {
        let s = p.section_at_y(y);
        let bad = has_nonreal_root(&s)?;
        rows.push(json!({
            "y": format_rational(y),
            "section": coeff_strings(&s),
            "real_rooted": !bad,
        }));
        if bad && witness.is_none() {
            witness = Some(json!({
                "kind": "section",
                "polynomial": p,
                "y": format_rational(y),
                "section": coeff_strings(&s),
            }));
        }
    }
    let details = json!({"rows": rows});
    Ok(match witness {
        Some(w) => CheckReport::violated(SECTION_SCAN, w).with_details(details),
        None => CheckReport::holds(SECTION_SCAN)
            .with_details(details)
            .note("necessary condition only; not a proof of stability"),
    })
}

/// Samples `trials` seeded lines and checks each restriction exactly.
pub fn line_restriction_refute(p: &BivariatePoly, trials: usize, seed: u64) -> Result<CheckReport> {
    nonzero(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut refuting = Vec::new();
    let mut refutation_count = 0usize;
    for trial in 0..trials {
        let line = Line::sample(&mut rng);
        let r = restrict_to_line(p, &line);
        if has_nonreal_root(&r)? {
            refutation_count += 1;
            if refuting.len() < MAX_LISTED_REFUTATIONS {
                refuting.push(json!({
                    "trial": trial,
                    "line": line.to_value(),
                    "restriction": coeff_strings(&r),
                }));
            }
        }
    }
    let details = json!({
        "trials": trials,
        "seed": seed,
        "refuting_trials": refutation_count,
        "listed": refuting,
    });
    Ok(match refuting.first() {
        Some(first) => CheckReport::violated(
            LINE_RESTRICTION,
            json!({
                "kind": "line",
                "polynomial": p,
                "line": first["line"],
                "restriction": first["restriction"],
            }),
        )
        .with_details(details),
        None => CheckReport::unresolved(LINE_RESTRICTION, format!("no refutation found in {trials} trials"))
            .with_details(details),
    })
}

/// Re-derives a refutation from its witness: the section or line
/// restriction is recomputed from the serialized polynomial and must have
/// fewer distinct real roots than its square-free degree.
pub fn verify_refutation(witness: &Value) -> Result<bool> {
    let p: BivariatePoly = serde_json::from_value(witness["polynomial"].clone())
        .map_err(|e| Error::OutOfRange(format!("malformed polynomial: {e}")))?;
    let q = match witness["kind"].as_str() {
        Some("section") => {
            let y = parse_rational(witness["y"].as_str().unwrap_or_default())?;
            p.section_at_y(&y)
        }
        Some("line") => restrict_to_line(&p, &Line::from_value(&witness["line"])?),
        _ => return Err(Error::OutOfRange("unknown refutation kind".into())),
    };
    if q.is_zero() {
        return Ok(false);
    }
    let sf_degree = q.square_free()?.degree().unwrap_or(0);
    Ok(sf_degree > real_root_count(&q)?)
}

/// Runs the section scan and the line battery; a violation in either is
/// an exact refutation.
fn battery(
    claim: &str,
    p: &BivariatePoly,
    graph: Value,
    trials: usize,
    seed: u64,
    mut details: Value,
    extra: Vec<CheckReport>,
) -> Result<CheckReport> {
    let scan = section_realrooted_scan(p, &default_stability_grid())?;
    let lines = line_restriction_refute(p, trials, seed)?;
    let refutation = [&scan, &lines]
        .into_iter()
        .find(|r| r.is_violated())
        .and_then(|r| r.witness.clone());
    let mut subs: Vec<&CheckReport> = extra.iter().collect();
    subs.push(&scan);
    subs.push(&lines);
    details["polynomial"] = json!(p);
    details["checks"] = json!(subs);
    Ok(match refutation {
        Some(r) => CheckReport::violated(claim, json!({"graph": graph, "refutation": r})),
        None => CheckReport::unresolved(claim, CONSISTENT),
    }
    .with_details(details))
}

/// Hypotheses: `r`-connected, `K_{r+3}`-free and chordal. Conclusion under
/// test: `C_B(G; x, y)` is real-stable.
pub fn check_main_stability_theorem(
    g: &Graph,
    b: VertexSet,
    r: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    g.check_set(b)?;
    let kappa = vertex_connectivity(g);
    let omega = clique_number(g);
    let peo = is_chordal(g);
    let mut failing = Vec::new();
    if kappa < r {
        failing.push(format!("not {r}-connected (connectivity {kappa})"));
    }
    if omega >= r + 3 {
        failing.push(format!("not K_{}-free (clique number {omega})", r + 3));
    }
    if peo.is_none() {
        failing.push("not chordal".to_string());
    }
    let mut details = json!({
        "hypotheses": {
            "r": r,
            "connectivity": kappa,
            "clique_number": omega,
            "chordal": peo.is_some(),
            "peo": peo.as_ref().map(|p| p.order().iter().map(|&v| g.label(v)).collect::<Vec<_>>()),
        },
    });
    let complete_note = g.edge_count() == g.n() * (g.n() - 1) / 2;
    let budget = CliqueBudget::default();
    let brute = cbpoly_bruteforce(g, b, budget)?;
    if let Some(peo) = &peo {
        let via_peo = cbpoly_peo(g, b, peo)?;
        if via_peo != brute {
            return Err(Error::Inconsistent(format!(
                "PEO induction gives {via_peo}, enumeration gives {brute}"
            )));
        }
        details["polynomial_via_peo"] = json!(via_peo);
    }
    let mut report = if failing.is_empty() {
        let geometry = check_neighborhood_geometry(g, r);
        let graph = GraphWitness::new(g, b).to_value();
        battery(MAIN_THEOREM, &brute, graph, trials, seed, details, vec![geometry])?
    } else {
        let mut r = CheckReport::not_applicable(MAIN_THEOREM, failing.join("; ")).with_details(details);
        if peo.is_some() {
            r = r.note("polynomial arithmetic verified: PEO induction equals enumeration");
        }
        r
    };
    if complete_note {
        report = report.note("complete graph: connectivity taken as n - 1");
    }
    Ok(report)
}

/// Triangle-free graphs: the multiaffine vertex polynomial, specialized to
/// `u_v = x` or `xy`, must equal the B-clique polynomial; the specialization
/// then goes through the refutation battery.
pub fn triangle_free_stability_check(
    g: &Graph,
    b: VertexSet,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    g.check_set(b)?;
    let f = match MultiaffineVertexPoly::new(g) {
        Ok(f) => f,
        Err(Error::TriangleFound(t)) => {
            return Ok(CheckReport::not_applicable(
                TRIANGLE_FREE,
                format!("graph contains the triangle {t:?}"),
            ))
        }
        Err(e) => return Err(e),
    };
    let p = f.specialize(b);
    let brute = cbpoly_bruteforce(g, b, CliqueBudget::default())?;
    if p != brute {
        return Err(Error::Inconsistent(format!(
            "multiaffine specialization gives {p}, enumeration gives {brute}"
        )));
    }
    let details = json!({"specialization_matches_enumeration": true});
    battery(TRIANGLE_FREE, &p, GraphWitness::new(g, b).to_value(), trials, seed, details, vec![])
}

/// Re-verifies the refutation carried by any Violated stability report.
pub fn replay_stability(report: &CheckReport) -> Result<bool> {
    if report.verdict != Verdict::Violated {
        return Ok(false);
    }
    let w = report
        .witness
        .as_ref()
        .ok_or_else(|| Error::OutOfRange("report has no witness".into()))?;
    match report.claim.as_str() {
        SECTION_SCAN | LINE_RESTRICTION => verify_refutation(w),
        MAIN_THEOREM | TRIANGLE_FREE => verify_refutation(&w["refutation"]),
        other => Err(Error::OutOfRange(format!("claim {other} is not a stability claim"))),
    }
}
