//! `bclique` command-line front end. Every command writes one JSON
//! envelope `{version, input_hash, params, ...}` to stdout.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bclique_core::analysis::{
    self, check_b_girth_bound, check_b_independence_bound, default_y_grid, edge_deletion_suite,
    vertex_deletion_suite,
};
use bclique_core::clique::{
    cbpoly_peo_steps, compute as compute_with, CliqueBudget, Strategy,
};
use bclique_core::corpus::{check_specializations, check_strategy_agreement, standard_corpus};
use bclique_core::graph::{
    check_neighborhood_geometry, extremal_params, is_chordal, parse_graph, GraphFile, Peo,
};
use bclique_core::poly::{isolate_negative_roots, RootAnalysis};
use bclique_core::rational::{parse_rational, pow2_neg};
use bclique_core::report::combine;
use bclique_core::spectral::{
    adjacency_eigen, check_coefficient_bounds, check_common_neighborhood_bound,
    check_effective_degree_bound, check_root_bound, eigenvalues, spectral_bounds,
};
use bclique_core::stability::{
    check_main_stability_theorem, default_stability_grid, section_realrooted_scan,
    triangle_free_stability_check, DEFAULT_TRIALS,
};
use bclique_core::weighted::{
    check_clique_lift, check_hom_monotonicity, check_weight_monotonicity,
    check_weighted_root_monotonicity, hom_monotonicity_grid, parse_homomorphism_file,
    validate_homomorphism, weight_monotonicity_companion_grid, weight_monotonicity_stated_grid,
    Homomorphism, WeightFunction,
};
use bclique_core::{BivariatePoly, CheckReport, Error, Graph, Verdict, VertexSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "bclique", version, about = "Bivariate B-restricted clique polynomials and claim checkers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute C_B(G; x, y) for the graph file's B.
    Compute {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Brute)]
        strategy: StrategyArg,
        /// Comma-separated vertex labels giving the elimination ordering
        /// for the PEO strategy; maximum cardinality search otherwise.
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
    },
    /// Certified negative roots of the y-section.
    Zeta {
        #[arg(long)]
        graph: PathBuf,
        /// Section parameter as p/q.
        #[arg(long)]
        y: String,
        /// Isolating intervals are refined to width 2^-bits.
        #[arg(long, default_value_t = 40)]
        width_bits: u32,
    },
    /// Extremal parameters, the roots at y = 1 and the spectral bound tables.
    Bounds {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run claim checkers and emit their reports.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Adjacency spectrum and, for regular graphs, the certified lambda.
    Spectrum {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Strategy agreement and specialization identities on the seeded corpus.
    Corpus {
        #[arg(long, default_value_t = bclique_core::corpus::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Brute,
    Vertex,
    Edge,
    Peo,
    /// Every applicable strategy, cross-checked.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Monotonicity,
    Bounds,
    Stability,
    Spectral,
    Hom,
    All,
}

#[derive(Args, Debug)]
struct CheckOpts {
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Homomorphism file with `g`, `h` and `m` lines.
    #[arg(long)]
    map: Option<PathBuf>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Clique size for the neighborhood and stability hypotheses.
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Comma-separated y grid as p/q values.
    #[arg(long, value_delimiter = ',')]
    y: Vec<String>,
}

/// Inputs read so far; their bytes feed the envelope hash.
#[derive(Default)]
struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> CliResult<String> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.hasher.update((text.len() as u64).to_le_bytes());
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> CliResult<GraphFile> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|source| CliError::Input {
            path: path.to_path_buf(),
            source,
        })
    }

    fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

struct Output {
    params: Value,
    body: Body,
}

enum Body {
    Result(Value),
    Reports(Vec<CheckReport>),
}

fn envelope(inputs: Inputs, out: Output) -> (Value, bool) {
    let mut env = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "input_hash": inputs.digest(),
        "params": out.params,
    });
    let violated = match out.body {
        Body::Result(v) => {
            env["result"] = v;
            false
        }
        Body::Reports(reports) => {
            let violated = reports.iter().any(CheckReport::is_violated);
            env["summary"] = json!({
                "verdict": combine(reports.iter().map(|r| r.verdict)),
                "reports": reports.len(),
                "violated": reports.iter().filter(|r| r.is_violated()).count(),
            });
            env["reports"] = serde_json::to_value(reports).expect("reports serialize");
            violated
        }
    };
    (env, violated)
}

/// Runs the command line `argv` (program name first). Returns the process
/// exit code: 0 on success, 2 when a checker reports a violation, 1 on
/// input or resource errors.
pub fn run<I, S>(argv: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    if let Err(e) = CliqueBudget::from_env() {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_ERROR;
    }
    let mut inputs = Inputs::default();
    match execute(cli.command, &mut inputs) {
        Ok(out) => {
            let (env, violated) = envelope(inputs, out);
            let text = serde_json::to_string_pretty(&env).expect("envelope serializes");
            if writeln!(stdout, "{text}").is_err() {
                return EXIT_ERROR;
            }
            if violated {
                EXIT_VIOLATIONS
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn parse_ys(raw: &[String]) -> CliResult<Vec<BigRational>> {
    if raw.is_empty() {
        return Ok(default_y_grid());
    }
    raw.iter()
        .map(|s| {
            parse_rational(s).map_err(|_| {
                CliError::Usage(format!("invalid y value {s:?}: use p/q or an integer, not decimals"))
            })
        })
        .collect()
}

fn execute(command: Command, inputs: &mut Inputs) -> CliResult<Output> {
    match command {
        Command::Compute { graph, strategy, order } => {
            let file = inputs.graph(&graph)?;
            let params = json!({
                "command": "compute",
                "strategy": format!("{strategy:?}").to_lowercase(),
                "order": order,
            });
            Ok(Output {
                params,
                body: Body::Result(compute(&file, strategy, &order)?),
            })
        }
        Command::Zeta { graph, y, width_bits } => {
            let file = inputs.graph(&graph)?;
            let y0 = parse_ys(std::slice::from_ref(&y))?.remove(0);
            if y0 < BigRational::from_integer(0.into()) {
                return Err(CliError::Usage("y must be nonnegative".into()));
            }
            let p = compute_with(&file.graph, file.b, Strategy::Brute, CliqueBudget::default())?;
            let analysis: RootAnalysis = isolate_negative_roots(&p.section_at_y(&y0), &pow2_neg(width_bits))?;
            Ok(Output {
                params: json!({"command": "zeta", "y": y, "width_bits": width_bits}),
                body: Body::Result(json!(analysis)),
            })
        }
        Command::Bounds { graph } => {
            let file = inputs.graph(&graph)?;
            Ok(Output {
                params: json!({"command": "bounds"}),
                body: Body::Result(bounds(&file)?),
            })
        }
        Command::Spectrum { graph } => {
            let file = inputs.graph(&graph)?;
            let result = match eigenvalues(&file.graph) {
                Ok(profile) => json!({"regular": true, "profile": profile}),
                Err(Error::NotRegular { .. }) => {
                    let eig = adjacency_eigen(&file.graph)?;
                    json!({"regular": false, "eigenvalues": eig.values, "off_diagonal": eig.off_diagonal})
                }
                Err(e) => return Err(e.into()),
            };
            Ok(Output {
                params: json!({"command": "spectrum"}),
                body: Body::Result(result),
            })
        }
        Command::Corpus { seed } => {
            let instances = standard_corpus(seed);
            let budget = CliqueBudget::default();
            let reports = vec![
                check_strategy_agreement(&instances, budget)?,
                check_specializations(&instances, budget)?,
            ];
            Ok(Output {
                params: json!({"command": "corpus", "seed": seed, "instances": instances.len()}),
                body: Body::Reports(reports),
            })
        }
        Command::Check { suite, opts } => check(suite, &opts, inputs),
    }
}

fn compute(file: &GraphFile, strategy: StrategyArg, order: &[usize]) -> CliResult<Value> {
    let (g, b) = (&file.graph, file.b);
    let budget = CliqueBudget::default();
    let single = |s: Strategy| -> CliResult<(BivariatePoly, Option<Value>)> {
        if s != Strategy::Peo || order.is_empty() {
            return Ok((compute_with(g, b, s, budget)?, None));
        }
        let indices = order
            .iter()
            .map(|&l| {
                g.index_of_label(l)
                    .ok_or_else(|| CliError::Usage(format!("--order names unknown vertex {l}")))
            })
            .collect::<CliResult<Vec<_>>>()?;
        let peo = Peo::new(g, indices)?;
        let steps = cbpoly_peo_steps(g, b, &peo)?;
        let p = steps.last().cloned().unwrap_or_else(BivariatePoly::one);
        let shown: Vec<Value> = steps
            .iter()
            .map(|s| json!({"polynomial": s, "text": s.to_string()}))
            .collect();
        Ok((p, Some(json!(shown))))
    };
    let (p, strategies, steps) = match strategy {
        StrategyArg::All => {
            let mut used = vec![Strategy::Brute, Strategy::Vertex, Strategy::Edge];
            if is_chordal(g).is_some() {
                used.push(Strategy::Peo);
            }
            let mut results = Vec::new();
            let mut steps = None;
            for s in &used {
                let (p, st) = single(*s)?;
                steps = steps.or(st);
                results.push((s.name(), p));
            }
            if let Some((name, _)) = results.iter().find(|(_, p)| p != &results[0].1) {
                return Err(Error::Inconsistent(format!("strategy {name} disagrees with brute force")).into());
            }
            let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
            (results.swap_remove(0).1, names, steps)
        }
        other => {
            let s = match other {
                StrategyArg::Brute => Strategy::Brute,
                StrategyArg::Vertex => Strategy::Vertex,
                StrategyArg::Edge => Strategy::Edge,
                _ => Strategy::Peo,
            };
            let (p, steps) = single(s)?;
            (p, vec![s.name()], steps)
        }
    };
    let mut result = json!({
        "graph": {"n": g.n(), "b": g.set_labels(b)},
        "strategies": strategies,
        "polynomial": p,
        "text": p.to_string(),
        "clique_count": p.coefficient_sum().to_string(),
    });
    if let Some(steps) = steps {
        result["peo_steps"] = steps;
    }
    Ok(result)
}

fn bounds(file: &GraphFile) -> CliResult<Value> {
    let (g, b) = (&file.graph, file.b);
    let one = BigRational::from_integer(1.into());
    let mut result = json!({
        "extremal": extremal_params(g, b),
        "zeta_at_1": analysis::zeta(g, b, &one)?,
        "reports": [check_b_independence_bound(g, b)?, check_b_girth_bound(g, b)?],
    });
    if let Ok(profile) = eigenvalues(g) {
        result["spectral"] = match spectral_bounds(g, b, &profile) {
            Ok(sb) => sb.to_value(g),
            Err(Error::Budget(m)) => json!({"skipped": m}),
            Err(e) => return Err(e.into()),
        };
    }
    Ok(result)
}

fn budget_guard(claim: &str, r: bclique_core::Result<CheckReport>) -> CliResult<CheckReport> {
    match r {
        Err(Error::Budget(m)) => Ok(CheckReport::unresolved(claim, m)),
        other => Ok(other?),
    }
}

fn check(suite: Suite, opts: &CheckOpts, inputs: &mut Inputs) -> CliResult<Output> {
    let ys = parse_ys(&opts.y)?;
    let mut params = json!({
        "command": "check",
        "suite": format!("{suite:?}").to_lowercase(),
        "seed": opts.seed,
        "trials": opts.trials,
        "r": opts.r,
        "y": ys.iter().map(bclique_core::rational::format_rational).collect::<Vec<_>>(),
    });
    let needs_graph = suite != Suite::Hom;
    let file = match &opts.graph {
        Some(path) => Some(inputs.graph(path)?),
        None if needs_graph => {
            return Err(CliError::Usage("this suite needs --graph <file>".into()));
        }
        None => None,
    };
    let mut reports = Vec::new();
    if let Some(file) = &file {
        let (g, b) = (&file.graph, file.b);
        if matches!(suite, Suite::Monotonicity | Suite::All) {
            let order: Vec<usize> = (0..g.n()).collect();
            reports.extend(vertex_deletion_suite(g, b, &order, &ys)?);
            reports.extend(edge_deletion_suite(g, b, &g.edges(), &ys)?);
        }
        if matches!(suite, Suite::Bounds | Suite::All) {
            reports.push(check_b_independence_bound(g, b)?);
            reports.push(check_b_girth_bound(g, b)?);
            reports.push(check_neighborhood_geometry(g, opts.r));
        }
        if matches!(suite, Suite::Stability | Suite::All) {
            let p = compute_with(g, b, Strategy::Brute, CliqueBudget::default())?;
            reports.push(section_realrooted_scan(&p, &default_stability_grid())?);
            reports.push(check_main_stability_theorem(g, b, opts.r, opts.trials, opts.seed)?);
            reports.push(triangle_free_stability_check(g, b, opts.trials, opts.seed)?);
        }
        if matches!(suite, Suite::Spectral | Suite::All) {
            use bclique_core::spectral::{COEFFICIENT_BOUND, NEIGHBORHOOD_BOUND};
            reports.push(budget_guard(NEIGHBORHOOD_BOUND, check_common_neighborhood_bound(g, b))?);
            reports.push(budget_guard(COEFFICIENT_BOUND, check_coefficient_bounds(g, b))?);
            reports.push(check_effective_degree_bound(g, b, &ys)?);
            reports.push(check_root_bound(g, b, &ys)?);
        }
        if matches!(suite, Suite::Hom | Suite::All) {
            if let Some(w) = &file.weights {
                reports.extend(weight_checks(g, b, w, &ys)?);
            }
        }
    }
    if matches!(suite, Suite::Hom | Suite::All) {
        match &opts.map {
            Some(map) => {
                params["map"] = json!(true);
                reports.extend(hom_checks(map, inputs, &ys)?);
            }
            None if suite == Suite::Hom && file.as_ref().map_or(true, |f| f.weights.is_none()) => {
                return Err(CliError::Usage(
                    "check hom needs --map <file> (or a graph file with weights)".into(),
                ));
            }
            None => {}
        }
    }
    Ok(Output {
        params,
        body: Body::Reports(reports),
    })
}

fn weight_checks(g: &Graph, b: VertexSet, w: &WeightFunction, ys: &[BigRational]) -> CliResult<Vec<CheckReport>> {
    let unit = WeightFunction::uniform(b, 1);
    let mut points = weight_monotonicity_stated_grid();
    points.extend(weight_monotonicity_companion_grid());
    let root_ys: Vec<BigRational> = ys.iter().filter(|y| **y >= BigRational::from_integer(1.into())).cloned().collect();
    let root_ys = if root_ys.is_empty() {
        vec![BigRational::from_integer(1.into()), BigRational::from_integer(2.into())]
    } else {
        root_ys
    };
    Ok(vec![
        check_weight_monotonicity(g, b, &unit, w, &points)?,
        check_weighted_root_monotonicity(g, b, &unit, w, &root_ys)?,
    ])
}

fn hom_checks(map: &Path, inputs: &mut Inputs, ys: &[BigRational]) -> CliResult<Vec<CheckReport>> {
    let text = inputs.read(map)?;
    let hom_file = parse_homomorphism_file(&text).map_err(|source| CliError::Input {
        path: map.to_path_buf(),
        source,
    })?;
    let base = map.parent().unwrap_or_else(|| Path::new("."));
    let source = inputs.graph(&base.join(&hom_file.source_path))?;
    let target = inputs.graph(&base.join(&hom_file.target_path))?;
    let f = Homomorphism::from_label_pairs(source.graph.clone(), target.graph, &hom_file.pairs)
        .map_err(|source| CliError::Input {
            path: map.to_path_buf(),
            source,
        })?;
    let b_g = source.b;
    let w_g = source.weights.clone().unwrap_or_else(|| WeightFunction::uniform(b_g, 1));
    let mut reports = vec![validate_homomorphism(&f), check_clique_lift(&f)?];
    reports.push(check_hom_monotonicity(&f, b_g, &w_g, &hom_monotonicity_grid(), ys)?);
    Ok(reports)
}

/// Overall verdict of an envelope produced by [`run`].
pub fn envelope_verdict(envelope: &Value) -> Option<Verdict> {
    serde_json::from_value(envelope["summary"]["verdict"].clone()).ok()
}
