//! Line-oriented graph file format.
//!
//! ```text
//! # comment
//! n 4
//! e 1 2
//! b 2 3
//! w 2 5
//! ```

use std::collections::BTreeMap;

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::weighted::WeightFunction;

/// Contents of a graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Empty when the file has no `b` line.
    pub b: VertexSet,
    /// Present only when the file has `w` lines; vertices of `B` without
    /// a `w` line get weight 1.
    pub weights: Option<WeightFunction>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| err(line, format!("{what} must be a nonnegative integer, got {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut graph: Option<Graph> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut b: Option<(usize, Vec<usize>)> = None;
    let mut weights: BTreeMap<usize, (usize, u64)> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let kind = toks.next().unwrap_or("");
        let args: Vec<&str> = toks.collect();

        let Some(g) = graph.as_ref() else {
            if kind != "n" {
                return Err(err(line, "first line must be `n <count>`"));
            }
            if args.len() != 1 {
                return Err(err(line, "expected `n <count>`"));
            }
            let n = parse_count(line, args[0], "vertex count")?;
            if n == 0 {
                return Err(err(line, "graph must have at least one vertex"));
            }
            if n > MAX_VERTICES {
                return Err(err(line, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
            }
            graph = Some(Graph::edgeless(n)?);
            continue;
        };
        let n = g.n();
        let vertex = |tok: &str| -> Result<usize> {
            let v = parse_count(line, tok, "vertex")?;
            if v == 0 || v > n {
                return Err(err(line, format!("vertex {v} out of range 1..={n}")));
            }
            Ok(v - 1)
        };

        match kind {
            "n" => return Err(err(line, "duplicate `n` line")),
            "e" => {
                if args.len() != 2 {
                    return Err(err(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (vertex(args[0])?, vertex(args[1])?);
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if let Some(&(_, _, first)) = edges.iter().find(|&&(a, c, _)| (a, c) == key) {
                    return Err(err(
                        line,
                        format!("duplicate edge {} {} (first on line {first})", u + 1, v + 1),
                    ));
                }
                edges.push((key.0, key.1, line));
            }
            "b" => {
                if let Some((first, _)) = b {
                    return Err(err(line, format!("duplicate `b` line (first on line {first})")));
                }
                let mut members = Vec::with_capacity(args.len());
                for tok in &args {
                    let v = vertex(tok)?;
                    if members.contains(&v) {
                        return Err(err(line, format!("vertex {} repeated in `b`", v + 1)));
                    }
                    members.push(v);
                }
                b = Some((line, members));
            }
            "w" => {
                if args.len() != 2 {
                    return Err(err(line, "expected `w <v> <weight>`"));
                }
                let v = vertex(args[0])?;
                let w: u64 = args[1].parse().map_err(|_| {
                    err(line, format!("weight must be a positive integer, got {:?}", args[1]))
                })?;
                if w == 0 {
                    return Err(err(line, "weight must be positive"));
                }
                if let Some((first, _)) = weights.insert(v, (line, w)) {
                    return Err(err(
                        line,
                        format!("duplicate weight for vertex {} (first on line {first})", v + 1),
                    ));
                }
            }
            other => return Err(err(line, format!("unknown record type {other:?}"))),
        }
    }

    let mut graph = graph.ok_or_else(|| err(text.lines().count().max(1), "missing `n <count>` line"))?;
    for &(u, v, line) in &edges {
        graph.insert_edge(u, v).map_err(|e| err(line, e.to_string()))?;
    }
    let b_set: VertexSet = b.map(|(_, m)| m.into_iter().collect()).unwrap_or_default();

    let weights = if weights.is_empty() {
        None
    } else {
        for (&v, &(line, _)) in &weights {
            if !b_set.contains(v) {
                return Err(err(line, format!("weight given for vertex {} which is not in B", v + 1)));
            }
        }
        let map = b_set
            .iter()
            .map(|v| (v, weights.get(&v).map_or(1, |&(_, w)| w)))
            .collect();
        Some(WeightFunction::new(b_set, map)?)
    };

    Ok(GraphFile {
        graph,
        b: b_set,
        weights,
    })
}
