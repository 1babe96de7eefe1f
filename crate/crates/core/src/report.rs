//! Machine-readable verdicts produced by every claim checker.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
    /// No certified conclusion: a refinement budget ran out, or a
    /// refutation search found nothing.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim: String,
    pub verdict: Verdict,
    /// Always present for `Violated`; enough to replay the violation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn holds(claim: impl Into<String>) -> Self {
        Self::with_verdict(claim, Verdict::Holds)
    }

    pub fn violated(claim: impl Into<String>, witness: Value) -> Self {
        let mut r = Self::with_verdict(claim, Verdict::Violated);
        r.witness = Some(witness);
        r
    }

    pub fn not_applicable(claim: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::with_verdict(claim, Verdict::NotApplicable).note(reason)
    }

    pub fn unresolved(claim: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::with_verdict(claim, Verdict::Unresolved).note(reason)
    }

    fn with_verdict(claim: impl Into<String>, verdict: Verdict) -> Self {
        CheckReport {
            claim: claim.into(),
            verdict,
            witness: None,
            details: None,
            notes: Vec::new(),
        }
    }

    #[must_use]
    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    #[must_use]
    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// Self-contained serialization of a graph and a vertex subset, with
/// 1-based positions so that it can be rebuilt from a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphWitness {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub b: Vec<usize>,
    /// External labels of the positions `1..=n`.
    pub labels: Vec<usize>,
}

impl GraphWitness {
    pub fn new(g: &Graph, b: VertexSet) -> Self {
        GraphWitness {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect(),
            b: b.iter().map(|v| v + 1).collect(),
            labels: g.labels().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<(Graph, VertexSet)> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u - 1, v - 1)).collect();
        let g = Graph::from_edges(self.n, &edges)?.with_labels(self.labels.clone())?;
        let b: VertexSet = self.b.iter().map(|&v| v - 1).collect();
        g.check_set(b)?;
        Ok((g, b))
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("witness serializes")
    }
}

/// Worst verdict of a collection: any violation dominates, then unresolved,
/// then holds; all-not-applicable stays not-applicable.
pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut seen_any = false;
    let mut worst = Verdict::NotApplicable;
    for v in verdicts {
        worst = match (worst, v) {
            (_, Verdict::Violated) | (Verdict::Violated, _) => Verdict::Violated,
            (_, Verdict::Unresolved) | (Verdict::Unresolved, _) => Verdict::Unresolved,
            (_, Verdict::Holds) | (Verdict::Holds, _) => Verdict::Holds,
            _ => Verdict::NotApplicable,
        };
        seen_any = true;
    }
    if seen_any {
        worst
    } else {
        Verdict::NotApplicable
    }
}
