use serde::Serialize;
use serde_json::json;

use super::{clique_number, is_chordal, vertex_connectivity, Graph, VertexSet};
use crate::report::{CheckReport, Verdict};

pub const CLAIM: &str = "neighborhood-geometry";

/// The three conditions on the common neighborhood of one clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodGeometry {
    pub clique: Vec<usize>,
    pub neighborhood: Vec<usize>,
    pub nonempty: bool,
    /// A triangle inside the neighborhood, if any (labels).
    pub triangle: Option<[usize; 3]>,
    pub chordal: bool,
}

impl NeighborhoodGeometry {
    pub fn holds(&self) -> bool {
        self.nonempty && self.triangle.is_none() && self.chordal
    }
}

pub fn neighborhood_geometry(g: &Graph, clique: VertexSet) -> NeighborhoodGeometry {
    let nbhd = if clique.is_empty() {
        g.vertices()
    } else {
        g.common_neighbors_in(clique, g.vertices())
    };
    let (sub, _) = g.induced_subgraph(nbhd);
    let triangle = find_triangle(&sub).map(|t| t.map(|v| sub.label(v)));
    NeighborhoodGeometry {
        clique: g.set_labels(clique),
        neighborhood: g.set_labels(nbhd),
        nonempty: !nbhd.is_empty(),
        triangle,
        chordal: is_chordal(&sub).is_some(),
    }
}

pub(crate) fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        if let Some(w) = common.iter().find(|&w| w > v) {
            return Some([u, v, w]);
        }
    }
    None
}

fn r_cliques(g: &Graph, r: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, r: usize, acc: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        if acc.len() == r {
            out.push(acc);
            return;
        }
        for v in cand {
            rec(g, r, acc.with(v), cand.after(v).intersection(g.neighbors(v)), out);
        }
    }
    let mut out = Vec::new();
    rec(g, r, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

/// For every `r`-clique, its common neighborhood is nonempty, triangle-free
/// and chordal, provided the graph is `r`-connected, `K_{r+3}`-free and
/// chordal. Hypothesis failures give `NotApplicable`; the per-clique
/// conditions are still evaluated and recorded in the details.
pub fn check_neighborhood_geometry(g: &Graph, r: usize) -> CheckReport {
    let kappa = vertex_connectivity(g);
    let omega = clique_number(g);
    let chordal = is_chordal(g).is_some();

    let per_clique: Vec<NeighborhoodGeometry> = r_cliques(g, r)
        .into_iter()
        .map(|k| neighborhood_geometry(g, k))
        .collect();
    let first_failure = per_clique.iter().find(|c| !c.holds()).cloned();
    let details = json!({
        "r": r,
        "connectivity": kappa,
        "clique_number": omega,
        "chordal": chordal,
        "cliques": per_clique,
    });

    let mut failing = Vec::new();
    if kappa < r {
        failing.push(format!("not {r}-connected (connectivity {kappa})"));
    }
    if omega >= r + 3 {
        failing.push(format!("not K_{}-free (clique number {omega})", r + 3));
    }
    if !chordal {
        failing.push("not chordal".to_string());
    }
    let mut report = if !failing.is_empty() {
        CheckReport::not_applicable(CLAIM, format!("hypotheses fail: {}", failing.join("; ")))
    } else if let Some(bad) = first_failure {
        CheckReport::violated(
            CLAIM,
            json!({
                "graph": crate::report::GraphWitness::new(g, VertexSet::EMPTY),
                "r": r,
                "clique": bad,
            }),
        )
    } else {
        CheckReport::holds(CLAIM)
    };
    if omega == g.n() && g.n() > 0 {
        report = report.note(format!(
            "complete graph: connectivity taken as n-1 = {}",
            g.n() - 1
        ));
    }
    debug_assert!(report.verdict != Verdict::Violated || report.witness.is_some());
    report.with_details(details)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn worked_example() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 3)]).unwrap()
    }

    #[test]
    fn worked_example_clique_holds_but_report_is_not_applicable() {
        let g = worked_example();
        let geo = neighborhood_geometry(&g, [1, 2].into_iter().collect());
        assert_eq!(geo.neighborhood, vec![4]);
        assert!(geo.holds());
        let report = check_neighborhood_geometry(&g, 2);
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.notes[0].contains("connectivity 1"));
        assert_eq!(report.details.unwrap()["connectivity"], 1);
    }

    #[test]
    fn k4_with_r1_is_not_applicable_despite_triangles() {
        let report = check_neighborhood_geometry(&complete(4), 1);
        assert_eq!(report.verdict, Verdict::NotApplicable);
        assert!(report.notes.iter().any(|n| n.contains("K_4-free")));
        let geo = neighborhood_geometry(&complete(4), VertexSet::singleton(0));
        assert!(geo.triangle.is_some());
    }

    #[test]
    fn star_with_r1_holds() {
        let report = check_neighborhood_geometry(&star(3), 1);
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn path_with_r1_holds() {
        // every vertex of a path has a nonempty independent neighborhood
        assert_eq!(check_neighborhood_geometry(&path(4), 1).verdict, Verdict::Holds);
    }
}
