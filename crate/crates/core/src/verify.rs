//! Total coloring verification and Type I / Type II classification.

use std::collections::BTreeSet;
use std::fmt;

use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, Edge};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Conflict {
    /// Adjacent vertices share a color.
    VertexVertex { u: usize, v: usize, color: Color },
    /// Two edges meeting at `at` share a color.
    EdgeEdge { first: Edge, second: Edge, at: usize, color: Color },
    /// An edge has the same color as one of its endpoints.
    VertexEdge { vertex: usize, edge: Edge, color: Color },
}

impl Conflict {
    pub fn color(&self) -> Color {
        match *self {
            Conflict::VertexVertex { color, .. }
            | Conflict::EdgeEdge { color, .. }
            | Conflict::VertexEdge { color, .. } => color,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Conflict::VertexVertex { .. } => "vertex-vertex",
            Conflict::EdgeEdge { .. } => "edge-edge",
            Conflict::VertexEdge { .. } => "vertex-edge",
        }
    }

    /// Re-checks this conflict against a coloring without re-running
    /// verification.
    pub fn holds_in(&self, g: &CirculantGraph, c: &TotalColoring) -> bool {
        let edge_color = |e: &Edge| c.edge_between(g, e.u, e.v);
        match self {
            Conflict::VertexVertex { u, v, color } => {
                g.is_adjacent(*u, *v) && c.vertex(*u) == *color && c.vertex(*v) == *color
            }
            Conflict::EdgeEdge { first, second, at, color } => {
                first != second
                    && [first.u, first.v].contains(at)
                    && [second.u, second.v].contains(at)
                    && edge_color(first) == Some(*color)
                    && edge_color(second) == Some(*color)
            }
            Conflict::VertexEdge { vertex, edge, color } => {
                [edge.u, edge.v].contains(vertex) && c.vertex(*vertex) == *color && edge_color(edge) == Some(*color)
            }
        }
    }
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conflict::VertexVertex { u, v, color } => write!(f, "vertices {u} and {v} both colored {color}"),
            Conflict::EdgeEdge { first, second, at, color } => write!(
                f,
                "edges {}-{} and {}-{} meet at {at} and are both colored {color}",
                first.u, first.v, second.u, second.v
            ),
            Conflict::VertexEdge { vertex, edge, color } => {
                write!(f, "vertex {vertex} and edge {}-{} both colored {color}", edge.u, edge.v)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub conflicts: Vec<Conflict>,
    pub colors_used: usize,
}

/// Lists every conflict in `c`. Does not stop at the first one.
pub fn verify(g: &CirculantGraph, c: &TotalColoring) -> Result<VerificationReport> {
    if c.vertex_count() != g.n() {
        return Err(Error::Coverage(format!(
            "coloring has {} vertices, graph {g} has {}",
            c.vertex_count(),
            g.n()
        )));
    }
    let mut conflicts = Vec::new();
    for id in 0..g.edge_count() {
        let e = g.edge(id);
        let ec = c.edge(id);
        if c.vertex(e.u) == c.vertex(e.v) {
            conflicts.push(Conflict::VertexVertex { u: e.u, v: e.v, color: c.vertex(e.u) });
        }
        for x in [e.u, e.v] {
            if c.vertex(x) == ec {
                conflicts.push(Conflict::VertexEdge { vertex: x, edge: e, color: ec });
            }
        }
    }
    // In a simple graph two distinct edges share at most one endpoint, so
    // scanning pairs per vertex reports each edge-edge clash once.
    for i in 0..g.n() {
        let inc = g.incident_edges(i);
        for x in 0..4 {
            for y in x + 1..4 {
                if c.edge(inc[x]) == c.edge(inc[y]) {
                    let (first, second) = {
                        let (p, q) = (g.edge(inc[x]), g.edge(inc[y]));
                        (p.min(q), p.max(q))
                    };
                    conflicts.push(Conflict::EdgeEdge { first, second, at: i, color: c.edge(inc[x]) });
                }
            }
        }
    }
    conflicts.sort();
    Ok(VerificationReport {
        valid: conflicts.is_empty(),
        conflicts,
        colors_used: c.distinct_colors().len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Valid with Δ+1 = 5 colors.
    TypeI,
    /// Valid with Δ+2 = 6 colors.
    TypeII,
    Invalid(InvalidReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    Conflicts(usize),
    /// A proper coloring, but with more than Δ+2 colors.
    ExceedsDeltaPlusTwo(usize),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::TypeI => f.write_str("I"),
            Classification::TypeII => f.write_str("II"),
            Classification::Invalid(InvalidReason::Conflicts(k)) => write!(f, "invalid ({k} conflicts)"),
            Classification::Invalid(InvalidReason::ExceedsDeltaPlusTwo(k)) => {
                write!(f, "invalid ({k} colors exceed Δ+2)")
            }
        }
    }
}

pub fn classify(g: &CirculantGraph, c: &TotalColoring) -> Classification {
    let report = match verify(g, c) {
        Ok(r) => r,
        Err(_) => return Classification::Invalid(InvalidReason::Conflicts(0)),
    };
    classify_report(g, &report)
}

pub fn classify_report(g: &CirculantGraph, report: &VerificationReport) -> Classification {
    let delta = g.max_degree();
    if !report.valid {
        Classification::Invalid(InvalidReason::Conflicts(report.conflicts.len()))
    } else if report.colors_used <= delta + 1 {
        Classification::TypeI
    } else if report.colors_used == delta + 2 {
        Classification::TypeII
    } else {
        Classification::Invalid(InvalidReason::ExceedsDeltaPlusTwo(report.colors_used))
    }
}

/// Palette colors not yet used in the closed star of `i`.
pub fn missing_colors(g: &CirculantGraph, c: &PartialColoring, i: usize) -> BTreeSet<Color> {
    let mut free: BTreeSet<Color> = (0..c.palette_size as Color).collect();
    if let Some(vc) = c.vertex_colors[i] {
        free.remove(&vc);
    }
    for e in g.incident_edges(i) {
        if let Some(ec) = c.edge_colors[e] {
            free.remove(&ec);
        }
    }
    free
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_sum_coloring() -> (CirculantGraph, TotalColoring) {
        let g = CirculantGraph::new(5, 1, 2).unwrap();
        let vertices = (0..5).map(|i| (2 * i % 5) as Color).collect();
        let edges = (0..10)
            .map(|id| {
                let (x, y) = g.edge_endpoints(id);
                ((x + y) % 5) as Color
            })
            .collect();
        (g, TotalColoring::new(vertices, edges, 5).unwrap())
    }

    #[test]
    fn sum_coloring_of_k5_is_valid() {
        let (g, c) = c5_sum_coloring();
        // brute force over all 15 elements
        let mut elems: Vec<(Vec<usize>, Color)> = (0..5).map(|i| (vec![i], c.vertex(i))).collect();
        for id in 0..10 {
            let (x, y) = g.edge_endpoints(id);
            elems.push((vec![x, y], c.edge(id)));
        }
        for p in 0..elems.len() {
            for q in p + 1..elems.len() {
                let touch = elems[p].0.iter().any(|v| elems[q].0.contains(v));
                let both_vertices = elems[p].0.len() == 1 && elems[q].0.len() == 1;
                let related = if both_vertices { g.is_adjacent(elems[p].0[0], elems[q].0[0]) } else { touch };
                assert!(!related || elems[p].1 != elems[q].1);
            }
        }
        let r = verify(&g, &c).unwrap();
        assert!(r.valid);
        assert!(r.conflicts.is_empty());
        assert_eq!(r.colors_used, 5);
        assert_eq!(classify(&g, &c), Classification::TypeI);
    }

    #[test]
    fn equal_adjacent_vertices_are_reported() {
        let (g, c) = c5_sum_coloring();
        let mut p = c.to_partial();
        p.vertex_colors[1] = p.vertex_colors[0];
        let bad = p.into_total().unwrap();
        let r = verify(&g, &bad).unwrap();
        assert!(!r.valid);
        assert!(r.conflicts.contains(&Conflict::VertexVertex { u: 0, v: 1, color: 0 }));
        for conflict in &r.conflicts {
            assert!(conflict.holds_in(&g, &bad), "{conflict}");
        }
        assert!(matches!(classify(&g, &bad), Classification::Invalid(InvalidReason::Conflicts(_))));
    }

    #[test]
    fn every_conflict_kind_is_found() {
        let g = CirculantGraph::new(7, 1, 2).unwrap();
        let c = TotalColoring::new(vec![0; 7], vec![0; 14], 5).unwrap();
        let r = verify(&g, &c).unwrap();
        let kinds: BTreeSet<&str> = r.conflicts.iter().map(Conflict::kind).collect();
        assert_eq!(kinds, BTreeSet::from(["edge-edge", "vertex-edge", "vertex-vertex"]));
        // 14 vertex pairs, 28 vertex-edge incidences, 7 * 6 edge pairs
        assert_eq!(r.conflicts.len(), 14 + 28 + 42);
    }

    #[test]
    fn coverage_mismatch_is_an_error() {
        let g = CirculantGraph::new(7, 1, 2).unwrap();
        let c = TotalColoring::new(vec![0; 5], vec![0; 10], 5).unwrap();
        assert!(matches!(verify(&g, &c), Err(Error::Coverage(_))));
    }

    #[test]
    fn classification_by_color_count() {
        let g = CirculantGraph::new(7, 1, 2).unwrap();
        let report = |colors_used| VerificationReport { valid: true, conflicts: vec![], colors_used };
        assert_eq!(classify_report(&g, &report(5)), Classification::TypeI);
        assert_eq!(classify_report(&g, &report(6)), Classification::TypeII);
        assert_eq!(
            classify_report(&g, &report(7)),
            Classification::Invalid(InvalidReason::ExceedsDeltaPlusTwo(7))
        );
    }

    #[test]
    fn missing_color_examples() {
        let g = CirculantGraph::new(9, 1, 4).unwrap();
        let mut p = PartialColoring::empty(&g, 5);
        // vertex 1 with star (1, 2, 3) on its offset-4 edges
        p.set_vertex(1, 1);
        p.set_edge(g.incident_edges(1)[3], 2);
        p.set_edge(g.incident_edges(1)[2], 3);
        assert_eq!(missing_colors(&g, &p, 1), BTreeSet::from([0, 4]));

        p.set_vertex(0, 0);
        p.set_edge(g.incident_edges(0)[3], 1);
        p.set_edge(g.incident_edges(0)[2], 2);
        assert_eq!(missing_colors(&g, &p, 0), BTreeSet::from([3, 4]));

        let (g, c) = c5_sum_coloring();
        for i in 0..5 {
            assert!(missing_colors(&g, &c.to_partial(), i).is_empty());
        }
    }
}
