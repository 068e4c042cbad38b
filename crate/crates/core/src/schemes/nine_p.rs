//! C_9p(1,k) with 3 | 9p / gcd(9p, k).
//!
//! Offset-1 edges form the outer Hamiltonian cycle; offset-`k` edges form
//! the internal cycles.

use super::tables::{NineOddCase, TripleTable};
use super::{nine_p_route, verified, SchemeId, PALETTE};
use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{gcd, CirculantGraph, OffsetClass};
use crate::verify::missing_colors;

/// Even `p`, `k ≡ 0 mod 3`: vertices and internal edges from {0,1,2},
/// outer cycle alternating 3 and 4.
pub fn color_9p_even_k0(g: &CirculantGraph) -> Result<TotalColoring> {
    if nine_p_route(g) != Some(SchemeId::NinePEvenK0Mod3) {
        return Err(Error::param(format!("{g} is not C_9p(1,k) with p even and k ≡ 0 mod 3")));
    }
    let (n, k) = (g.n(), g.b());
    let q = gcd(n, k);
    let vertex = |i: usize| -> Color {
        let c = if q == k {
            i % 3 + (i / k) % 3
        } else {
            // (2i mod 3 - ⌊i/3⌋ mod 3) mod 3
            2 * i % 3 + 3 - (i / 3) % 3
        };
        (c % 3) as Color
    };

    let mut p = PartialColoring::empty(g, PALETTE);
    for i in 0..n {
        p.set_vertex(i, vertex(i));
    }
    for i in 0..n {
        let (here, there) = (vertex(i), vertex((i + k) % n));
        p.set_edge(g.edge_id(OffsetClass::B, i), ((2 * there + 3 - here) % 3) as Color);
        p.set_edge(g.edge_id(OffsetClass::A, i), 3 + (i % 2) as Color);
    }
    verified(g, SchemeId::NinePEvenK0Mod3, p.into_total()?)
}

/// Odd `p`, `gcd(9p,k) = 1`, `k ≡ 1, 4, 7 mod 9`, using the repaired tables.
pub fn color_9p_odd(g: &CirculantGraph, case: NineOddCase) -> Result<TotalColoring> {
    color_9p_odd_with_table(g, &TripleTable::repaired(case))
}

/// Same construction driven by an explicit table, e.g. the published one.
///
/// The internal edge `i -> i+k` takes the out-edge color of `i mod 9`. If
/// that disagrees with the in-edge color recorded for `i + k mod 9`, the
/// table cannot be realised and the result is `SchemeInvalid`.
pub fn color_9p_odd_with_table(g: &CirculantGraph, table: &TripleTable) -> Result<TotalColoring> {
    let scheme = table.case.scheme();
    if nine_p_route(g) != Some(scheme) {
        return Err(Error::param(format!("{g} does not match {scheme}")));
    }
    let bad = table.edge_inconsistencies();
    if !bad.is_empty() {
        return Err(Error::SchemeInvalid {
            scheme,
            detail: format!("table out-edge colors at residues {bad:?} disagree with the matching in-edge colors"),
            report: None,
        });
    }
    let n = g.n();
    let mut p = PartialColoring::empty(g, PALETTE);
    for i in 0..n {
        let e = table.entry(i);
        p.set_vertex(i, e.vertex);
        p.set_edge(g.edge_id(OffsetClass::B, i), e.out_edge);
    }
    let c = complete_outer_cycle(g, p)?;
    verified(g, scheme, c)
}

/// Colors the offset-1 edges `i -- i+1` with colors missing at both ends.
///
/// Walks `i = 0..n`, trying the common missing colors in ascending order
/// and backtracking chronologically when an edge has none left. Because the
/// missing sets are recomputed as edges are placed, consecutive outer edges
/// never repeat a color.
pub fn complete_outer_cycle(g: &CirculantGraph, mut partial: PartialColoring) -> Result<TotalColoring> {
    let n = g.n();
    if g.a() != 1 {
        return Err(Error::param(format!("{g} has no offset-1 outer cycle")));
    }
    if partial.vertex_colors.iter().any(Option::is_none) || partial.edge_colors[n..].iter().any(Option::is_none) {
        return Err(Error::CompletionFailure("vertices and internal edges must be colored first".into()));
    }
    for id in 0..n {
        partial.edge_colors[id] = None;
    }

    let candidates = |p: &PartialColoring, i: usize| -> Vec<Color> {
        let here = missing_colors(g, p, i);
        let there = missing_colors(g, p, (i + 1) % n);
        let mut common: Vec<Color> = here.intersection(&there).copied().collect();
        // pop() yields the smallest
        common.reverse();
        common
    };

    let mut stack: Vec<Vec<Color>> = vec![candidates(&partial, 0)];
    loop {
        let i = stack.len() - 1;
        match stack[i].pop() {
            Some(c) => {
                partial.set_edge(i, c);
                if i + 1 == n {
                    return partial.into_total();
                }
                let next = candidates(&partial, i + 1);
                stack.push(next);
            }
            None => {
                partial.edge_colors[i] = None;
                stack.pop();
                if stack.is_empty() {
                    return Err(Error::CompletionFailure(format!(
                        "no common missing colors complete the outer cycle of {g}"
                    )));
                }
            }
        }
    }
}
