//! C_6p(a,b) with a, b ≢ 0 mod 3, and p even or gcd(a,b) = 1.
//!
//! Vertices get `i mod 3`. One offset is colored from {0,1,2} by
//! `(2·c(head) - c(tail)) mod 3`; the other offset's cycles alternate 3
//! and 4, which needs them to have even length. Offset `b` takes the
//! alternating colors unless its cycles are odd, in which case the roles
//! swap.

use super::{six_p_applies, verified, SchemeId, PALETTE};
use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{gcd, CirculantGraph, OffsetClass};

fn has_even_cycles(g: &CirculantGraph, class: OffsetClass) -> bool {
    (g.n() / gcd(g.n(), g.offset(class))) % 2 == 0
}

pub fn color_6p(g: &CirculantGraph) -> Result<TotalColoring> {
    if !six_p_applies(g) {
        return Err(Error::param(format!("{g} is outside the 6p family")));
    }
    let (formula, alternating) = if has_even_cycles(g, OffsetClass::B) {
        (OffsetClass::A, OffsetClass::B)
    } else if has_even_cycles(g, OffsetClass::A) {
        (OffsetClass::B, OffsetClass::A)
    } else {
        return Err(Error::SchemeInvalid {
            scheme: SchemeId::SixP,
            detail: format!("both offsets of {g} generate odd cycles, so neither can alternate colors 3 and 4"),
            report: None,
        });
    };
    let n = g.n();
    let f = g.offset(formula);
    let d = g.offset(alternating);

    let mut p = PartialColoring::empty(g, PALETTE);
    for i in 0..n {
        p.set_vertex(i, (i % 3) as Color);
        let (tail, head) = (i % 3, ((i + f) % n) % 3);
        p.set_edge(g.edge_id(formula, i), ((2 * head + 3 - tail) % 3) as Color);
    }
    let cycles = g.cycle_decomposition(d)?;
    for cycle in &cycles.cycles {
        for (t, &v) in cycle.iter().enumerate() {
            p.set_edge(g.edge_id(alternating, v), 3 + (t % 2) as Color);
        }
    }
    verified(g, SchemeId::SixP, p.into_total()?)
}
