//! C_3p(a,b), p odd, gcd(a,b) = 1, 3 | 3p / gcd(3p, b).
//!
//! The offset-`b` cycles `C_0, ..., C_{q-1}` (`q = gcd(n,b)`) are taken
//! with `C_i` starting at vertex `i·a`. Each cycle has length divisible by
//! 3, so its vertices and edges, read alternately along the cycle, can be
//! colored with a repeating 3-color pattern. The offset-`a` edge leaving a
//! vertex is colored by the class of that vertex's cycle.
//!
//! This is the construction as written, with an odd-index cycle starting
//! at color 1. It is run through the verifier like every other scheme and
//! fails loudly: `v_0` and `v_a` both start at color 1 when `q > 1`, and
//! every offset-`a` edge is colored 2 when `q = 1`.

use super::{three_p_roles, verified, SchemeId, PALETTE};
use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{gcd, CirculantGraph};

/// Repeating pattern for cycle `i`, starting at its first vertex.
fn cycle_pattern(i: usize, cycle_count: usize) -> [Color; 3] {
    match i {
        0 if cycle_count == 1 => [0, 3, 1],
        // (3, 1, 0) read from color 1
        0 => [1, 0, 3],
        1 => [1, 0, 4],
        _ if i % 2 == 0 => [0, 2, 1],
        _ => [1, 0, 2],
    }
}

fn a_edge_color(i: usize) -> Color {
    match i {
        0 => 2,
        _ if i % 2 == 1 => 3,
        _ => 4,
    }
}

pub fn color_3p_odd(g: &CirculantGraph) -> Result<TotalColoring> {
    let Some((ra, rb)) = three_p_roles(g) else {
        return Err(Error::param(format!("{g} is outside the odd 3p family")));
    };
    let n = g.n();
    let (class_a, class_b) = (g.class_of(ra).unwrap(), g.class_of(rb).unwrap());
    let q = gcd(n, rb);
    let len = n / q;

    // index of the cycle holding each residue class mod q
    let mut cycle_index = vec![0; q];
    for i in 0..q {
        cycle_index[(i * ra) % q] = i;
    }

    let mut p = PartialColoring::empty(g, PALETTE);
    for i in 0..q {
        let pattern = cycle_pattern(i, q);
        let start = (i * ra) % n;
        for t in 0..len {
            let v = (start + t * rb) % n;
            p.set_vertex(v, pattern[(2 * t) % 3]);
            p.set_edge(g.edge_id(class_b, v), pattern[(2 * t + 1) % 3]);
        }
    }
    for v in 0..n {
        p.set_edge(g.edge_id(class_a, v), a_edge_color(cycle_index[v % q]));
    }
    verified(g, SchemeId::ThreePOdd, p.into_total()?)
}
