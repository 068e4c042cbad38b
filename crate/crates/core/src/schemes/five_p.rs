//! C_5p(a,b) with a, b ≢ 0 mod 5.
//!
//! Vertex `i` gets `i mod 5`. Each offset is oriented so that its residue
//! mod 5 is 1 or 2 (an offset with residue 3 or 4 is walked backwards,
//! i.e. used as `n - d`), and the edge leaving `i` along that orientation
//! gets `(i + shift) mod 5`.

use super::{verified, SchemeId, PALETTE};
use crate::coloring::{Color, PartialColoring, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{CirculantGraph, OffsetClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FivePCase {
    /// Both oriented offsets ≡ 1 mod 5.
    Case1,
    /// Both oriented offsets ≡ 2 mod 5.
    Case2,
    /// One oriented offset ≡ 1, the other ≡ 2.
    Case3,
}

/// An offset walked in the direction that makes its residue 1 or 2.
#[derive(Clone, Copy, Debug)]
struct Oriented {
    class: OffsetClass,
    /// Signed step: `+d` or `-d`.
    step: isize,
    residue: usize,
}

fn orient(g: &CirculantGraph, class: OffsetClass) -> Oriented {
    let d = g.offset(class);
    match d % 5 {
        r @ (1 | 2) => Oriented { class, step: d as isize, residue: r },
        r => Oriented { class, step: -(d as isize), residue: 5 - r },
    }
}

impl FivePCase {
    pub fn for_graph(g: &CirculantGraph) -> Option<FivePCase> {
        if g.n() % 5 != 0 || g.a() % 5 == 0 || g.b() % 5 == 0 {
            return None;
        }
        let (ra, rb) = (orient(g, OffsetClass::A).residue, orient(g, OffsetClass::B).residue);
        Some(match (ra, rb) {
            (1, 1) => FivePCase::Case1,
            (2, 2) => FivePCase::Case2,
            _ => FivePCase::Case3,
        })
    }

    pub fn scheme(self) -> SchemeId {
        match self {
            FivePCase::Case1 => SchemeId::FivePCase1,
            FivePCase::Case2 => SchemeId::FivePCase2,
            FivePCase::Case3 => SchemeId::FivePCase3,
        }
    }

    /// Color shifts for the (first, second) role offsets.
    fn shifts(self) -> (usize, usize) {
        match self {
            FivePCase::Case1 => (2, 4),
            FivePCase::Case2 => (3, 4),
            FivePCase::Case3 => (3, 1),
        }
    }
}

pub fn color_5p(g: &CirculantGraph, case: FivePCase) -> Result<TotalColoring> {
    if FivePCase::for_graph(g) != Some(case) {
        return Err(Error::param(format!("{g} does not satisfy the residue pattern of {case:?}")));
    }
    let n = g.n();
    let (oa, ob) = (orient(g, OffsetClass::A), orient(g, OffsetClass::B));
    // in Case 3 the residue-1 offset takes the first role
    let roles = if case == FivePCase::Case3 && oa.residue == 2 { [ob, oa] } else { [oa, ob] };
    let (s1, s2) = case.shifts();

    let mut p = PartialColoring::empty(g, PALETTE);
    for i in 0..n {
        p.set_vertex(i, (i % 5) as Color);
    }
    for (role, shift) in roles.into_iter().zip([s1, s2]) {
        for i in 0..n {
            let head = g.shift(i, role.step);
            let tail = if role.step > 0 { i } else { head };
            p.set_edge(g.edge_id(role.class, tail), ((i + shift) % 5) as Color);
        }
    }
    verified(g, case.scheme(), p.into_total()?)
}
