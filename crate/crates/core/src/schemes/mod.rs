//! Constructive 5-total-colorings for families of C_n(a,b).
//!
//! Every construction runs the verifier on its own output and returns
//! [`Error::SchemeInvalid`] instead of an improper coloring.

mod five_p;
mod nine_p;
mod six_p;
mod tables;
mod three_p;

use std::fmt;
use std::str::FromStr;

pub use five_p::{color_5p, FivePCase};
pub use nine_p::{color_9p_even_k0, color_9p_odd, color_9p_odd_with_table, complete_outer_cycle};
pub use six_p::color_6p;
pub use tables::{NineOddCase, Triple, TripleTable};
pub use three_p::color_3p_odd;

use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::{gcd, CirculantGraph};
use crate::verify::verify;

/// Palette size of every construction here.
pub const PALETTE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeId {
    FivePCase1,
    FivePCase2,
    FivePCase3,
    ThreePOdd,
    NinePEvenK0Mod3,
    NinePOddK1Mod9,
    NinePOddK4Mod9,
    NinePOddK7Mod9,
    SixP,
    /// C_6p(1,k) with k ≢ 0 mod 3, whose coloring is only cited, not constructed.
    DelegatedKt,
    NotCovered,
}

impl SchemeId {
    pub const ALL: [SchemeId; 11] = [
        SchemeId::FivePCase1,
        SchemeId::FivePCase2,
        SchemeId::FivePCase3,
        SchemeId::ThreePOdd,
        SchemeId::NinePEvenK0Mod3,
        SchemeId::NinePOddK1Mod9,
        SchemeId::NinePOddK4Mod9,
        SchemeId::NinePOddK7Mod9,
        SchemeId::SixP,
        SchemeId::DelegatedKt,
        SchemeId::NotCovered,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SchemeId::FivePCase1 => "5p-case1",
            SchemeId::FivePCase2 => "5p-case2",
            SchemeId::FivePCase3 => "5p-case3",
            SchemeId::ThreePOdd => "3p-odd",
            SchemeId::NinePEvenK0Mod3 => "9p-even-k0",
            SchemeId::NinePOddK1Mod9 => "9p-odd-k1",
            SchemeId::NinePOddK4Mod9 => "9p-odd-k4",
            SchemeId::NinePOddK7Mod9 => "9p-odd-k7",
            SchemeId::SixP => "6p",
            SchemeId::DelegatedKt => "delegated-kt",
            SchemeId::NotCovered => "not-covered",
        }
    }

    /// True for tags that have a construction behind them.
    pub fn is_constructive(self) -> bool {
        !matches!(self, SchemeId::DelegatedKt | SchemeId::NotCovered)
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::Format(format!("unknown scheme tag {s:?}")))
    }
}

/// Picks the construction for `g`, trying the 5p family, then 9p(1,k),
/// then 3p, then 6p. Overlapping hypotheses resolve by that order.
pub fn select_scheme(g: &CirculantGraph) -> SchemeId {
    if let Some(case) = FivePCase::for_graph(g) {
        return case.scheme();
    }
    if let Some(id) = nine_p_route(g).filter(|id| {
        matches!(
            id,
            SchemeId::NinePEvenK0Mod3 | SchemeId::NinePOddK1Mod9 | SchemeId::NinePOddK4Mod9 | SchemeId::NinePOddK7Mod9
        )
    }) {
        return id;
    }
    if three_p_roles(g).is_some() {
        return SchemeId::ThreePOdd;
    }
    if six_p_applies(g) {
        return SchemeId::SixP;
    }
    if kt_applies(g) {
        return SchemeId::DelegatedKt;
    }
    SchemeId::NotCovered
}

/// Runs the construction named by `id`.
pub fn apply(g: &CirculantGraph, id: SchemeId) -> Result<TotalColoring> {
    match id {
        SchemeId::FivePCase1 => color_5p(g, FivePCase::Case1),
        SchemeId::FivePCase2 => color_5p(g, FivePCase::Case2),
        SchemeId::FivePCase3 => color_5p(g, FivePCase::Case3),
        SchemeId::ThreePOdd => color_3p_odd(g),
        SchemeId::NinePEvenK0Mod3 => color_9p_even_k0(g),
        SchemeId::NinePOddK1Mod9 => color_9p_odd(g, NineOddCase::K1),
        SchemeId::NinePOddK4Mod9 => color_9p_odd(g, NineOddCase::K4),
        SchemeId::NinePOddK7Mod9 => color_9p_odd(g, NineOddCase::K7),
        SchemeId::SixP => color_6p(g),
        SchemeId::DelegatedKt | SchemeId::NotCovered => {
            Err(Error::NotCovered { n: g.n(), a: g.a(), b: g.b() })
        }
    }
}

/// Selects and applies a scheme in one step.
pub fn color(g: &CirculantGraph) -> Result<(SchemeId, TotalColoring)> {
    let id = select_scheme(g);
    apply(g, id).map(|c| (id, c))
}

/// How the C_9p(1,k) construction routes `g`, or `None` if `g` is not of the
/// form C_9p(1,k) with `3 | 9p / gcd(9p, k)`.
///
/// Besides the constructive cases this reports the hand-offs: odd `p` with
/// `gcd(9p,k) > 1` goes to the 3p construction, even `p` with `k ≢ 0 mod 3`
/// is the cited C_6p(1,k) result, and odd `p` with `k ≡ 2, 5, 8 mod 9` is
/// not covered.
pub fn nine_p_route(g: &CirculantGraph) -> Option<SchemeId> {
    let (n, k) = (g.n(), g.b());
    if g.a() != 1 || n % 9 != 0 || (n / gcd(n, k)) % 3 != 0 {
        return None;
    }
    let p = n / 9;
    let id = if p % 2 == 0 {
        if k % 3 == 0 {
            SchemeId::NinePEvenK0Mod3
        } else {
            SchemeId::DelegatedKt
        }
    } else if gcd(n, k) != 1 {
        SchemeId::ThreePOdd
    } else {
        match NineOddCase::from_k(k) {
            Some(case) => case.scheme(),
            None => SchemeId::NotCovered,
        }
    };
    Some(id)
}

/// Offsets in the roles `(a, b)` of the 3p construction: `n = 3p` with `p`
/// odd, `gcd(a,b) = 1`, and 3 dividing the length of the offset-`b` cycles.
/// Tries the given order first, then the swapped one.
pub fn three_p_roles(g: &CirculantGraph) -> Option<(usize, usize)> {
    let n = g.n();
    if n % 3 != 0 || (n / 3) % 2 == 0 || gcd(g.a(), g.b()) != 1 {
        return None;
    }
    [(g.a(), g.b()), (g.b(), g.a())]
        .into_iter()
        .find(|&(_, b)| (n / gcd(n, b)) % 3 == 0)
}

pub fn six_p_applies(g: &CirculantGraph) -> bool {
    let n = g.n();
    if n % 6 != 0 || g.a() % 3 == 0 || g.b() % 3 == 0 {
        return false;
    }
    (n / 6) % 2 == 0 || gcd(g.a(), g.b()) == 1
}

pub fn kt_applies(g: &CirculantGraph) -> bool {
    let n = g.n();
    n % 6 == 0 && g.a() == 1 && g.b() % 3 != 0 && n / 6 >= 3 && g.b() < n / 2
}

/// Verifies a finished construction, turning conflicts into an error.
pub(crate) fn verified(g: &CirculantGraph, scheme: SchemeId, c: TotalColoring) -> Result<TotalColoring> {
    let report = verify(g, &c)?;
    if report.valid && report.colors_used <= PALETTE {
        return Ok(c);
    }
    let detail = match report.conflicts.first() {
        Some(first) => format!("{} conflicts on {g}, first: {first}", report.conflicts.len()),
        None => format!("{} colors used on {g}", report.colors_used),
    };
    Err(Error::SchemeInvalid { scheme, detail, report: Some(Box::new(report)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::admissible_pairs;

    fn graph(n: usize, a: usize, b: usize) -> CirculantGraph {
        CirculantGraph::new(n, a, b).unwrap()
    }

    #[test]
    fn selector_examples() {
        assert_eq!(select_scheme(&graph(10, 1, 4)), SchemeId::FivePCase1);
        assert_eq!(select_scheme(&graph(5, 1, 2)), SchemeId::FivePCase3);
        // C_9(1,3): gcd(9,3) = 3 and 9/3 = 3, so the 9p(1,k) route hands it to the 3p construction
        assert_eq!(nine_p_route(&graph(9, 1, 3)), Some(SchemeId::ThreePOdd));
        assert_eq!(select_scheme(&graph(9, 1, 3)), SchemeId::ThreePOdd);
        assert_eq!(select_scheme(&graph(9, 1, 4)), SchemeId::NinePOddK4Mod9);
        assert_eq!(select_scheme(&graph(18, 1, 3)), SchemeId::NinePEvenK0Mod3);
        // 6p hypotheses hold for every C_6p(1,k) with k ≢ 0 mod 3, so they win over the delegation
        assert_eq!(select_scheme(&graph(12, 1, 2)), SchemeId::SixP);
        assert_eq!(select_scheme(&graph(7, 1, 2)), SchemeId::NotCovered);
    }

    #[test]
    fn selector_is_total_and_dispatch_never_panics() {
        for n in 5..=40 {
            for (a, b) in admissible_pairs(n) {
                let g = graph(n, a, b);
                let id = select_scheme(&g);
                match apply(&g, id) {
                    Ok(c) => assert!(verify(&g, &c).unwrap().valid),
                    Err(Error::SchemeInvalid { .. }) => assert!(id.is_constructive()),
                    Err(Error::NotCovered { .. }) => assert!(!id.is_constructive()),
                    Err(e) => panic!("{g}: unexpected {e}"),
                }
            }
        }
    }

    #[test]
    fn tags_round_trip() {
        for id in SchemeId::ALL {
            assert_eq!(id.tag().parse::<SchemeId>().unwrap(), id);
        }
        assert!("5p".parse::<SchemeId>().is_err());
    }

    #[test]
    fn schemes_are_deterministic() {
        for (n, a, b) in [(10, 1, 4), (18, 1, 3), (27, 1, 4), (12, 1, 2)] {
            let g = graph(n, a, b);
            assert_eq!(color(&g).unwrap(), color(&g).unwrap());
        }
    }
}
