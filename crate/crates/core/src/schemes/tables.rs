//! Period-9 color tables for C_9p(1,k), p odd, gcd(9p,k) = 1.
//!
//! Entry `x` is `(vertex, in-edge, out-edge)` for every vertex `i ≡ x mod 9`,
//! where the in-edge comes from `i - k` and the out-edge goes to `i + k`.
//! Because `9 | n`, the out-edge at `x` is the in-edge at `x + k mod 9`.

use super::SchemeId;
use crate::coloring::Color;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NineOddCase {
    /// k ≡ 1 mod 9
    K1,
    /// k ≡ 4 mod 9
    K4,
    /// k ≡ 7 mod 9
    K7,
}

impl NineOddCase {
    pub fn from_k(k: usize) -> Option<Self> {
        match k % 9 {
            1 => Some(NineOddCase::K1),
            4 => Some(NineOddCase::K4),
            7 => Some(NineOddCase::K7),
            _ => None,
        }
    }

    pub fn residue(self) -> usize {
        match self {
            NineOddCase::K1 => 1,
            NineOddCase::K4 => 4,
            NineOddCase::K7 => 7,
        }
    }

    pub fn scheme(self) -> SchemeId {
        match self {
            NineOddCase::K1 => SchemeId::NinePOddK1Mod9,
            NineOddCase::K4 => SchemeId::NinePOddK4Mod9,
            NineOddCase::K7 => SchemeId::NinePOddK7Mod9,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub vertex: Color,
    pub in_edge: Color,
    pub out_edge: Color,
}

const fn t(vertex: Color, in_edge: Color, out_edge: Color) -> Triple {
    Triple { vertex, in_edge, out_edge }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleTable {
    pub case: NineOddCase,
    pub entries: [Triple; 9],
}

const PUBLISHED_K1: [Triple; 9] = [
    t(0, 1, 2), t(1, 2, 3), t(2, 3, 1),
    t(0, 1, 3), t(1, 3, 4), t(3, 2, 1),
    t(0, 1, 4), t(1, 4, 2), t(4, 2, 1),
];

const PUBLISHED_K4: [Triple; 9] = [
    t(0, 1, 2), t(1, 4, 2), t(3, 4, 1),
    t(0, 3, 1), t(1, 2, 3), t(4, 2, 1),
    t(0, 1, 4), t(1, 3, 4), t(2, 3, 1),
];

const PUBLISHED_K7: [Triple; 9] = [
    t(0, 1, 4), t(1, 2, 0), t(2, 0, 1),
    t(0, 1, 2), t(1, 3, 0), t(3, 0, 1),
    t(0, 1, 3), t(1, 4, 0), t(4, 0, 1),
];

impl TripleTable {
    /// The tables exactly as published.
    ///
    /// The k ≡ 1 and k ≡ 4 tables are not edge-consistent: entry 5 of the
    /// first has in-edge 2 where entry 4's out-edge is 4, and entry 3 of
    /// the second has its two edge colors swapped. See [`Self::repaired`].
    pub fn published(case: NineOddCase) -> Self {
        let entries = match case {
            NineOddCase::K1 => PUBLISHED_K1,
            NineOddCase::K4 => PUBLISHED_K4,
            NineOddCase::K7 => PUBLISHED_K7,
        };
        TripleTable { case, entries }
    }

    /// The published tables with the edge colors re-derived from the
    /// accompanying closed-form edge rules (out-edge at `x` is the vertex
    /// color two k-steps ahead, or one step ahead plus one with 5 wrapping
    /// to 2 when `x ≡ 1 mod 3`). Vertex colors and missing-color sets are
    /// unchanged; only `K1[5].in_edge` (2 -> 4) and `K4[3]` (edges swapped)
    /// differ.
    pub fn repaired(case: NineOddCase) -> Self {
        let mut table = Self::published(case);
        match case {
            NineOddCase::K1 => table.entries[5] = t(3, 4, 1),
            NineOddCase::K4 => table.entries[3] = t(0, 1, 3),
            NineOddCase::K7 => {}
        }
        table
    }

    pub fn entry(&self, i: usize) -> Triple {
        self.entries[i % 9]
    }

    /// Residues `x` whose out-edge color disagrees with the in-edge color
    /// recorded at `x + k mod 9`.
    pub fn edge_inconsistencies(&self) -> Vec<usize> {
        let k = self.case.residue();
        (0..9)
            .filter(|&x| self.entries[x].out_edge != self.entries[(x + k) % 9].in_edge)
            .collect()
    }

    /// Residues where this table differs from `other`.
    pub fn differences(&self, other: &TripleTable) -> Vec<usize> {
        (0..9).filter(|&x| self.entries[x] != other.entries[x]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CASES: [NineOddCase; 3] = [NineOddCase::K1, NineOddCase::K4, NineOddCase::K7];

    #[test]
    fn published_entries() {
        let k1 = TripleTable::published(NineOddCase::K1);
        assert_eq!(k1.entry(0), t(0, 1, 2));
        assert_eq!(k1.entry(4), t(1, 3, 4));
        assert_eq!(k1.entry(8), t(4, 2, 1));
        assert_eq!(TripleTable::published(NineOddCase::K4).entry(2), t(3, 4, 1));
        let k7 = TripleTable::published(NineOddCase::K7);
        assert_eq!(k7.entry(0), t(0, 1, 4));
        assert_eq!(k7.entry(5), t(3, 0, 1));
    }

    #[test]
    fn triples_are_proper() {
        for case in CASES {
            for table in [TripleTable::published(case), TripleTable::repaired(case)] {
                for e in table.entries {
                    assert!(e.vertex != e.in_edge && e.vertex != e.out_edge && e.in_edge != e.out_edge);
                    assert!(e.vertex < 5 && e.in_edge < 5 && e.out_edge < 5);
                }
            }
        }
    }

    #[test]
    fn published_consistency() {
        assert_eq!(TripleTable::published(NineOddCase::K1).edge_inconsistencies(), vec![4]);
        assert_eq!(TripleTable::published(NineOddCase::K4).edge_inconsistencies(), vec![3, 8]);
        assert!(TripleTable::published(NineOddCase::K7).edge_inconsistencies().is_empty());
        for case in CASES {
            assert!(TripleTable::repaired(case).edge_inconsistencies().is_empty(), "{case:?}");
        }
    }

    /// Vertex colors from the closed forms
    /// `i mod 3 + (⌊i/3⌋ mod 3)·⌊(i mod 3)/2⌋` (⌈i/3⌉ for k ≡ 4), and
    /// out-edge colors from the accompanying edge rules.
    fn closed_form(case: NineOddCase) -> [Triple; 9] {
        let vertex = |i: usize| -> Color {
            let block = match case {
                NineOddCase::K4 => i.div_ceil(3),
                _ => i / 3,
            };
            (i % 3 + (block % 3) * ((i % 3) / 2)) as Color
        };
        let k = case.residue();
        let out = |i: usize| -> Color {
            match case {
                NineOddCase::K7 => vertex((i + k + 1) % 9),
                _ if i % 3 == 1 => {
                    let c = vertex((i + k) % 9) + 1;
                    if c == 5 { 2 } else { c }
                }
                _ => vertex((i + 2 * k) % 9),
            }
        };
        std::array::from_fn(|x| t(vertex(x), out((x + 9 - k) % 9), out(x)))
    }

    #[test]
    fn repaired_tables_match_closed_forms() {
        for case in CASES {
            assert_eq!(TripleTable::repaired(case).entries, closed_form(case), "{case:?}");
        }
        assert_eq!(TripleTable::published(NineOddCase::K1).differences(&TripleTable::repaired(NineOddCase::K1)), vec![5]);
        assert_eq!(TripleTable::published(NineOddCase::K4).differences(&TripleTable::repaired(NineOddCase::K4)), vec![3]);
    }
}
