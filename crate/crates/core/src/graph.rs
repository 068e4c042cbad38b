//! Four-regular circulant graphs C_n(a,b).
//!
//! Vertices are `0..n`. Every edge joins `i` and `(i + d) mod n` for an
//! offset `d` in `{a, b}`; we call `i` the tail of that edge. Edges are
//! identified by a dense index: the offset-`a` edge with tail `i` is `i`,
//! and the offset-`b` edge with tail `i` is `n + i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two offsets generated an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OffsetClass {
    A,
    B,
}

/// An undirected edge stored as `(u, v)` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// The generating offset value (`a` or `b`).
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    n: usize,
    a: usize,
    b: usize,
}

impl CirculantGraph {
    /// Builds C_n(a,b), requiring `1 <= a < b <= (n-1)/2`.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        if n < 5 {
            return Err(Error::param(format!("n = {n} is below 5, no four-regular circulant exists")));
        }
        let max = (n - 1) / 2;
        if !(1 <= a && a < b && b <= max) {
            return Err(Error::param(format!(
                "offsets ({a}, {b}) violate 1 <= a < b <= floor((n-1)/2) = {max} for n = {n}"
            )));
        }
        Ok(CirculantGraph { n, a, b })
    }

    /// Builds the graph from arbitrary offsets by first mapping them to
    /// their canonical representative.
    pub fn from_any(n: usize, a: usize, b: usize) -> Result<Self> {
        let (a, b) = canonical_params(n, a, b)?;
        CirculantGraph::new(n, a, b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn max_degree(&self) -> usize {
        4
    }

    pub fn edge_count(&self) -> usize {
        2 * self.n
    }

    pub fn offset(&self, class: OffsetClass) -> usize {
        match class {
            OffsetClass::A => self.a,
            OffsetClass::B => self.b,
        }
    }

    pub fn class_of(&self, offset: usize) -> Option<OffsetClass> {
        if offset == self.a {
            Some(OffsetClass::A)
        } else if offset == self.b {
            Some(OffsetClass::B)
        } else {
            None
        }
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::Index { vertex: i, n: self.n })
        }
    }

    /// `(i + d) mod n` for a possibly negative shift.
    pub fn shift(&self, i: usize, d: isize) -> usize {
        (i as isize + d).rem_euclid(self.n as isize) as usize
    }

    /// `[(i+a), (i-a), (i+b), (i-b)]`, all mod n.
    pub fn neighbors(&self, i: usize) -> Result<[usize; 4]> {
        self.check_vertex(i)?;
        Ok(self.neighbors_unchecked(i))
    }

    pub(crate) fn neighbors_unchecked(&self, i: usize) -> [usize; 4] {
        let (n, a, b) = (self.n, self.a, self.b);
        [(i + a) % n, (i + n - a) % n, (i + b) % n, (i + n - b) % n]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Dense index of the edge with the given tail and offset class.
    pub fn edge_id(&self, class: OffsetClass, tail: usize) -> usize {
        match class {
            OffsetClass::A => tail % self.n,
            OffsetClass::B => self.n + tail % self.n,
        }
    }

    /// Index of the edge `{u, v}`, if it exists.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let d = (v + self.n - u) % self.n;
        if d == self.a {
            Some(u)
        } else if d == self.n - self.a {
            Some(v)
        } else if d == self.b {
            Some(self.n + u)
        } else if d == self.n - self.b {
            Some(self.n + v)
        } else {
            None
        }
    }

    /// The edge `(tail, tail + offset)` behind a dense index.
    pub fn edge_endpoints(&self, id: usize) -> (usize, usize) {
        let (class, tail) = self.edge_class_tail(id);
        (tail, (tail + self.offset(class)) % self.n)
    }

    pub fn edge_class_tail(&self, id: usize) -> (OffsetClass, usize) {
        assert!(id < 2 * self.n, "edge index {id} out of range");
        if id < self.n {
            (OffsetClass::A, id)
        } else {
            (OffsetClass::B, id - self.n)
        }
    }

    pub fn edge(&self, id: usize) -> Edge {
        let (class, _) = self.edge_class_tail(id);
        let (x, y) = self.edge_endpoints(id);
        Edge { u: x.min(y), v: x.max(y), offset: self.offset(class) }
    }

    /// All `2n` edges in index order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.edge_count()).map(|id| self.edge(id)).collect()
    }

    /// Edge indices incident to `i`: out-a, in-a, out-b, in-b.
    pub fn incident_edges(&self, i: usize) -> [usize; 4] {
        let (n, a, b) = (self.n, self.a, self.b);
        [i, (i + n - a) % n, n + i, n + (i + n - b) % n]
    }

    /// Splits the offset-`offset` edges into their `gcd(n, offset)` cycles.
    pub fn cycle_decomposition(&self, offset: usize) -> Result<CycleDecomposition> {
        if self.class_of(offset).is_none() {
            return Err(Error::param(format!(
                "offset {offset} is neither a = {} nor b = {}",
                self.a, self.b
            )));
        }
        let count = gcd(self.n, offset);
        let length = self.n / count;
        let cycles = (0..count)
            .map(|s| (0..length).map(|t| (s + t * offset) % self.n).collect())
            .collect();
        Ok(CycleDecomposition { offset, cycle_count: count, cycle_length: length, cycles })
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({},{})", self.n, self.a, self.b)
    }
}

/// The offset-`d` edges of a circulant split into disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub offset: usize,
    pub cycle_count: usize,
    pub cycle_length: usize,
    /// Cycle `s` is `(s, s+d, s+2d, ...)` mod n for `s < cycle_count`.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Which cycle a vertex lies on.
    pub fn cycle_of(&self, v: usize) -> usize {
        v % self.cycle_count
    }
}

pub fn gcd(mut x: usize, mut y: usize) -> usize {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

/// Maps `C_n(a,b)` to the isomorphic parameterization with each offset
/// replaced by `min(d, n-d)` and the pair sorted.
///
/// Offsets may be given anywhere in `1..n` (values `>= n` are reduced).
pub fn canonical_params(n: usize, a: usize, b: usize) -> Result<(usize, usize)> {
    if n < 5 {
        return Err(Error::param(format!("n = {n} is below 5")));
    }
    let (a, b) = (a % n, b % n);
    if a == 0 || b == 0 {
        return Err(Error::param("an offset is 0 mod n, which would add loops"));
    }
    let fold = |d: usize| d.min(n - d);
    let (fa, fb) = (fold(a), fold(b));
    if 2 * fa == n || 2 * fb == n {
        return Err(Error::param(format!("offset n/2 = {} gives a matching, not a 4-regular graph", n / 2)));
    }
    if fa == fb {
        return Err(Error::param(format!("offsets {a} and {b} coincide up to sign mod {n}")));
    }
    Ok((fa.min(fb), fa.max(fb)))
}

/// All canonical offset pairs for `n`, lexicographic.
pub fn admissible_pairs(n: usize) -> Vec<(usize, usize)> {
    if n < 5 {
        return Vec::new();
    }
    let max = (n - 1) / 2;
    (1..=max).flat_map(|a| (a + 1..=max).map(move |b| (a, b))).collect()
}
