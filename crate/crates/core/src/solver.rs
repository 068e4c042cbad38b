//! Exact total chromatic number by backtracking search.
//!
//! Elements are the `n` vertices followed by the `2n` edges (in the graph's
//! edge index order). Two elements conflict when they are adjacent
//! vertices, incident edges, or a vertex and one of its edges, which makes
//! the conflict graph 8-regular. The search assigns elements in a fixed
//! most-constrained-first order, tries colors in ascending order, and keeps
//! per-element counts of blocked colors so that an element left with no
//! available color prunes the branch immediately.

use std::time::{Duration, Instant};

use crate::coloring::{Color, TotalColoring};
use crate::graph::CirculantGraph;

/// Largest palette the search supports.
pub const MAX_PALETTE: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 200_000_000;
    pub const DEFAULT_TIME: Duration = Duration::from_secs(300);

    pub fn new(max_nodes: u64, max_time: Duration) -> Self {
        assert!(max_nodes > 0 && !max_time.is_zero(), "search budget must be positive");
        SearchBudget { max_nodes, max_time }
    }

    pub fn unlimited() -> Self {
        SearchBudget { max_nodes: u64::MAX, max_time: Duration::from_secs(u64::MAX / 4) }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_NODES, Self::DEFAULT_TIME)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryBreaking {
    /// Fix `v_0 = 0` and its four edges (by neighbor index) to `1, 2, 3, 4`.
    ClosedStarOfZero,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(TotalColoring),
    /// Exhaustive search found nothing.
    None,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub decision: Decision,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChiStatus {
    /// Witness at `chi_total` and every smaller palette refuted.
    Exact,
    /// Some palettes above Δ+1 were refuted, then the budget ran out.
    LowerBoundOnly,
    /// The budget ran out before anything beyond the trivial bound Δ+1.
    BudgetExceeded,
}

impl ChiStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ChiStatus::Exact => "exact",
            ChiStatus::LowerBoundOnly => "lower-bound-only",
            ChiStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    /// Set when `status` is `Exact`.
    pub chi_total: Option<usize>,
    /// Largest palette size known to be necessary.
    pub lower_bound: usize,
    pub witness: Option<TotalColoring>,
    pub status: ChiStatus,
    pub nodes_explored: u64,
}

/// The conflict structure of the total graph of `g`.
struct TotalGraph {
    n: usize,
    conflicts: Vec<[usize; 8]>,
    endpoints: Vec<(usize, usize)>,
}

impl TotalGraph {
    fn new(g: &CirculantGraph) -> Self {
        let n = g.n();
        let mut conflicts = Vec::with_capacity(3 * n);
        let mut endpoints = Vec::with_capacity(2 * n);
        for i in 0..n {
            let nb = g.neighbors_unchecked(i);
            let inc = g.incident_edges(i).map(|e| n + e);
            let mut row = [0; 8];
            row[..4].copy_from_slice(&nb);
            row[4..].copy_from_slice(&inc);
            conflicts.push(row);
        }
        for id in 0..g.edge_count() {
            let (x, y) = g.edge_endpoints(id);
            endpoints.push((x, y));
            let mut row = [0; 8];
            row[0] = x;
            row[1] = y;
            let others = g
                .incident_edges(x)
                .into_iter()
                .chain(g.incident_edges(y))
                .filter(|&e| e != id)
                .map(|e| n + e);
            for (slot, e) in row[2..].iter_mut().zip(others) {
                *slot = e;
            }
            conflicts.push(row);
        }
        TotalGraph { n, conflicts, endpoints }
    }

    fn len(&self) -> usize {
        self.conflicts.len()
    }

    /// v_0 followed by its incident edges sorted by the far endpoint.
    fn closed_star_of_zero(&self) -> Vec<usize> {
        let mut edges: Vec<usize> = self.conflicts[0][4..].to_vec();
        edges.sort_by_key(|&e| {
            let (x, y) = self.endpoints[e - self.n];
            if x == 0 { y } else { x }
        });
        let mut star = vec![0];
        star.extend(edges);
        star
    }

    /// Static most-constrained-first order: repeatedly take the element with
    /// the most already-ordered conflicts, ties to the lowest index.
    fn order(&self, prefix: &[usize]) -> Vec<usize> {
        let m = self.len();
        let mut placed = vec![false; m];
        let mut weight = vec![0usize; m];
        let mut order = Vec::with_capacity(m);
        let place = |e: usize, placed: &mut Vec<bool>, weight: &mut Vec<usize>, order: &mut Vec<usize>| {
            placed[e] = true;
            order.push(e);
            for &x in &self.conflicts[e] {
                weight[x] += 1;
            }
        };
        for &e in prefix {
            place(e, &mut placed, &mut weight, &mut order);
        }
        while order.len() < m {
            let next = (0..m)
                .filter(|&e| !placed[e])
                .max_by_key(|&e| (weight[e], std::cmp::Reverse(e)))
                .unwrap();
            place(next, &mut placed, &mut weight, &mut order);
        }
        order
    }
}

struct Search<'a> {
    tg: &'a TotalGraph,
    k: usize,
    colors: Vec<Option<Color>>,
    /// `blocked[e * k + c]`: assigned conflicts of `e` that use `c`.
    blocked: Vec<u8>,
    /// Colors still open for each element.
    open: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    out_of_budget: bool,
}

impl<'a> Search<'a> {
    fn new(tg: &'a TotalGraph, k: usize, budget: SearchBudget) -> Self {
        Search {
            tg,
            k,
            colors: vec![None; tg.len()],
            blocked: vec![0; tg.len() * k],
            open: vec![k; tg.len()],
            nodes: 0,
            budget,
            started: Instant::now(),
            out_of_budget: false,
        }
    }

    fn can_take(&self, e: usize, c: usize) -> bool {
        self.blocked[e * self.k + c] == 0
    }

    /// Assigns and propagates; returns false if some unassigned conflict
    /// lost its last color (the assignment is still recorded).
    fn assign(&mut self, e: usize, c: usize) -> bool {
        self.colors[e] = Some(c as Color);
        let mut ok = true;
        for &x in &self.tg.conflicts[e] {
            let slot = &mut self.blocked[x * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.open[x] -= 1;
                if self.open[x] == 0 && self.colors[x].is_none() {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, e: usize, c: usize) {
        self.colors[e] = None;
        for &x in &self.tg.conflicts[e] {
            let slot = &mut self.blocked[x * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.open[x] += 1;
            }
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes >= self.budget.max_nodes
            || (self.nodes % 4096 == 0 && self.started.elapsed() >= self.budget.max_time)
        {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    /// Depth-first over `order[depth..]`.
    fn run(&mut self, order: &[usize]) -> bool {
        let mut depth = 0;
        // next color to try at each depth
        let mut next = vec![0usize; order.len() + 1];
        loop {
            if depth == order.len() {
                return true;
            }
            let e = order[depth];
            if let Some(prev) = self.colors[e] {
                self.unassign(e, prev as usize);
            }
            let mut advanced = false;
            while next[depth] < self.k {
                let c = next[depth];
                next[depth] += 1;
                if !self.can_take(e, c) {
                    continue;
                }
                if !self.tick() {
                    return false;
                }
                if self.assign(e, c) {
                    advanced = true;
                    break;
                }
                self.unassign(e, c);
            }
            if advanced {
                depth += 1;
                next[depth] = 0;
            } else {
                next[depth] = 0;
                if depth == 0 {
                    return false;
                }
                depth -= 1;
            }
        }
    }

    fn witness(&self) -> TotalColoring {
        let colors: Vec<Color> = self.colors.iter().map(|c| c.expect("complete assignment")).collect();
        let (v, e) = colors.split_at(self.tg.n);
        TotalColoring::new(v.to_vec(), e.to_vec(), self.k).expect("search colors stay in the palette")
    }
}

/// Decides whether `g` has a total coloring with at most `k` colors.
pub fn exists_total_coloring(g: &CirculantGraph, k: usize, budget: SearchBudget) -> SearchOutcome {
    exists_total_coloring_with(g, k, budget, SymmetryBreaking::ClosedStarOfZero)
}

pub fn exists_total_coloring_with(
    g: &CirculantGraph,
    k: usize,
    budget: SearchBudget,
    symmetry: SymmetryBreaking,
) -> SearchOutcome {
    assert!((1..=MAX_PALETTE).contains(&k), "palette size {k} outside 1..={MAX_PALETTE}");
    let tg = TotalGraph::new(g);
    decide(&tg, k, budget, symmetry)
}

fn decide(tg: &TotalGraph, k: usize, budget: SearchBudget, symmetry: SymmetryBreaking) -> SearchOutcome {
    let mut search = Search::new(tg, k, budget);
    let order = match symmetry {
        SymmetryBreaking::ClosedStarOfZero => {
            let star = tg.closed_star_of_zero();
            // the closed star is a 5-clique of the conflict graph, so any
            // coloring can be renamed to put 0,1,2,3,4 on it
            if k < star.len() {
                return SearchOutcome { decision: Decision::None, nodes: 0 };
            }
            for (c, &e) in star.iter().enumerate() {
                if !search.assign(e, c) {
                    return SearchOutcome { decision: Decision::None, nodes: 0 };
                }
            }
            tg.order(&star)[star.len()..].to_vec()
        }
        SymmetryBreaking::None => tg.order(&[]),
    };
    let found = search.run(&order);
    let decision = if found {
        Decision::Found(search.witness())
    } else if search.out_of_budget {
        Decision::BudgetExceeded
    } else {
        Decision::None
    };
    SearchOutcome { decision, nodes: search.nodes }
}

/// Tries `k = Δ+1, Δ+2, ...` until a coloring exists. The budget is shared
/// across all levels.
pub fn total_chromatic_number(g: &CirculantGraph, budget: SearchBudget) -> ChiResult {
    let tg = TotalGraph::new(g);
    let started = Instant::now();
    let trivial = g.max_degree() + 1;
    let mut nodes = 0u64;
    let mut k = trivial;
    loop {
        let left = SearchBudget {
            max_nodes: budget.max_nodes.saturating_sub(nodes).max(1),
            max_time: budget.max_time.saturating_sub(started.elapsed()).max(Duration::from_millis(1)),
        };
        let outcome = decide(&tg, k, left, SymmetryBreaking::ClosedStarOfZero);
        nodes += outcome.nodes;
        match outcome.decision {
            Decision::Found(w) => {
                return ChiResult {
                    chi_total: Some(k),
                    lower_bound: k,
                    witness: Some(w),
                    status: ChiStatus::Exact,
                    nodes_explored: nodes,
                }
            }
            Decision::None => k += 1,
            Decision::BudgetExceeded => {
                return ChiResult {
                    chi_total: None,
                    lower_bound: k,
                    witness: None,
                    status: if k == trivial { ChiStatus::BudgetExceeded } else { ChiStatus::LowerBoundOnly },
                    nodes_explored: nodes,
                }
            }
        }
        // greedy coloring of an 8-regular conflict graph needs at most 9
        assert!(k <= MAX_PALETTE, "no total coloring found with {MAX_PALETTE} colors");
    }
}
