//! Audit sweeps over parameter families.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::{admissible_pairs, CirculantGraph};
use crate::schemes::{self, FivePCase, SchemeId};
use crate::solver::{total_chromatic_number, ChiStatus, SearchBudget};
use crate::verify::verify;

/// Largest n the exact solver runs on without an explicit override.
pub const DESK_SCALE_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    FiveP,
    ThreeP,
    NineP,
    SixP,
    All,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "5p" => Ok(Family::FiveP),
            "3p" => Ok(Family::ThreeP),
            "9p" => Ok(Family::NineP),
            "6p" => Ok(Family::SixP),
            "all" => Ok(Family::All),
            _ => Err(Error::param(format!("unknown family {s:?}, expected 5p, 3p, 9p, 6p or all"))),
        }
    }
}

impl Family {
    fn multiplier(self) -> usize {
        match self {
            Family::FiveP => 5,
            Family::ThreeP => 3,
            Family::NineP => 9,
            Family::SixP => 6,
            Family::All => 1,
        }
    }

    /// The scheme this family's rule assigns to `g`, if `g` is in it.
    pub fn scheme_for(self, g: &CirculantGraph) -> Option<SchemeId> {
        match self {
            Family::FiveP => FivePCase::for_graph(g).map(FivePCase::scheme),
            Family::ThreeP => schemes::three_p_roles(g).map(|_| SchemeId::ThreePOdd),
            Family::NineP => schemes::nine_p_route(g),
            Family::SixP => schemes::six_p_applies(g).then_some(SchemeId::SixP),
            Family::All => Some(schemes::select_scheme(g)),
        }
    }

    /// Instances in lexicographic `(n, a, b)` order.
    pub fn instances(self, pmax: usize, nmax: Option<usize>) -> Vec<(CirculantGraph, SchemeId)> {
        let ns: Vec<usize> = match self {
            Family::All => (5..=nmax.unwrap_or(DESK_SCALE_N)).collect(),
            _ => (1..=pmax)
                .map(|p| p * self.multiplier())
                .filter(|&n| n >= 5 && nmax.is_none_or(|m| n <= m))
                .collect(),
        };
        ns.into_iter()
            .flat_map(|n| admissible_pairs(n).into_iter().map(move |(a, b)| (n, a, b)))
            .filter_map(|(n, a, b)| {
                let g = CirculantGraph::new(n, a, b).expect("admissible pair");
                self.scheme_for(&g).map(|id| (g, id))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Verified5,
    SchemeInvalid,
    Delegated,
    NotCovered,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::Verified5, Outcome::SchemeInvalid, Outcome::Delegated, Outcome::NotCovered];

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Verified5 => "verified-5",
            Outcome::SchemeInvalid => "scheme-invalid",
            Outcome::Delegated => "delegated",
            Outcome::NotCovered => "not-covered",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub family: Family,
    pub pmax: usize,
    pub nmax: Option<usize>,
    pub check_exact: bool,
    /// Run the exact solver above [`DESK_SCALE_N`].
    pub force: bool,
    pub budget: SearchBudget,
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub graph: CirculantGraph,
    pub scheme: SchemeId,
    pub outcome: Outcome,
    /// Colors used by the verified scheme output.
    pub colors: Option<usize>,
    pub chi_exact: Option<usize>,
    pub nodes: Option<u64>,
    pub elapsed: Duration,
    /// Present exactly when `outcome` is `Verified5`.
    pub witness: Option<TotalColoring>,
    /// Why a scheme failed.
    pub detail: Option<String>,
}

pub fn evaluate(g: &CirculantGraph, scheme: SchemeId, config: &SweepConfig) -> SweepRow {
    let started = Instant::now();
    let mut row = SweepRow {
        graph: g.clone(),
        scheme,
        outcome: Outcome::NotCovered,
        colors: None,
        chi_exact: None,
        nodes: None,
        elapsed: Duration::ZERO,
        witness: None,
        detail: None,
    };
    match scheme {
        SchemeId::DelegatedKt => row.outcome = Outcome::Delegated,
        SchemeId::NotCovered => row.outcome = Outcome::NotCovered,
        id => match schemes::apply(g, id) {
            Ok(c) => {
                let report = verify(g, &c).expect("scheme output matches its graph");
                row.outcome = Outcome::Verified5;
                row.colors = Some(report.colors_used);
                row.witness = Some(c);
            }
            Err(e) => {
                row.outcome = Outcome::SchemeInvalid;
                row.detail = Some(e.to_string());
            }
        },
    }
    if config.check_exact && (g.n() <= DESK_SCALE_N || config.force) {
        let chi = total_chromatic_number(g, config.budget);
        row.nodes = Some(chi.nodes_explored);
        if chi.status == ChiStatus::Exact {
            row.chi_exact = chi.chi_total;
        }
    }
    row.elapsed = started.elapsed();
    row
}

/// Evaluates every instance in parallel; rows come back in instance order.
pub fn run_sweep(config: &SweepConfig) -> Vec<SweepRow> {
    config
        .family
        .instances(config.pmax, config.nmax)
        .into_par_iter()
        .map(|(g, id)| evaluate(&g, id, config))
        .collect()
}

#[derive(Serialize)]
struct CsvRecord<'a> {
    n: usize,
    a: usize,
    b: usize,
    scheme: &'a str,
    outcome: &'a str,
    colors: Option<usize>,
    chi_exact: Option<usize>,
    nodes: Option<u64>,
    elapsed_ms: Option<u128>,
}

/// Writes the rows as CSV. `elapsed_ms` is left blank unless `timing` is
/// set, so that repeated runs produce identical bytes.
pub fn write_csv<W: Write>(rows: &[SweepRow], timing: bool, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(CsvRecord {
            n: row.graph.n(),
            a: row.graph.a(),
            b: row.graph.b(),
            scheme: row.scheme.tag(),
            outcome: row.outcome.as_str(),
            colors: row.colors,
            chi_exact: row.chi_exact,
            nodes: row.nodes,
            elapsed_ms: timing.then_some(row.elapsed.as_millis()),
        })
        .map_err(|e| Error::Format(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn summary(rows: &[SweepRow]) -> String {
    let mut counts: BTreeMap<Outcome, usize> = Outcome::ALL.into_iter().map(|o| (o, 0)).collect();
    for row in rows {
        *counts.entry(row.outcome).or_default() += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(o, c)| format!("{o}={c}")).collect();
    format!("rows={} {}", rows.len(), parts.join(" "))
}
