//! The `circtotal` command line.
//!
//! Exit codes: 0 success, 1 I/O, format or invalid-coloring failure,
//! 2 parameter error (including the desk-scale refusal of `chi`),
//! 3 scheme invalid, 4 not covered, 5 search budget exceeded.

pub mod io;
pub mod sweep;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::graph::{canonical_params, CirculantGraph};
use crate::schemes;
use crate::solver::{total_chromatic_number, ChiStatus, SearchBudget};
use crate::verify::{classify_report, verify, Classification};
use io::ColoringDocument;
use sweep::{Family, Outcome, SweepConfig, DESK_SCALE_N};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_SCHEME_INVALID: i32 = 3;
pub const EXIT_NOT_COVERED: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "circtotal", version, about = "Total colorings of four-regular circulant graphs C_n(a,b)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the vertex and edge lists of C_n(a,b) as JSON.
    Gen(Params),
    /// Color C_n(a,b) with the applicable construction and verify it.
    Color {
        #[command(flatten)]
        params: Params,
        /// Write the coloring here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify a coloring file and classify it.
    Verify { file: PathBuf },
    /// Compute the exact total chromatic number.
    Chi {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Allow n above the desk-scale limit.
        #[arg(long)]
        force: bool,
        /// Write the witness coloring here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Audit a family of instances and write a CSV report.
    Sweep {
        #[arg(long, default_value = "all")]
        family: String,
        /// Largest multiplier p for the 5p, 3p, 9p and 6p families.
        #[arg(long, default_value_t = 6)]
        pmax: usize,
        /// Largest n (the range for `all`, a cap otherwise).
        #[arg(long)]
        nmax: Option<usize>,
        /// Also run the exact solver (n <= 14 unless --force).
        #[arg(long)]
        check_exact: bool,
        #[arg(long)]
        force: bool,
        /// Fill the elapsed_ms column (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Save every verified coloring as JSON in this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Convert a coloring file to DOT or normalized JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Params {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'a')]
    pub a: usize,
    #[arg(short = 'b')]
    pub b: usize,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    #[arg(long, env = "CIRCTOTAL_MAX_NODES", default_value_t = SearchBudget::DEFAULT_NODES)]
    pub max_nodes: u64,
    #[arg(long, env = "CIRCTOTAL_MAX_SECS", default_value_t = SearchBudget::DEFAULT_TIME.as_secs())]
    pub max_secs: u64,
}

impl BudgetArgs {
    fn budget(self) -> Result<SearchBudget, Error> {
        if self.max_nodes == 0 || self.max_secs == 0 {
            return Err(Error::param("search budget must be positive"));
        }
        Ok(SearchBudget::new(self.max_nodes, Duration::from_secs(self.max_secs)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Index { .. } => EXIT_PARAMETER,
        Error::SchemeInvalid { .. } | Error::CompletionFailure(_) => EXIT_SCHEME_INVALID,
        Error::NotCovered { .. } => EXIT_NOT_COVERED,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Coverage(_) | Error::Format(_) | Error::Io(_) => EXIT_FAILURE,
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Gen(p) => cmd_gen(p, out, err),
        Command::Color { params, output } => cmd_color(params, output.as_deref(), out, err),
        Command::Verify { file } => cmd_verify(&file, out),
        Command::Chi { params, budget, force, output } => cmd_chi(params, budget, force, output.as_deref(), out, err),
        Command::Sweep { family, pmax, nmax, check_exact, force, timing, budget, output, witness_dir } => {
            let config = family.parse::<Family>().and_then(|family| {
                Ok(SweepConfig { family, pmax, nmax, check_exact, force, budget: budget.budget()? })
            });
            config.and_then(|c| cmd_sweep(&c, timing, output.as_deref(), witness_dir.as_deref(), out, err))
        }
        Command::Export { file, format, output } => cmd_export(&file, format, output.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::NotCovered { .. }) {
                let _ = writeln!(err, "hint: `circtotal chi` computes the exact total chromatic number");
            }
            exit_code(&e)
        }
    }
}

type CmdResult = Result<i32, Error>;

fn graph_from(p: Params, err: &mut dyn Write) -> Result<CirculantGraph, Error> {
    let (a, b) = canonical_params(p.n, p.a, p.b)?;
    if (a, b) != (p.a, p.b) {
        let _ = writeln!(err, "note: using the isomorphic parameters C_{}({a},{b})", p.n);
    }
    CirculantGraph::new(p.n, a, b)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Error> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => {
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GraphDocument {
    n: usize,
    a: usize,
    b: usize,
    edges: Vec<crate::graph::Edge>,
}

fn cmd_gen(p: Params, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = graph_from(p, err)?;
    let mut edges = g.edges();
    edges.sort();
    let doc = GraphDocument { n: g.n(), a: g.a(), b: g.b(), edges };
    emit(&serde_json::to_string_pretty(&doc).expect("graph serializes"), None, out)?;
    Ok(EXIT_OK)
}

fn cmd_color(p: Params, output: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = graph_from(p, err)?;
    let (id, c) = schemes::color(&g)?;
    let report = verify(&g, &c)?;
    let kind = classify_report(&g, &report);
    let doc = ColoringDocument::new(&g, &c).with_scheme(id.tag()).with_kind(kind.to_string());
    let text = doc.to_json();

    // the file we hand out must re-verify on its own
    let (g2, c2) = ColoringDocument::from_json(&text)?.to_coloring()?;
    if !verify(&g2, &c2)?.valid {
        return Err(Error::SchemeInvalid { scheme: id, detail: "written coloring does not re-verify".into(), report: None });
    }
    emit(&text, output, out)?;
    let _ = writeln!(err, "{g}: scheme {id}, {} colors, 0 conflicts, Type {kind}", report.colors_used);
    Ok(EXIT_OK)
}

fn cmd_verify(file: &Path, out: &mut dyn Write) -> CmdResult {
    let doc = ColoringDocument::from_json(&fs::read_to_string(file)?)?;
    let (g, c) = doc.to_coloring()?;
    let report = verify(&g, &c)?;
    let kind = classify_report(&g, &report);
    writeln!(out, "{g}: {} colors, {} conflicts, classification: {kind}", report.colors_used, report.conflicts.len())?;
    for conflict in &report.conflicts {
        writeln!(out, "  {}: {conflict}", conflict.kind())?;
    }
    Ok(if report.valid && !matches!(kind, Classification::Invalid(_)) { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct ChiDocument {
    n: usize,
    a: usize,
    b: usize,
    chi: Option<usize>,
    status: &'static str,
    lower_bound: usize,
    nodes: u64,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    kind: Option<&'static str>,
}

fn cmd_chi(
    p: Params,
    budget: BudgetArgs,
    force: bool,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let g = graph_from(p, err)?;
    if g.n() > DESK_SCALE_N && !force {
        return Err(Error::param(format!(
            "n = {} is above the desk-scale limit {DESK_SCALE_N}; pass --force to search anyway",
            g.n()
        )));
    }
    let chi = total_chromatic_number(&g, budget.budget()?);
    let kind = chi.chi_total.map(|k| match k.checked_sub(g.max_degree()) {
        Some(1) => "I",
        Some(2) => "II",
        _ => "beyond-II",
    });
    let doc = ChiDocument {
        n: g.n(),
        a: g.a(),
        b: g.b(),
        chi: chi.chi_total,
        status: chi.status.as_str(),
        lower_bound: chi.lower_bound,
        nodes: chi.nodes_explored,
        kind,
    };
    emit(&serde_json::to_string(&doc).expect("chi serializes"), None, out)?;
    if let (Some(path), Some(w)) = (output, &chi.witness) {
        let mut wdoc = ColoringDocument::new(&g, w);
        if let Some(kind) = kind {
            wdoc = wdoc.with_kind(kind);
        }
        fs::write(path, wdoc.to_json())?;
    }
    Ok(match chi.status {
        ChiStatus::Exact => EXIT_OK,
        ChiStatus::LowerBoundOnly | ChiStatus::BudgetExceeded => EXIT_BUDGET,
    })
}

fn cmd_sweep(
    config: &SweepConfig,
    timing: bool,
    output: Option<&Path>,
    witness_dir: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let rows = sweep::run_sweep(config);
    let mut buf = Vec::new();
    sweep::write_csv(&rows, timing, &mut buf)?;
    match output {
        Some(path) => fs::write(path, &buf)?,
        None => out.write_all(&buf)?,
    }
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir)?;
        for row in &rows {
            if let Some(w) = &row.witness {
                let g = &row.graph;
                let doc = ColoringDocument::new(g, w).with_scheme(row.scheme.tag());
                fs::write(dir.join(format!("C_{}_{}_{}.json", g.n(), g.a(), g.b())), doc.to_json())?;
            }
        }
    }
    for row in rows.iter().filter(|r| r.outcome == Outcome::SchemeInvalid) {
        let _ = writeln!(err, "{} {}: {}", row.graph, row.scheme, row.detail.as_deref().unwrap_or(""));
    }
    let _ = writeln!(err, "summary: {}", sweep::summary(&rows));
    Ok(EXIT_OK)
}

fn cmd_export(file: &Path, format: ExportFormat, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(file)?;
    let doc = if text.trim_start().starts_with('{') {
        ColoringDocument::from_json(&text)?
    } else {
        ColoringDocument::from_dot(&text)?
    };
    // reject anything that is not a coloring of the stated graph
    doc.to_coloring()?;
    let rendered = match format {
        ExportFormat::Dot => doc.to_dot(),
        ExportFormat::Json => doc.to_json(),
    };
    emit(&rendered, output, out)?;
    Ok(EXIT_OK)
}
