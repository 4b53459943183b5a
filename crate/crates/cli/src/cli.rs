// SPDX-License-Identifier: Apache-2.0

//! Argument parsing and the five subcommands.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncv_core::analysis::{compare, histogram, histogram_by, CostHistogram};
use ncv_core::nct::{settle_all_nct, NctCostModel};
use ncv_core::search::{settle_all, synthesize_one, SearchOptions, SynthesisTable};
use ncv_core::verify::realization_mismatch;
use ncv_core::{CostMetric, Topology};

use crate::cache::{Cache, DEFAULT_DIR};
use crate::error::CliError;
use crate::format::{format_circuit, parse_circuit, parse_function, parse_metric, parse_topology};
use crate::report::render_histograms;
use crate::table_io::{
    read_costs_csv, summary_lines, write_circuits_jsonl, write_comparison_csv, write_histogram_csv,
    write_table_csv,
};

#[derive(Debug, Parser)]
#[command(name = "ncv", version, about = "Optimal 3-line NCV circuit synthesis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal circuit for one function.
    Synth(SynthArgs),
    /// Optimal costs and circuits for all 40,320 functions.
    SynthAll(SynthAllArgs),
    /// Substituted optimal NCT circuits against optimal NCV circuits.
    Compare(CompareArgs),
    /// Check that a circuit file realizes a function.
    Verify(VerifyArgs),
    /// Histogram and weighted average of a table CSV.
    Stats(StatsArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MetricArgs {
    /// ncv-111, ncv-012, ncv-155 or custom:x,y,z (NOT, CNOT, V/V+ weights).
    #[arg(long, default_value = "ncv-111", value_parser = parse_metric)]
    pub metric: CostMetric,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    /// Allowed two-line interactions: full or path (a-b, b-c).
    #[arg(long, default_value = "full", value_parser = parse_topology)]
    pub topology: Topology,
    /// Allow consecutive gates on the same lines.
    #[arg(long)]
    pub no_prune_repeat: bool,
    /// Allow V+ gates on Boolean states.
    #[arg(long)]
    pub no_prune_vdag: bool,
    /// Do not settle line relabelings of settled functions.
    #[arg(long)]
    pub no_relabel: bool,
    /// Settle the inverse of each settled function as well.
    #[arg(long)]
    pub inverse_closure: bool,
    /// Abandon partial circuits costlier than this.
    #[arg(long)]
    pub cost_ceiling: Option<u32>,
    /// Abandon the search after storing this many states.
    #[arg(long)]
    pub max_states: Option<usize>,
}

impl SearchArgs {
    pub fn options(&self) -> SearchOptions {
        SearchOptions {
            prune_repeat_placement: !self.no_prune_repeat,
            prune_leading_v_dag: !self.no_prune_vdag,
            relabel_closure: !self.no_relabel,
            inverse_closure: self.inverse_closure,
            cost_ceiling: self.cost_ceiling,
            max_states: self.max_states,
            ..SearchOptions::default()
        }
    }

    /// Whether tables from this search match the cached default-pruning ones.
    pub fn cacheable(&self) -> bool {
        !(self.no_prune_repeat || self.no_prune_vdag || self.no_relabel || self.inverse_closure)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CacheArgs {
    /// Directory holding cached tables.
    #[arg(long, default_value = DEFAULT_DIR)]
    pub cache_dir: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    /// Output column for each input row 0..7, e.g. 0,1,2,3,4,5,7,6.
    #[arg(long)]
    pub function: String,
}

#[derive(Debug, Args)]
pub struct SynthAllArgs {
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
    /// Table CSV (`function,cost`).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Witness circuits as JSON lines.
    #[arg(long)]
    pub circuits: Option<PathBuf>,
    /// Histogram CSV (`cost,count`).
    #[arg(long)]
    pub histogram: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Selection {
    /// Among minimum gate-count NCT circuits, one of least substituted cost.
    Lexicographic,
    /// The first minimum gate-count NCT circuit found.
    FirstFound,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub metric: MetricArgs,
    #[command(flatten)]
    pub cache: CacheArgs,
    /// Per-function comparison CSV with a summary trailer.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Which optimal NCT circuit supplies the per-function rows.
    #[arg(long, value_enum, default_value_t = Selection::Lexicographic)]
    pub selection: Selection,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub circuit: PathBuf,
    #[arg(long)]
    pub function: String,
    /// Largest tolerated entrywise deviation.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub table: PathBuf,
    /// Histogram CSV (`cost,count`).
    #[arg(long)]
    pub histogram: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Synth(a) => cmd_synth(&a, out),
        Command::SynthAll(a) => cmd_synth_all(&a, out, err),
        Command::Compare(a) => cmd_compare(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Stats(a) => cmd_stats(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn stdout_error(e: std::io::Error) -> CliError {
    CliError::io("<stdout>", e)
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

pub fn cmd_synth(a: &SynthArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = parse_function(&a.function)?;
    let (cost, circuit) = synthesize_one(
        f.as_array().as_slice(),
        a.search.metric.metric,
        a.search.topology,
        &a.search.options(),
    )?;
    writeln!(out, "# function {f}").map_err(stdout_error)?;
    writeln!(
        out,
        "# metric {} topology {}",
        a.search.metric.metric, a.search.topology
    )
    .map_err(stdout_error)?;
    writeln!(out, "# cost {cost}").map_err(stdout_error)?;
    write!(out, "{}", format_circuit(&circuit)).map_err(stdout_error)?;
    Ok(0)
}

/// The complete NCV table for `search`, from the cache when possible.
pub fn ncv_table(
    search: &SearchArgs,
    cache: &CacheArgs,
    err: &mut dyn Write,
) -> Result<SynthesisTable, CliError> {
    let metric = search.metric.metric;
    let store = (!cache.no_cache && search.cacheable()).then(|| Cache::new(&cache.cache_dir));
    if let Some(c) = &store {
        if let Some(table) = c.load(&metric, search.topology)? {
            let _ = writeln!(
                err,
                "loaded {} from cache",
                c.jsonl_path(&metric, search.topology).display()
            );
            return Ok(table);
        }
    }
    let start = Instant::now();
    let table = settle_all(metric, search.topology, &search.options())?;
    let stats = table.stats();
    let _ = writeln!(
        err,
        "searched {metric}/{}: {} states stored, {} settled, {:.1}s",
        search.topology,
        stats.states_seen,
        stats.states_settled,
        start.elapsed().as_secs_f64()
    );
    if let Some(c) = &store {
        c.store(&table)?;
    }
    Ok(table)
}

pub fn cmd_synth_all(
    a: &SynthAllArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let table = ncv_table(&a.search, &a.cache, err)?;
    if let Some(p) = &a.out {
        write_table_csv(&table, create(p)?).map_err(|e| CliError::io(p, e.into()))?;
    }
    if let Some(p) = &a.circuits {
        write_circuits_jsonl(&table, create(p)?).map_err(|e| CliError::io(p, e))?;
    }
    let hist = histogram(&table)?;
    if let Some(p) = &a.histogram {
        write_histogram_csv(&hist, create(p)?).map_err(|e| CliError::io(p, e))?;
    }
    let head = format!("{}/{}", a.search.metric.metric, a.search.topology);
    write!(out, "{}", render_histograms(&[(&head, &hist)])).map_err(stdout_error)?;
    Ok(0)
}

pub fn cmd_compare(
    a: &CompareArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let metric = a.metric.metric;
    let search = SearchArgs {
        metric: a.metric.clone(),
        topology: Topology::FULL,
        no_prune_repeat: false,
        no_prune_vdag: false,
        no_relabel: false,
        inverse_closure: false,
        cost_ceiling: None,
        max_states: None,
    };
    let mut log = Vec::new();
    let (ncv, (lex, first)) = std::thread::scope(|s| {
        let nct = s.spawn(|| {
            (
                settle_all_nct(NctCostModel::Lexicographic(metric)),
                settle_all_nct(NctCostModel::GateCount),
            )
        });
        let ncv = ncv_table(&search, &a.cache, &mut log);
        (ncv, nct.join().expect("NCT search does not panic"))
    });
    let _ = err.write_all(&log);
    let ncv = ncv?;
    let lex_report = compare(&lex, &ncv, &metric)?;
    let first_report = compare(&first, &ncv, &metric)?;

    let mut summaries = summary_lines("lexicographic", &lex_report);
    summaries.extend(summary_lines("first-found", &first_report));
    let chosen = match a.selection {
        Selection::Lexicographic => &lex_report,
        Selection::FirstFound => &first_report,
    };
    if let Some(p) = &a.out {
        write_comparison_csv(chosen, &summaries, create(p)?)
            .map_err(|e| CliError::io(p, e.into()))?;
    }

    let gc = histogram_by(&first, |c| c)?;
    let sub = chosen.nct_histogram();
    let opt = chosen.ncv_histogram();
    let sub_head = format!("NCT->{metric}");
    let opt_head = format!("NCV {metric}");
    write!(
        out,
        "{}",
        render_histograms(&[("NCT GC", &gc), (&sub_head, &sub), (&opt_head, &opt)])
    )
    .map_err(stdout_error)?;
    writeln!(out).map_err(stdout_error)?;
    for s in &summaries {
        writeln!(out, "{:<14} {:<20} {}", s.selection, s.report_key, s.value)
            .map_err(stdout_error)?;
    }
    Ok(0)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let f = parse_function(&a.function)?;
    let text = fs::read_to_string(&a.circuit).map_err(|e| CliError::io(&a.circuit, e))?;
    let circuit = parse_circuit(&text, &a.circuit.display().to_string())?;
    match realization_mismatch(&circuit, &f, a.tol) {
        None => {
            writeln!(out, "PASS: circuit realizes {f}").map_err(stdout_error)?;
            Ok(0)
        }
        Some(d) => {
            writeln!(
                out,
                "FAIL: entry ({}, {}) is {} but {} is expected (deviation {:.3e} > {:e})",
                d.row, d.col, d.found, d.expected, d.deviation, a.tol
            )
            .map_err(stdout_error)?;
            Ok(1)
        }
    }
}

pub fn cmd_stats(a: &StatsArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = File::open(&a.table).map_err(|e| CliError::io(&a.table, e))?;
    let rows = read_costs_csv(file, &a.table.display().to_string())?;
    let hist = CostHistogram::from_costs(rows.iter().map(|(_, c)| *c));
    if let Some(p) = &a.histogram {
        write_histogram_csv(&hist, create(p)?).map_err(|e| CliError::io(p, e))?;
    }
    let head = a
        .table
        .file_stem()
        .map_or_else(|| "cost".into(), |s| s.to_string_lossy().into_owned());
    write!(out, "{}", render_histograms(&[(&head, &hist)])).map_err(stdout_error)?;
    writeln!(
        out,
        "functions {} of {}",
        hist.total(),
        ncv_core::qmodel::FUNCTION_COUNT
    )
    .map_err(stdout_error)?;
    Ok(0)
}
