// SPDX-License-Identifier: Apache-2.0

//! CSV and JSONL encodings of synthesis tables, histograms and comparisons.

use std::io::{BufRead, Write};

use ncv_core::analysis::{ComparisonReport, CostHistogram};
use ncv_core::qmodel::{Library, Permutation};
use ncv_core::search::{CostModel, SynthesisTable};
use ncv_core::Topology;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::format::{parse_circuit_in, parse_function};

#[derive(Debug, Serialize, Deserialize)]
struct CostRecord {
    function: String,
    cost: u32,
}

/// One line of a circuits file.
#[derive(Debug, Serialize, Deserialize)]
pub struct CircuitRecord {
    pub function: String,
    pub cost: u32,
    /// Gates in the circuit text format, newline-separated.
    pub circuit: String,
}

fn malformed(source_name: &str, line: usize, message: impl ToString) -> CliError {
    CliError::Malformed {
        source_name: source_name.to_string(),
        line,
        message: message.to_string(),
    }
}

fn csv_error(source_name: &str, e: csv::Error) -> CliError {
    let line = e.position().map_or(0, |p| p.line() as usize);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => CliError::io(source_name, io),
        kind => malformed(source_name, line, format!("{kind:?}")),
    }
}

/// Writes `function,cost` rows in rank order.
pub fn write_table_csv<W: Write>(table: &SynthesisTable, out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for (f, cost, _) in table.iter() {
        w.serialize(CostRecord {
            function: f.to_string(),
            cost,
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Reads `function,cost` rows. Functions may appear in any order; a
/// function listed twice is rejected.
pub fn read_costs_csv<R: std::io::Read>(
    input: R,
    source_name: &str,
) -> Result<Vec<(Permutation, u32)>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for rec in r.deserialize::<CostRecord>() {
        let rec = rec.map_err(|e| csv_error(source_name, e))?;
        let f =
            parse_function(&rec.function).map_err(|e| malformed(source_name, out.len() + 2, e))?;
        out.push((f, rec.cost));
    }
    let mut seen = vec![false; ncv_core::qmodel::FUNCTION_COUNT];
    for (i, (f, _)) in out.iter().enumerate() {
        if std::mem::replace(&mut seen[f.rank()], true) {
            return Err(malformed(
                source_name,
                i + 2,
                format!("duplicate function {f}"),
            ));
        }
    }
    Ok(out)
}

pub fn read_table_csv<R: std::io::Read>(
    input: R,
    source_name: &str,
    model: CostModel,
    topology: Topology,
) -> Result<SynthesisTable, CliError> {
    let mut table = SynthesisTable::new(model, topology);
    for (f, cost) in read_costs_csv(input, source_name)? {
        table.insert(f, cost, None);
    }
    Ok(table)
}

/// Writes one JSON record per function that has a witness circuit.
pub fn write_circuits_jsonl<W: Write>(table: &SynthesisTable, mut out: W) -> std::io::Result<()> {
    for (f, cost, witness) in table.iter() {
        let Some(c) = witness else { continue };
        let rec = CircuitRecord {
            function: f.to_string(),
            cost,
            circuit: c.to_string(),
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn read_circuits_jsonl<R: BufRead>(
    input: R,
    source_name: &str,
    model: CostModel,
    topology: Topology,
) -> Result<SynthesisTable, CliError> {
    let library = match model {
        CostModel::Ncv(_) => Library::Ncv,
        CostModel::Nct(_) => Library::Nct,
    };
    let mut table = SynthesisTable::new(model, topology);
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| CliError::io(source_name, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CircuitRecord =
            serde_json::from_str(&line).map_err(|e| malformed(source_name, i + 1, e))?;
        let f = parse_function(&rec.function).map_err(|e| malformed(source_name, i + 1, e))?;
        let circuit = parse_circuit_in(&rec.circuit, source_name, Some(library))
            .map_err(|e| malformed(source_name, i + 1, e))?;
        table.insert(f, rec.cost, Some(circuit));
    }
    Ok(table)
}

/// `cost,count` rows for every cost from 0 to the maximum.
pub fn write_histogram_csv<W: Write>(hist: &CostHistogram, mut out: W) -> std::io::Result<()> {
    writeln!(out, "cost,count")?;
    for (cost, count) in hist.dense().iter().enumerate() {
        writeln!(out, "{cost},{count}")?;
    }
    out.flush()
}

/// Summary statistics appended to a comparison file as `#summary` lines.
#[derive(Clone, Debug)]
pub struct SummaryLine {
    pub selection: String,
    pub report_key: &'static str,
    pub value: String,
}

pub fn summary_lines(selection: &str, report: &ComparisonReport) -> Vec<SummaryLine> {
    let witnesses = report
        .max_ratio_witnesses
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let line = |key, value: String| SummaryLine {
        selection: selection.to_string(),
        report_key: key,
        value,
    };
    vec![
        line("metric", report.metric.to_string()),
        line("pearson", format!("{:.4}", report.pearson_correlation)),
        line("average_ratio", format!("{:.4}", report.average_ratio)),
        line(
            "max_ratio",
            format!(
                "{:.4} ({}/{})",
                report.max_ratio.value(),
                report.max_ratio.num,
                report.max_ratio.den
            ),
        ),
        line("max_ratio_witnesses", witnesses),
        line("equal_count", report.equal_count.to_string()),
        line("violations", report.violations.to_string()),
        line(
            "nct_weighted_average",
            report.nct_histogram().render_weighted_average(),
        ),
        line(
            "ncv_weighted_average",
            report.ncv_histogram().render_weighted_average(),
        ),
    ]
}

/// Per-function rows followed by `#summary,<selection>,<key>,<value>` lines.
pub fn write_comparison_csv<W: Write>(
    report: &ComparisonReport,
    summaries: &[SummaryLine],
    out: W,
) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    w.write_record(["function", "nct_gc", "nct_sub_cost", "ncv_opt_cost"])?;
    for r in &report.rows {
        w.write_record([
            r.function.to_string(),
            r.nct_gate_count.to_string(),
            r.nct_cost.to_string(),
            r.ncv_cost.to_string(),
        ])?;
    }
    for s in summaries {
        w.write_record(["#summary", &s.selection, s.report_key, &s.value])?;
    }
    w.flush()?;
    Ok(())
}
