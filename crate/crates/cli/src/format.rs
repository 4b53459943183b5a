// SPDX-License-Identifier: Apache-2.0

//! Text formats for functions, circuits, metrics and topologies.
//!
//! Circuits are written one gate per line: `NOT <t>`, `CNOT <c> <t>`,
//! `V <c> <t>`, `V+ <c> <t>`, `TOF <c1> <c2> <t>`, with lines named `a b c`.
//! `#` starts a comment. Functions are 8 comma-separated outputs.

use ncv_core::qmodel::{Circuit, CostMetric, Gate, GateKind, Library, Line, Permutation, Topology};

use crate::error::CliError;

/// Parses `7,6,4,5,2,3,1,0`. Syntax errors are usage errors; well-formed
/// lists that are not permutations are [`CliError::InvalidFunction`].
pub fn parse_function(s: &str) -> Result<Permutation, CliError> {
    let values = s
        .split(',')
        .map(|v| v.trim().parse::<u8>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("malformed function `{s}`: {e}")))?;
    if values.len() != 8 {
        return Err(CliError::Usage(format!(
            "malformed function `{s}`: expected 8 values, got {}",
            values.len()
        )));
    }
    Permutation::from_slice(&values).map_err(|_| CliError::InvalidFunction(s.to_string()))
}

pub fn format_function(f: &Permutation) -> String {
    f.to_string()
}

fn malformed(source_name: &str, line: usize, message: impl Into<String>) -> CliError {
    CliError::Malformed {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

pub fn parse_gate(text: &str) -> Result<Gate, String> {
    let mut words = text.split_whitespace();
    let mnemonic = words.next().ok_or("empty gate")?;
    let kind =
        GateKind::from_mnemonic(mnemonic).ok_or_else(|| format!("unknown gate `{mnemonic}`"))?;
    let lines = words
        .map(|w| Line::from_name(w).ok_or_else(|| format!("unknown line `{w}`")))
        .collect::<Result<Vec<_>, _>>()?;
    let (target, controls) = lines.split_last().ok_or("missing target line")?;
    Gate::new(kind, controls, *target).map_err(|e| format!("`{text}`: {e}"))
}

/// Parses a circuit; the library is inferred from the gates present.
pub fn parse_circuit(text: &str, source_name: &str) -> Result<Circuit, CliError> {
    parse_circuit_in(text, source_name, None)
}

/// Parses a circuit into `library`, or the inferred library when `None`.
pub fn parse_circuit_in(
    text: &str,
    source_name: &str,
    library: Option<Library>,
) -> Result<Circuit, CliError> {
    let mut gates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        gates.push(parse_gate(line).map_err(|m| malformed(source_name, i + 1, m))?);
    }
    match library {
        Some(lib) => Circuit::new(lib, gates),
        None => Circuit::infer(gates),
    }
    .map_err(|e| malformed(source_name, 0, e.to_string()))
}

/// One gate per line, newline-terminated unless empty.
pub fn format_circuit(circuit: &Circuit) -> String {
    let mut s = circuit.to_string();
    if !s.is_empty() {
        s.push('\n');
    }
    s
}

/// `ncv-111`, `ncv-012`, `ncv-155` or `custom:x,y,z` (V⁺ weighs `z`);
/// `custom:x,y,z,w` sets the V⁺ weight separately.
pub fn parse_metric(s: &str) -> Result<CostMetric, String> {
    let lower = s.to_ascii_lowercase();
    if let Some((_, m)) = CostMetric::PRESETS.iter().find(|(n, _)| *n == lower) {
        return Ok(*m);
    }
    let body = lower.strip_prefix("custom:").ok_or_else(|| {
        format!("unknown metric `{s}` (expected ncv-111, ncv-012, ncv-155 or custom:x,y,z)")
    })?;
    let w = body
        .split(',')
        .map(|v| v.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("metric `{s}`: {e}"))?;
    match w[..] {
        [x, y, z] => Ok(CostMetric::xyz(x, y, z)),
        [x, y, z, v] => Ok(CostMetric::new(x, y, z, v)),
        _ => Err(format!("metric `{s}`: expected three or four weights")),
    }
}

/// Filename-safe metric name; presets keep their name, so `custom:1,5,5`
/// shares `ncv-155`'s cache entry.
pub fn metric_slug(m: &CostMetric) -> String {
    match m.preset_name() {
        Some(n) => n.to_string(),
        None => format!("custom-{}-{}-{}-{}", m.not, m.cnot, m.v, m.v_dag),
    }
}

pub fn parse_topology(s: &str) -> Result<Topology, String> {
    match s.to_ascii_lowercase().as_str() {
        "full" => Ok(Topology::FULL),
        "path" => Ok(Topology::PATH),
        _ => Err(format!("unknown topology `{s}` (expected full or path)")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functions() {
        assert_eq!(
            parse_function("7,6,4,5,2,3,1,0").unwrap().as_array(),
            [7, 6, 4, 5, 2, 3, 1, 0]
        );
        assert!(matches!(
            parse_function("0,0,1,2,3,4,5,6"),
            Err(CliError::InvalidFunction(_))
        ));
        assert!(matches!(parse_function("0,1,2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_function("a,b"), Err(CliError::Usage(_))));
    }

    #[test]
    fn circuits() {
        let c = parse_circuit(
            "# toffoli\nV b c\nCNOT a b  # note\n\nV+ b c\nCNOT a b\nV a c\n",
            "t",
        )
        .unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(
            format_circuit(&c),
            "V b c\nCNOT a b\nV+ b c\nCNOT a b\nV a c\n"
        );
        assert!(parse_circuit("", "t").unwrap().is_empty());
        assert_eq!(parse_circuit("TOF a b c", "t").unwrap().len(), 1);
        let err = parse_circuit("NOT a\nCNOT a a\n", "f.txt").unwrap_err();
        assert!(matches!(err, CliError::Malformed { line: 2, .. }), "{err}");
        assert!(parse_circuit("SWAP a b", "t").is_err());
        assert!(parse_circuit("NOT d", "t").is_err());
        assert!(parse_circuit("CNOT a", "t").is_err());
    }

    #[test]
    fn metrics() {
        assert_eq!(parse_metric("ncv-012").unwrap(), CostMetric::NCV_012);
        assert_eq!(parse_metric("custom:1,5,5").unwrap(), CostMetric::NCV_155);
        assert_eq!(
            parse_metric("custom:2,3,2").unwrap(),
            CostMetric::new(2, 3, 2, 2)
        );
        assert!(parse_metric("custom:1,-1,2").is_err());
        assert!(parse_metric("ncv-999").is_err());
        assert_eq!(metric_slug(&CostMetric::xyz(1, 5, 5)), "ncv-155");
        assert_eq!(metric_slug(&CostMetric::xyz(2, 3, 2)), "custom-2-3-2-2");
    }
}
