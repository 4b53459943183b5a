// SPDX-License-Identifier: Apache-2.0

use ncv_cli::format::{format_circuit, parse_circuit, parse_function};
use ncv_cli::table_io::{
    read_circuits_jsonl, read_table_csv, write_circuits_jsonl, write_table_csv,
};
use ncv_core::nct::{settle_all_nct, NctCostModel};
use ncv_core::qmodel::{Circuit, Gate, Permutation};
use ncv_core::search::CostModel;
use ncv_core::Topology;
use proptest::prelude::*;

fn any_circuit(max_len: usize) -> impl Strategy<Value = Circuit> {
    let ncv = Gate::ncv_library();
    let nct = Gate::nct_library();
    prop_oneof![
        prop::collection::vec((0..ncv.len()).prop_map(move |i| ncv[i]), 0..max_len),
        prop::collection::vec((0..nct.len()).prop_map(move |i| nct[i]), 0..max_len),
    ]
    .prop_map(|gates| Circuit::infer(gates).unwrap())
}

proptest! {
    #[test]
    fn circuit_text_round_trips(circuit in any_circuit(24)) {
        let text = format_circuit(&circuit);
        let back = parse_circuit(&text, "generated").unwrap();
        prop_assert_eq!(back, circuit);
    }

    #[test]
    fn function_text_round_trips(rank in 0usize..40320) {
        let f = Permutation::unrank(rank);
        prop_assert_eq!(parse_function(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(circuit in any_circuit(8)) {
        let noisy: String = format_circuit(&circuit)
            .lines()
            .map(|l| format!("  {l}   # gate\n\n"))
            .collect();
        prop_assert_eq!(parse_circuit(&format!("# header\n{noisy}"), "noisy").unwrap(), circuit);
    }
}

#[test]
fn nct_table_round_trips_through_both_formats() {
    let table = settle_all_nct(NctCostModel::GateCount);

    let mut jsonl = Vec::new();
    write_circuits_jsonl(&table, &mut jsonl).unwrap();
    let back = read_circuits_jsonl(jsonl.as_slice(), "mem", table.model(), Topology::FULL).unwrap();
    assert_eq!(back, table);

    let mut csv = Vec::new();
    write_table_csv(&table, &mut csv).unwrap();
    let costs = read_table_csv(csv.as_slice(), "mem", table.model(), Topology::FULL).unwrap();
    assert_eq!(costs, table.without_witnesses());
    assert!(costs.is_complete());
    assert_eq!(costs.model(), CostModel::Nct(NctCostModel::GateCount));
}

#[test]
fn csv_functions_are_quoted() {
    let table = settle_all_nct(NctCostModel::GateCount);
    let mut csv = Vec::new();
    write_table_csv(&table, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("function,cost"));
    assert_eq!(lines.next(), Some("\"0,1,2,3,4,5,6,7\",0"));
    assert_eq!(text.lines().count(), 40321);
}
