// SPDX-License-Identifier: Apache-2.0

use ncv_core::analysis::histogram;
use ncv_core::qmodel::{CostMetric, Permutation, Topology};
use ncv_core::search::{exhaustive_oracle, settle_all, synthesize_one, SearchOptions};
use ncv_core::verify::check_realizes;
use ncv_core::Error;

fn optimal(f: [u8; 8], metric: CostMetric, topology: Topology) -> u32 {
    let (cost, circuit) = synthesize_one(&f, metric, topology, &SearchOptions::default()).unwrap();
    let target = Permutation::new(f).unwrap();
    assert_eq!(circuit.cost(&metric), cost);
    assert!(circuit.fits(topology));
    assert!(check_realizes(&circuit, &target, 1e-9), "{circuit}");
    cost
}

#[test]
fn single_function_landmarks() {
    let full = Topology::FULL;
    let m = CostMetric::NCV_111;
    assert_eq!(optimal([0, 1, 2, 3, 4, 5, 7, 6], m, full), 5);
    assert_eq!(optimal([0, 1, 3, 2, 4, 5, 6, 7], m, full), 5);
    assert_eq!(optimal([0, 1, 2, 3, 5, 4, 6, 7], m, full), 5);
    assert_eq!(optimal([1, 0, 2, 3, 4, 5, 6, 7], m, full), 6);
    assert_eq!(optimal([0, 1, 2, 3, 6, 7, 5, 4], m, full), 4);
    assert_eq!(optimal([0, 1, 2, 3, 4, 5, 6, 7], m, full), 0);
    assert_eq!(optimal([1, 0, 3, 2, 5, 4, 7, 6], m, full), 1);
}

#[test]
fn path_topology_landmarks() {
    let path = Topology::PATH;
    let m = CostMetric::NCV_111;
    assert_eq!(optimal([0, 1, 2, 3, 4, 5, 7, 6], m, path), 9);
    assert_eq!(optimal([0, 1, 2, 7, 4, 5, 6, 3], m, path), 9);
    assert_eq!(optimal([0, 1, 2, 3, 4, 7, 6, 5], m, path), 13);
    assert_eq!(optimal([0, 1, 4, 5, 2, 3, 7, 6], m, path), 6);
}

#[test]
fn toffoli_under_other_metrics() {
    let tof = [0, 1, 2, 3, 4, 5, 7, 6];
    assert_eq!(optimal(tof, CostMetric::NCV_012, Topology::FULL), 8);
    assert_eq!(optimal(tof, CostMetric::NCV_155, Topology::FULL), 25);
}

#[test]
fn invalid_inputs() {
    let o = SearchOptions::default();
    assert_eq!(
        synthesize_one(
            &[0, 0, 1, 2, 3, 4, 5, 6],
            CostMetric::NCV_111,
            Topology::FULL,
            &o
        )
        .unwrap_err(),
        Error::InvalidFunction
    );
    assert_eq!(
        synthesize_one(
            &[0, 1, 2, 3, 4, 5, 6, 7],
            CostMetric::NCV_111,
            Topology::from_pairs(&[]),
            &o
        )
        .unwrap_err(),
        Error::DisconnectedTopology
    );
}

fn agree_with_oracle(metric: CostMetric, topology: Topology, max_cost: u32) {
    let table = settle_all(metric, topology, &SearchOptions::default()).unwrap();
    let oracle = exhaustive_oracle(metric, topology, max_cost);
    for (f, cost, _) in table.iter() {
        match oracle.get(&f) {
            Some(&c) => assert_eq!(c, cost, "{f} under {metric}/{topology}"),
            None => assert!(cost > max_cost, "{f} costs {cost} but oracle missed it"),
        }
    }
}

#[test]
fn full_ncv_111_table() {
    let metric = CostMetric::NCV_111;
    let table = settle_all(metric, Topology::FULL, &SearchOptions::default()).unwrap();
    assert!(table.is_complete() && table.has_witnesses());
    let hist = histogram(&table).unwrap();
    assert_eq!(&hist.dense()[..4], &[1, 9, 51, 187]);
    assert_eq!(hist.total(), 40320);
    for (f, cost, w) in table.iter() {
        let w = w.unwrap();
        assert_eq!(w.cost(&metric), cost);
        assert!(check_realizes(w, &f, 1e-9), "{f}:\n{w}");
    }
    let oracle = exhaustive_oracle(metric, Topology::FULL, 3);
    assert_eq!(oracle.len(), 1 + 9 + 51 + 187);
    for (f, c) in oracle {
        assert_eq!(table.cost(&f), Some(c), "{f}");
    }
}

#[test]
fn path_table_agrees_with_oracle() {
    agree_with_oracle(CostMetric::NCV_111, Topology::PATH, 3);
}

#[test]
fn zero_cost_not_table_agrees_with_oracle() {
    agree_with_oracle(CostMetric::NCV_012, Topology::FULL, 2);
}
