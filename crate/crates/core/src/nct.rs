// SPDX-License-Identifier: Apache-2.0

//! Optimal NOT/CNOT/Toffoli circuits and their translation into NCV gates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::qmodel::{
    Circuit, CircuitState, CostMetric, Gate, GateKind, Library, Permutation, Topology,
    FUNCTION_COUNT, LEX_BASE,
};
use crate::search::{BucketQueue, CostModel, SearchStats, SynthesisTable};
use crate::Error;

/// Cost of an NCT circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NctCostModel {
    /// Every gate counts 1.
    GateCount,
    /// Gate count first, then the NCV cost after replacing each Toffoli by
    /// its 5-gate NCV circuit, scalarized with [`LEX_BASE`].
    Lexicographic(CostMetric),
}

impl NctCostModel {
    /// NCV weights of (NOT, CNOT, Toffoli) after substitution.
    pub fn substitution_weights(metric: &CostMetric) -> [u32; 3] {
        [metric.not, metric.cnot, metric.weight(GateKind::Toffoli)]
    }

    pub fn weight(&self, kind: GateKind) -> u32 {
        match self {
            NctCostModel::GateCount => 1,
            NctCostModel::Lexicographic(m) => LEX_BASE + m.weight(kind),
        }
    }

    /// Gate count encoded in a table cost.
    pub fn gate_count(&self, cost: u32) -> u32 {
        match self {
            NctCostModel::GateCount => cost,
            NctCostModel::Lexicographic(_) => cost / LEX_BASE,
        }
    }

    pub fn substitution(&self) -> Option<CostMetric> {
        match self {
            NctCostModel::GateCount => None,
            NctCostModel::Lexicographic(m) => Some(*m),
        }
    }
}

impl fmt::Display for NctCostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NctCostModel::GateCount => f.write_str("nct-gc"),
            NctCostModel::Lexicographic(m) => write!(f, "nct-gc+{m}"),
        }
    }
}

fn apply_to_function(function: &Permutation, gate: Gate) -> Permutation {
    CircuitState::from_permutation(function)
        .apply(gate)
        .ok()
        .and_then(CircuitState::to_permutation)
        .expect("NCT gates map reversible functions to reversible functions")
}

/// Optimal NCT circuits for all 40,320 functions (12 placed gates, full
/// interaction).
pub fn settle_all_nct(model: NctCostModel) -> SynthesisTable {
    let gates = Gate::nct_library();
    let mut dist = vec![u32::MAX; FUNCTION_COUNT];
    let mut arrival = vec![u8::MAX; FUNCTION_COUNT];
    let mut settled = vec![false; FUNCTION_COUNT];
    let mut queue = BucketQueue::new();
    dist[0] = 0;
    queue.push(0, 0usize);
    let mut settled_count = 0;
    while let Some((cost, rank)) = queue.pop() {
        if settled[rank] || dist[rank] != cost {
            continue;
        }
        settled[rank] = true;
        settled_count += 1;
        let function = Permutation::unrank(rank);
        for (i, &g) in gates.iter().enumerate() {
            let next = apply_to_function(&function, g).rank();
            let c = cost + model.weight(g.kind());
            if !settled[next] && c < dist[next] {
                dist[next] = c;
                arrival[next] = i as u8;
                queue.push(c, next);
            }
        }
    }
    debug_assert_eq!(settled_count, FUNCTION_COUNT);

    let mut table = SynthesisTable::new(CostModel::Nct(model), Topology::FULL);
    for (rank, &cost) in dist.iter().enumerate() {
        let mut function = Permutation::unrank(rank);
        let target = function;
        let mut reversed = Vec::new();
        while !function.is_identity() {
            let g = gates[arrival[function.rank()] as usize];
            reversed.push(g);
            function = apply_to_function(&function, g);
        }
        reversed.reverse();
        let witness = Circuit::new(Library::Nct, reversed).expect("NCT gates only");
        table.insert(target, cost, Some(witness));
    }
    table.set_stats(SearchStats {
        states_seen: FUNCTION_COUNT,
        states_settled: settled_count,
    });
    table
}

/// Replaces every `TOF(x, y; z)` with `V(y;z) CNOT(x;y) V⁺(y;z) CNOT(x;y)
/// V(x;z)`, where `x` is the lower-lettered control.
pub fn toffoli_substitute(circuit: &Circuit) -> Circuit {
    let mut out = Vec::with_capacity(circuit.len());
    for &g in circuit.gates() {
        if g.kind() != GateKind::Toffoli {
            out.push(g);
            continue;
        }
        let mut cs = g.controls();
        let (x, y) = (cs.next().unwrap(), cs.next().unwrap());
        let z = g.target();
        out.extend([
            Gate::v(y, z),
            Gate::cnot(x, y),
            Gate::v_dag(y, z),
            Gate::cnot(x, y),
            Gate::v(x, z),
        ]);
    }
    Circuit::ncv(out)
}

/// NCV cost of the substituted witness of `function` in an NCT table.
pub fn substituted_cost(
    table: &SynthesisTable,
    function: &Permutation,
    metric: &CostMetric,
) -> Result<u32, Error> {
    let witness = table.witness(function).ok_or(Error::IncompleteTable {
        settled: table.settled_count(),
    })?;
    Ok(witness.cost(metric))
}
