// SPDX-License-Identifier: Apache-2.0

use crate::qmodel::Gate;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("gate `{gate}` has a control line carrying a non-Boolean value")]
    QuantumControl { gate: Gate },
    #[error("gate `{gate}` uses a line pair outside the topology")]
    TopologyViolation { gate: Gate },
    #[error("gate `{gate}` does not belong to the circuit's library")]
    LibraryMismatch { gate: Gate },
    #[error(
        "invalid gate: controls must be distinct, disjoint from the target and match the kind"
    )]
    InvalidGate,
    #[error("not a line permutation")]
    InvalidLinePermutation,
    #[error("not a permutation of 0..7")]
    InvalidFunction,
    #[error("topology is not connected")]
    DisconnectedTopology,
    #[error("search budget exceeded after settling {settled} functions ({states} states)")]
    BudgetExceeded { settled: usize, states: usize },
    #[error("search frontier exhausted with {settled} functions settled")]
    Unreachable { settled: usize },
    #[error("state {0:#x} was never reached")]
    UnknownState(u64),
    #[error("table covers {settled} of 40320 functions")]
    IncompleteTable { settled: usize },
    #[error("tables were built under different cost models")]
    MetricMismatch,
    #[error("circuit violates the Boolean-control restriction at `{gate}`")]
    IllegalCircuit { gate: Gate },
}
