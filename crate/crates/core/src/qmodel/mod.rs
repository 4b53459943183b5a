// SPDX-License-Identifier: Apache-2.0

//! Quaternary semantics of NCV gates on three lines.

mod circuit;
mod function;
mod gate;
mod line;
mod metric;
mod state;

pub use circuit::{Circuit, Library};
pub use function::{Permutation, FUNCTION_COUNT};
pub use gate::{Gate, GateKind, Placement};
pub use line::{Line, LinePermutation, Topology};
pub use metric::{CostMetric, LEX_BASE};
pub use state::{CircuitState, QuaternaryValue};
