// SPDX-License-Identifier: Apache-2.0

//! Exact synthesis of cost-optimal 3-line reversible circuits over the NCV
//! gate library (NOT, CNOT, controlled-V, controlled-V⁺).
//!
//! The search runs over quaternary truth tables: as long as every control is
//! Boolean, each line of each row sits at one of `0, V, 1, V⁺`. A bucketed
//! uniform-cost search from the identity settles all 40,320 reversible
//! functions under any linear gate-cost metric and any connected interaction
//! topology. An exact complex-matrix simulator in [`verify`] certifies the
//! produced circuits independently of that model.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

mod error;

pub mod analysis;
pub mod nct;
pub mod qmodel;
pub mod search;
pub mod verify;

pub use error::Error;
pub use qmodel::{
    Circuit, CircuitState, CostMetric, Gate, GateKind, Library, Line, Permutation, Topology,
};
pub use search::{SearchOptions, SynthesisTable};
