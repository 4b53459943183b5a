// SPDX-License-Identifier: Apache-2.0

use alloc::vec::Vec;
use core::fmt;

use super::function::Permutation;
use super::gate::{Gate, GateKind};
use super::line::{LinePermutation, Topology};
use super::metric::CostMetric;
use super::state::CircuitState;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Library {
    /// NOT, CNOT, controlled-V, controlled-V⁺.
    Ncv,
    /// NOT, CNOT, two-control Toffoli.
    Nct,
}

impl Library {
    pub fn admits(self, kind: GateKind) -> bool {
        match self {
            Library::Ncv => kind != GateKind::Toffoli,
            Library::Nct => !kind.is_quantum(),
        }
    }
}

/// An ordered gate list, applied first to last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    gates: Vec<Gate>,
    library: Library,
}

impl Circuit {
    pub fn new(library: Library, gates: Vec<Gate>) -> Result<Circuit, Error> {
        if let Some(g) = gates.iter().find(|g| !library.admits(g.kind())) {
            return Err(Error::LibraryMismatch { gate: *g });
        }
        Ok(Circuit { gates, library })
    }

    pub fn empty(library: Library) -> Circuit {
        Circuit {
            gates: Vec::new(),
            library,
        }
    }

    /// NCT if any Toffoli is present, NCV otherwise.
    pub fn infer(gates: Vec<Gate>) -> Result<Circuit, Error> {
        let library = if gates.iter().any(|g| g.kind() == GateKind::Toffoli) {
            Library::Nct
        } else {
            Library::Ncv
        };
        Circuit::new(library, gates)
    }

    /// # Panics
    /// If a Toffoli gate is present.
    pub fn ncv(gates: Vec<Gate>) -> Circuit {
        Circuit::new(Library::Ncv, gates).expect("NCV circuit without Toffoli gates")
    }

    #[inline]
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn into_gates(self) -> Vec<Gate> {
        self.gates
    }

    #[inline]
    pub fn library(&self) -> Library {
        self.library
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn cost(&self, metric: &CostMetric) -> u32 {
        self.gates.iter().map(|g| metric.weight(g.kind())).sum()
    }

    /// Number of controlled-V and controlled-V⁺ gates.
    pub fn quantum_gate_count(&self) -> usize {
        self.gates.iter().filter(|g| g.kind().is_quantum()).count()
    }

    /// Reversed gate order with every gate inverted; realizes `f⁻¹`.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            gates: self.gates.iter().rev().map(|g| g.inverse()).collect(),
            library: self.library,
        }
    }

    /// Exchanges every controlled-V with controlled-V⁺ and vice versa.
    pub fn vswap(&self) -> Circuit {
        Circuit {
            gates: self
                .gates
                .iter()
                .map(|g| {
                    if g.kind().is_quantum() {
                        g.inverse()
                    } else {
                        *g
                    }
                })
                .collect(),
            library: self.library,
        }
    }

    /// Renames lines; the result realizes the conjugated function.
    pub fn relabel(&self, perm: LinePermutation, topology: Topology) -> Result<Circuit, Error> {
        let gates: Vec<Gate> = self.gates.iter().map(|g| g.relabel(perm)).collect();
        if let Some(g) = gates.iter().find(|g| !g.fits(topology)) {
            return Err(Error::TopologyViolation { gate: *g });
        }
        Ok(Circuit {
            gates,
            library: self.library,
        })
    }

    pub fn fits(&self, topology: Topology) -> bool {
        self.gates.iter().all(|g| g.fits(topology))
    }

    /// Folds the gates over the identity truth table.
    pub fn simulate(&self) -> Result<CircuitState, Error> {
        self.gates
            .iter()
            .try_fold(CircuitState::IDENTITY, |s, g| s.apply(*g))
    }

    /// The reversible function realized, or `None` if the final state still
    /// carries quantum values.
    pub fn realized_function(&self) -> Result<Option<Permutation>, Error> {
        Ok(self.simulate()?.to_permutation())
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), Error> {
        if !self.library.admits(gate.kind()) {
            return Err(Error::LibraryMismatch { gate });
        }
        self.gates.push(gate);
        Ok(())
    }
}

/// One gate per line in the text circuit format.
impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gates.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmodel::Line::*;

    fn toffoli_ncv() -> Circuit {
        Circuit::ncv(alloc::vec![
            Gate::v(B, C),
            Gate::cnot(A, B),
            Gate::v_dag(B, C),
            Gate::cnot(A, B),
            Gate::v(A, C),
        ])
    }

    #[test]
    fn cost_examples() {
        let first_found = Circuit::ncv(alloc::vec![Gate::not(A), Gate::not(B), Gate::cnot(A, B)]);
        assert_eq!(first_found.cost(&CostMetric::NCV_155), 7);
        let optimal = Circuit::ncv(alloc::vec![Gate::cnot(A, B), Gate::not(A)]);
        assert_eq!(optimal.cost(&CostMetric::NCV_155), 6);
        assert_eq!(first_found.realized_function(), optimal.realized_function());
        assert_eq!(Circuit::empty(Library::Ncv).cost(&CostMetric::NCV_012), 0);
    }

    #[test]
    fn invert_example() {
        let c = Circuit::ncv(alloc::vec![Gate::v(A, C), Gate::cnot(A, B)]);
        assert_eq!(c.inverse().gates(), &[Gate::cnot(A, B), Gate::v_dag(A, C)]);
        assert!(Circuit::empty(Library::Ncv).inverse().is_empty());
        let mut both = toffoli_ncv().into_gates();
        both.extend(toffoli_ncv().inverse().into_gates());
        assert_eq!(
            Circuit::ncv(both).simulate().unwrap(),
            CircuitState::IDENTITY
        );
    }

    #[test]
    fn toffoli_decomposition_and_vswap() {
        let tof = Permutation::new([0, 1, 2, 3, 4, 5, 7, 6]).unwrap();
        assert_eq!(toffoli_ncv().realized_function().unwrap(), Some(tof));
        assert_eq!(
            toffoli_ncv().vswap().realized_function().unwrap(),
            Some(tof)
        );
        let lone = Circuit::ncv(alloc::vec![Gate::v(B, C)]);
        assert_eq!(lone.vswap().gates(), &[Gate::v_dag(B, C)]);
        assert_ne!(lone.simulate().unwrap(), lone.vswap().simulate().unwrap());
        let classical = Circuit::ncv(alloc::vec![Gate::not(A), Gate::cnot(B, C)]);
        assert_eq!(classical.vswap(), classical);
    }

    #[test]
    fn relabel_under_path() {
        let c = Circuit::ncv(alloc::vec![Gate::cnot(A, C)]);
        let swap = LinePermutation::swap(A, C);
        assert!(matches!(
            c.relabel(swap, Topology::PATH),
            Err(Error::TopologyViolation { .. })
        ));
        let ok = Circuit::ncv(alloc::vec![Gate::cnot(A, B)]);
        assert_eq!(
            ok.relabel(swap, Topology::PATH).unwrap().gates(),
            &[Gate::cnot(C, B)]
        );
    }

    #[test]
    fn relabel_toffoli_gate() {
        let c = Circuit::infer(alloc::vec![Gate::toffoli(A, B, C)]).unwrap();
        let r = c
            .relabel(LinePermutation::swap(A, C), Topology::FULL)
            .unwrap();
        assert_eq!(r.gates(), &[Gate::toffoli(C, B, A)]);
        assert_eq!(
            r.realized_function().unwrap().unwrap().as_array(),
            [0, 1, 2, 7, 4, 5, 6, 3]
        );
    }

    #[test]
    fn library_checks() {
        assert!(Circuit::new(Library::Ncv, alloc::vec![Gate::toffoli(A, B, C)]).is_err());
        assert!(Circuit::new(Library::Nct, alloc::vec![Gate::v(A, B)]).is_err());
        assert!(Circuit::infer(alloc::vec![Gate::toffoli(A, B, C), Gate::v(A, B)]).is_err());
    }
}
