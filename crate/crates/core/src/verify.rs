// SPDX-License-Identifier: Apache-2.0

//! Exact 8×8 unitary simulation, independent of the quaternary model.

use num_complex::Complex64;

use crate::qmodel::{Circuit, CircuitState, Gate, GateKind, Line, Permutation};
use crate::Error;

const DIM: usize = 8;

type Block = [[Complex64; 2]; 2];

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const X: Block = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];

/// `V = (1+i)/2 · [[1, -i], [-i, 1]]`.
const V: Block = [[c(0.5, 0.5), c(0.5, -0.5)], [c(0.5, -0.5), c(0.5, 0.5)]];

/// `V⁺ = V†`.
const V_DAG: Block = [[c(0.5, -0.5), c(0.5, 0.5)], [c(0.5, 0.5), c(0.5, -0.5)]];

/// A 3-qubit operator; basis index `4a + 2b + c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unitary8([[Complex64; DIM]; DIM]);

impl Unitary8 {
    pub fn identity() -> Self {
        let mut m = [[c(0.0, 0.0); DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = c(1.0, 0.0);
        }
        Unitary8(m)
    }

    /// The 0/1 matrix sending basis state `i` to `f(i)`.
    pub fn permutation(function: &Permutation) -> Self {
        let mut m = [[c(0.0, 0.0); DIM]; DIM];
        for i in 0..DIM {
            m[function.apply(i)][i] = c(1.0, 0.0);
        }
        Unitary8(m)
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0[row][col]
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Unitary8) -> Unitary8 {
        let mut m = [[c(0.0, 0.0); DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = (0..DIM).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Unitary8(m)
    }

    pub fn adjoint(&self) -> Unitary8 {
        let mut m = [[c(0.0, 0.0); DIM]; DIM];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                *out = self.0[j][i].conj();
            }
        }
        Unitary8(m)
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_deviation(&self, other: &Unitary8) -> f64 {
        self.first_deviation(other, -1.0)
            .map_or(0.0, |d| d.deviation)
    }

    /// The entry of largest deviation if it exceeds `tol`.
    pub fn first_deviation(&self, other: &Unitary8, tol: f64) -> Option<Deviation> {
        let mut worst: Option<Deviation> = None;
        for i in 0..DIM {
            for j in 0..DIM {
                let d = self.0[i][j] - other.0[i][j];
                let dev = libm::hypot(d.re, d.im);
                if dev > tol && worst.is_none_or(|w| dev > w.deviation) {
                    worst = Some(Deviation {
                        row: i,
                        col: j,
                        found: self.0[i][j],
                        expected: other.0[i][j],
                        deviation: dev,
                    });
                }
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint()
            .mul(self)
            .max_deviation(&Unitary8::identity())
            <= tol
    }
}

/// One mismatching matrix entry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deviation {
    pub row: usize,
    pub col: usize,
    pub found: Complex64,
    pub expected: Complex64,
    pub deviation: f64,
}

fn bit(index: usize, line: Line) -> usize {
    (index >> line.row_shift()) & 1
}

/// Embeds a gate's 2×2 block on its target, conditioned on all controls
/// being 1.
pub fn gate_unitary(gate: Gate) -> Unitary8 {
    let block = match gate.kind() {
        GateKind::Not | GateKind::Cnot | GateKind::Toffoli => X,
        GateKind::V => V,
        GateKind::VDag => V_DAG,
    };
    let t = gate.target();
    let mut m = [[c(0.0, 0.0); DIM]; DIM];
    for col in 0..DIM {
        let active = gate.controls().all(|l| bit(col, l) == 1);
        if !active {
            m[col][col] = c(1.0, 0.0);
            continue;
        }
        let base = col & !(1 << t.row_shift());
        for out in 0..2 {
            m[base | out << t.row_shift()][col] = block[out][bit(col, t)];
        }
    }
    Unitary8(m)
}

/// Product of the gate unitaries, first gate applied first.
pub fn circuit_unitary(circuit: &Circuit) -> Unitary8 {
    circuit
        .gates()
        .iter()
        .fold(Unitary8::identity(), |acc, &g| gate_unitary(g).mul(&acc))
}

/// Largest-deviation entry between the circuit's unitary and the permutation
/// matrix of `function`, if it exceeds `tol`.
pub fn realization_mismatch(
    circuit: &Circuit,
    function: &Permutation,
    tol: f64,
) -> Option<Deviation> {
    circuit_unitary(circuit).first_deviation(&Unitary8::permutation(function), tol)
}

/// Whether `circuit` implements `function` exactly (within `tol`, no global
/// phase allowance).
pub fn check_realizes(circuit: &Circuit, function: &Permutation, tol: f64) -> bool {
    realization_mismatch(circuit, function, tol).is_none()
}

/// `V^level |0⟩`.
fn level_state(level: u8) -> [Complex64; 2] {
    match level & 3 {
        0 => [c(1.0, 0.0), c(0.0, 0.0)],
        1 => [V[0][0], V[1][0]],
        2 => [c(0.0, 0.0), c(1.0, 0.0)],
        _ => [V_DAG[0][0], V_DAG[1][0]],
    }
}

/// Compares, for each basis input, the unitary image with the product state
/// predicted by the quaternary simulation.
pub fn check_model_consistency(circuit: &Circuit, tol: f64) -> Result<bool, Error> {
    let state = circuit
        .gates()
        .iter()
        .try_fold(CircuitState::IDENTITY, |s, &g| {
            s.apply(g).map_err(|_| Error::IllegalCircuit { gate: g })
        })?;
    let u = circuit_unitary(circuit);
    let rows = state.rows();
    for (x, row) in rows.iter().enumerate() {
        let [a, b, cc] = [
            level_state(row[0].level()),
            level_state(row[1].level()),
            level_state(row[2].level()),
        ];
        for y in 0..DIM {
            let expected = a[(y >> 2) & 1] * b[(y >> 1) & 1] * cc[y & 1];
            let d = u.entry(y, x) - expected;
            if libm::hypot(d.re, d.im) > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmodel::Line::*;
    use alloc::vec;

    const TOL: f64 = 1e-9;

    fn toffoli_ncv() -> Circuit {
        Circuit::ncv(vec![
            Gate::v(B, C),
            Gate::cnot(A, B),
            Gate::v_dag(B, C),
            Gate::cnot(A, B),
            Gate::v(A, C),
        ])
    }

    #[test]
    fn not_on_msb() {
        let p = Permutation::new([4, 5, 6, 7, 0, 1, 2, 3]).unwrap();
        assert!(gate_unitary(Gate::not(A)).max_deviation(&Unitary8::permutation(&p)) < TOL);
    }

    #[test]
    fn v_identities() {
        let v = gate_unitary(Gate::v(B, C));
        let vd = gate_unitary(Gate::v_dag(B, C));
        assert!(v.mul(&v).max_deviation(&gate_unitary(Gate::cnot(B, C))) < TOL);
        assert!(vd.mul(&vd).max_deviation(&gate_unitary(Gate::cnot(B, C))) < TOL);
        assert!(v.mul(&vd).max_deviation(&Unitary8::identity()) < TOL);
        assert!(v.is_unitary(TOL));
        assert!(v.adjoint().max_deviation(&vd) < TOL);
    }

    #[test]
    fn all_gates_unitary() {
        for g in Gate::ncv_library().into_iter().chain(Gate::nct_library()) {
            assert!(gate_unitary(g).is_unitary(TOL), "{g}");
        }
    }

    #[test]
    fn realizes() {
        let tof = Permutation::new([0, 1, 2, 3, 4, 5, 7, 6]).unwrap();
        assert!(check_realizes(&toffoli_ncv(), &tof, TOL));
        assert!(check_realizes(&toffoli_ncv().vswap(), &tof, TOL));
        assert!(check_realizes(
            &Circuit::ncv(vec![]),
            &Permutation::IDENTITY,
            TOL
        ));
        let lone_v = Circuit::ncv(vec![Gate::v(B, C)]);
        assert!(Permutation::all().all(|p| !check_realizes(&lone_v, &p, TOL)));
        let not_a = Circuit::ncv(vec![Gate::not(A)]);
        let m = realization_mismatch(&not_a, &Permutation::IDENTITY, TOL).unwrap();
        assert!((m.deviation - 1.0).abs() < TOL);
    }

    #[test]
    fn model_consistency() {
        assert_eq!(
            check_model_consistency(&Circuit::ncv(vec![Gate::v(B, C)]), TOL),
            Ok(true)
        );
        assert_eq!(check_model_consistency(&toffoli_ncv(), TOL), Ok(true));
        let classical = Circuit::ncv(vec![Gate::not(A), Gate::cnot(A, B), Gate::cnot(C, A)]);
        assert_eq!(check_model_consistency(&classical, TOL), Ok(true));
        let illegal = Circuit::ncv(vec![Gate::v(B, C), Gate::v(C, A)]);
        assert_eq!(
            check_model_consistency(&illegal, TOL),
            Err(Error::IllegalCircuit {
                gate: Gate::v(C, A)
            })
        );
    }
}
