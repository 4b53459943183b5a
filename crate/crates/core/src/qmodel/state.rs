// SPDX-License-Identifier: Apache-2.0

//! Quaternary truth tables of 3-line NCV circuits.
//!
//! While every control is Boolean, each line of each truth-table row holds
//! one of the four values `0, V, 1, V⁺`, i.e. `V^k |0⟩` for `k ∈ Z₄`. NOT adds
//! 2, controlled-V adds 1 and controlled-V⁺ adds 3 to the target level in the
//! rows where the control is 1.
//!
//! A [`CircuitState`] stores those levels as two bit planes per line, packed
//! into the low 48 bits of a `u64`:
//!
//! ```text
//!   bits 16l .. 16l+8   Boolean plane of line l (bit r = level(r, l) >> 1)
//!   bits 16l+8 .. 16l+16 quantum plane of line l (bit r = level(r, l) & 1)
//! ```

use core::fmt;

use super::function::Permutation;
use super::gate::{Gate, GateKind};
use super::line::{Line, LinePermutation};
use crate::Error;

/// Level of one line in one row: 0 ↦ `0`, 1 ↦ `V`, 2 ↦ `1`, 3 ↦ `V⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuaternaryValue(u8);

impl QuaternaryValue {
    pub const ZERO: QuaternaryValue = QuaternaryValue(0);
    pub const V: QuaternaryValue = QuaternaryValue(1);
    pub const ONE: QuaternaryValue = QuaternaryValue(2);
    pub const V_DAG: QuaternaryValue = QuaternaryValue(3);

    pub const fn new(level: u8) -> QuaternaryValue {
        QuaternaryValue(level & 3)
    }

    #[inline]
    pub const fn level(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn boolean(self) -> u8 {
        self.0 >> 1
    }

    #[inline]
    pub const fn is_quantum(self) -> bool {
        self.0 & 1 == 1
    }

    #[inline]
    pub const fn add(self, steps: u8) -> QuaternaryValue {
        QuaternaryValue((self.0 + steps) & 3)
    }
}

impl fmt::Display for QuaternaryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "V",
            2 => "1",
            _ => "V+",
        })
    }
}

/// Truth table of 8 rows × 3 quaternary values, packed into 48 bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircuitState(u64);

const PLANE: u64 = 0xFF;
const BOOL_PLANES: u64 = 0x0000_00FF_00FF_00FF;
const QUANTUM_PLANES: u64 = BOOL_PLANES << 8;
/// Boolean planes of the identity: rows with a=1, b=1, c=1 respectively.
const IDENTITY_PLANES: [u8; 3] = [0xF0, 0xCC, 0xAA];

#[inline]
const fn bool_shift(line: usize) -> u32 {
    16 * line as u32
}

#[inline]
const fn quantum_shift(line: usize) -> u32 {
    16 * line as u32 + 8
}

impl CircuitState {
    pub const IDENTITY: CircuitState = CircuitState(
        (IDENTITY_PLANES[0] as u64)
            | (IDENTITY_PLANES[1] as u64) << 16
            | (IDENTITY_PLANES[2] as u64) << 32,
    );

    /// Reinterprets a packed key. Bits above 48 must be clear.
    pub fn from_key(key: u64) -> Result<CircuitState, Error> {
        if key >> 48 != 0 {
            return Err(Error::UnknownState(key));
        }
        Ok(CircuitState(key))
    }

    #[inline]
    pub const fn key(self) -> u64 {
        self.0
    }

    pub fn from_rows(rows: &[[QuaternaryValue; 3]; 8]) -> CircuitState {
        let mut s = 0u64;
        for (r, row) in rows.iter().enumerate() {
            for (l, v) in row.iter().enumerate() {
                s |= u64::from(v.boolean()) << (bool_shift(l) + r as u32);
                s |= u64::from(v.level() & 1) << (quantum_shift(l) + r as u32);
            }
        }
        CircuitState(s)
    }

    /// The Boolean state realizing `function`.
    pub fn from_permutation(function: &Permutation) -> CircuitState {
        let mut s = 0u64;
        for (r, &out) in function.as_array().iter().enumerate() {
            for l in Line::ALL {
                let bit = u64::from((out >> l.row_shift()) & 1);
                s |= bit << (bool_shift(l.index()) + r as u32);
            }
        }
        CircuitState(s)
    }

    #[inline]
    pub fn boolean_plane(self, line: Line) -> u8 {
        ((self.0 >> bool_shift(line.index())) & PLANE) as u8
    }

    #[inline]
    pub fn quantum_plane(self, line: Line) -> u8 {
        ((self.0 >> quantum_shift(line.index())) & PLANE) as u8
    }

    pub fn value(self, row: usize, line: Line) -> QuaternaryValue {
        let hi = (self.boolean_plane(line) >> row) & 1;
        let lo = (self.quantum_plane(line) >> row) & 1;
        QuaternaryValue(hi << 1 | lo)
    }

    pub fn rows(self) -> [[QuaternaryValue; 3]; 8] {
        let mut out = [[QuaternaryValue::ZERO; 3]; 8];
        for (r, row) in out.iter_mut().enumerate() {
            for l in Line::ALL {
                row[l.index()] = self.value(r, l);
            }
        }
        out
    }

    /// True iff every entry is 0 or 1.
    #[inline]
    pub fn is_boolean(self) -> bool {
        self.0 & QUANTUM_PLANES == 0
    }

    /// Whether `line` holds a Boolean value in every row.
    #[inline]
    pub fn line_is_boolean(self, line: Line) -> bool {
        self.quantum_plane(line) == 0
    }

    /// The 24 quantum flags, line-major.
    pub fn quantum_signature(self) -> u32 {
        Line::ALL.iter().fold(0, |acc, &l| {
            acc | u32::from(self.quantum_plane(l)) << (8 * l.index())
        })
    }

    /// Row-wise Boolean part, as output patterns.
    pub fn boolean_projection(self) -> [u8; 8] {
        let planes = [
            self.boolean_plane(Line::A),
            self.boolean_plane(Line::B),
            self.boolean_plane(Line::C),
        ];
        let mut out = [0u8; 8];
        for (r, o) in out.iter_mut().enumerate() {
            *o = ((planes[0] >> r) & 1) << 2 | ((planes[1] >> r) & 1) << 1 | ((planes[2] >> r) & 1);
        }
        out
    }

    /// Checks that the Boolean projection hits every output pattern exactly
    /// once.
    #[inline]
    pub fn projection_is_permutation(self) -> bool {
        let a = self.boolean_plane(Line::A);
        let b = self.boolean_plane(Line::B);
        let c = self.boolean_plane(Line::C);
        let mut ok = true;
        for pattern in 0..8u8 {
            let pick = |plane: u8, bit: u8| if pattern & bit != 0 { plane } else { !plane };
            let rows = pick(a, 4) & pick(b, 2) & pick(c, 1);
            ok &= rows.count_ones() == 1;
        }
        ok
    }

    /// The realized reversible function, if this state is Boolean.
    pub fn to_permutation(self) -> Option<Permutation> {
        if !self.is_boolean() {
            return None;
        }
        Permutation::new(self.boolean_projection()).ok()
    }

    /// Applies one gate under the Boolean-control restriction.
    ///
    /// Every control line must be Boolean in all rows; otherwise the result
    /// would leave the product-state model and [`Error::QuantumControl`] is
    /// returned.
    #[inline]
    pub fn apply(self, gate: Gate) -> Result<CircuitState, Error> {
        let t = gate.target().index();
        let mut condition = 0xFFu8;
        for c in gate.controls() {
            if !self.line_is_boolean(c) {
                return Err(Error::QuantumControl { gate });
            }
            condition &= self.boolean_plane(c);
        }
        let m = u64::from(condition);
        let s = self.0;
        let next = match gate.kind() {
            GateKind::Not | GateKind::Cnot | GateKind::Toffoli => s ^ (m << bool_shift(t)),
            GateKind::V => {
                let lo = (s >> quantum_shift(t)) & PLANE;
                s ^ (m << quantum_shift(t)) ^ ((lo & m) << bool_shift(t))
            }
            GateKind::VDag => {
                let lo = (s >> quantum_shift(t)) & PLANE;
                s ^ (m << quantum_shift(t)) ^ ((!lo & m) << bool_shift(t))
            }
        };
        Ok(CircuitState(next))
    }

    /// Renames lines: the new state holds, at row `π(r)` and line `π(l)`, the
    /// value the old state held at row `r` and line `l`.
    pub fn relabel(self, perm: LinePermutation) -> CircuitState {
        let mut s = 0u64;
        for l in Line::ALL {
            let nl = perm.apply(l).index();
            let (hi, lo) = (self.boolean_plane(l), self.quantum_plane(l));
            let mut nhi = 0u64;
            let mut nlo = 0u64;
            for r in 0..8 {
                let nr = perm.apply_row(r);
                nhi |= u64::from((hi >> r) & 1) << nr;
                nlo |= u64::from((lo >> r) & 1) << nr;
            }
            s |= nhi << bool_shift(nl) | nlo << quantum_shift(nl);
        }
        CircuitState(s)
    }
}

impl fmt::Debug for CircuitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CircuitState({:#014x})", self.0)
    }
}

impl fmt::Display for CircuitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                f.write_str(" ")?;
            }
            write!(f, "[{} {} {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Line::*;

    fn q(l: u8) -> QuaternaryValue {
        QuaternaryValue::new(l)
    }

    #[test]
    fn quaternary_arithmetic() {
        for l in 0..4 {
            let v = q(l);
            assert_eq!(v.add(1).add(1), v.add(2));
            assert_eq!(v.add(3).add(3), v.add(2));
            assert_eq!(v.add(1).add(3), v);
            assert_eq!(v.boolean(), l / 2);
            assert_eq!(v.is_quantum(), l % 2 == 1);
        }
    }

    #[test]
    fn identity_rows() {
        let rows = CircuitState::IDENTITY.rows();
        for (r, row) in rows.iter().enumerate() {
            let bits = [(r >> 2) & 1, (r >> 1) & 1, r & 1];
            for l in 0..3 {
                assert_eq!(row[l].level() as usize, 2 * bits[l]);
            }
        }
        assert_eq!(CircuitState::from_rows(&rows), CircuitState::IDENTITY);
        assert_eq!(
            CircuitState::IDENTITY.to_permutation(),
            Some(Permutation::IDENTITY)
        );
    }

    #[test]
    fn not_on_c() {
        let s = CircuitState::IDENTITY.apply(Gate::not(C)).unwrap();
        assert_eq!(
            s.to_permutation().unwrap().as_array(),
            [1, 0, 3, 2, 5, 4, 7, 6]
        );
    }

    #[test]
    fn controlled_v_then_quantum_control() {
        let s = CircuitState::IDENTITY.apply(Gate::v(B, C)).unwrap();
        let id = CircuitState::IDENTITY.rows();
        let rows = s.rows();
        for r in 0..8 {
            let expect_c = match r {
                2 | 6 => QuaternaryValue::V,
                3 | 7 => QuaternaryValue::V_DAG,
                _ => id[r][2],
            };
            assert_eq!(rows[r][2], expect_c, "row {r}");
            assert_eq!(rows[r][0], id[r][0]);
            assert_eq!(rows[r][1], id[r][1]);
        }
        assert!(!s.is_boolean());
        assert_eq!(
            s.apply(Gate::v(C, B)),
            Err(Error::QuantumControl {
                gate: Gate::v(C, B)
            })
        );
        assert!(s.apply(Gate::cnot(C, A)).is_err());
        // V on the quantum line itself is fine.
        assert!(s.apply(Gate::v(A, C)).is_ok());
    }

    #[test]
    fn v_squared_is_cnot() {
        let start = CircuitState::IDENTITY.apply(Gate::not(A)).unwrap();
        let vv = start
            .apply(Gate::v(A, B))
            .unwrap()
            .apply(Gate::v(A, B))
            .unwrap();
        let cx = start.apply(Gate::cnot(A, B)).unwrap();
        assert_eq!(vv, cx);
        let ww = start
            .apply(Gate::v_dag(A, B))
            .unwrap()
            .apply(Gate::v_dag(A, B))
            .unwrap();
        assert_eq!(ww, cx);
    }

    #[test]
    fn permutation_round_trip() {
        let p = Permutation::new([7, 6, 4, 5, 2, 3, 1, 0]).unwrap();
        let s = CircuitState::from_permutation(&p);
        assert_eq!(s.to_permutation(), Some(p));
        assert!(s.projection_is_permutation());
    }

    #[test]
    fn relabel_matches_function_conjugation() {
        let tof = CircuitState::IDENTITY
            .apply(Gate::toffoli(A, B, C))
            .unwrap();
        let swapped = tof.relabel(LinePermutation::swap(A, C));
        assert_eq!(
            swapped.to_permutation().unwrap().as_array(),
            [0, 1, 2, 7, 4, 5, 6, 3]
        );
    }

    #[test]
    fn signature_and_key() {
        let s = CircuitState::IDENTITY.apply(Gate::v(B, C)).unwrap();
        assert_eq!(s.quantum_signature(), 0xCC << 16);
        assert_eq!(CircuitState::from_key(s.key()).unwrap(), s);
        assert!(CircuitState::from_key(1 << 50).is_err());
    }
}
