// SPDX-License-Identifier: Apache-2.0

use core::fmt;

use super::gate::GateKind;

/// Scale used to fold a (primary, secondary) cost pair into one integer.
///
/// Must exceed any secondary total; optimal 3-line circuits stay below 30
/// gates of weight at most a few dozen, far from 4096.
pub const LEX_BASE: u32 = 4096;

/// Linear gate-cost metric over the NCV library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CostMetric {
    pub not: u32,
    pub cnot: u32,
    pub v: u32,
    pub v_dag: u32,
}

impl CostMetric {
    /// Plain gate count.
    pub const NCV_111: CostMetric = CostMetric::new(1, 1, 1, 1);
    /// CNOT-count motivated: NOT free, controlled-V/V⁺ cost two CNOTs.
    pub const NCV_012: CostMetric = CostMetric::new(0, 1, 2, 2);
    pub const NCV_155: CostMetric = CostMetric::new(1, 5, 5, 5);

    pub const PRESETS: [(&'static str, CostMetric); 3] = [
        ("ncv-111", CostMetric::NCV_111),
        ("ncv-012", CostMetric::NCV_012),
        ("ncv-155", CostMetric::NCV_155),
    ];

    pub const fn new(not: u32, cnot: u32, v: u32, v_dag: u32) -> CostMetric {
        CostMetric {
            not,
            cnot,
            v,
            v_dag,
        }
    }

    /// `NCV-xyz`: V and V⁺ share the weight `z`.
    pub const fn xyz(x: u32, y: u32, z: u32) -> CostMetric {
        CostMetric::new(x, y, z, z)
    }

    /// Minimizes `primary` first and breaks ties with `secondary`.
    pub const fn lexicographic(primary: CostMetric, secondary: CostMetric) -> CostMetric {
        CostMetric {
            not: primary.not * LEX_BASE + secondary.not,
            cnot: primary.cnot * LEX_BASE + secondary.cnot,
            v: primary.v * LEX_BASE + secondary.v,
            v_dag: primary.v_dag * LEX_BASE + secondary.v_dag,
        }
    }

    /// Weight of one gate. A Toffoli is charged the cost of its standard
    /// 5-gate substitution (two CNOTs, two V and one V⁺).
    #[inline]
    pub const fn weight(&self, kind: GateKind) -> u32 {
        match kind {
            GateKind::Not => self.not,
            GateKind::Cnot => self.cnot,
            GateKind::V => self.v,
            GateKind::VDag => self.v_dag,
            GateKind::Toffoli => 2 * self.cnot + 2 * self.v + self.v_dag,
        }
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        Self::PRESETS
            .iter()
            .find(|(_, m)| m == self)
            .map(|(n, _)| *n)
    }

    pub fn max_weight(&self) -> u32 {
        self.not.max(self.cnot).max(self.v).max(self.v_dag)
    }
}

impl fmt::Display for CostMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.preset_name() {
            Some(name) => f.write_str(name),
            None if self.v == self.v_dag => {
                write!(f, "custom:{},{},{}", self.not, self.cnot, self.v)
            }
            None => write!(
                f,
                "custom:{},{},{},{}",
                self.not, self.cnot, self.v, self.v_dag
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toffoli_substitution_weights() {
        assert_eq!(CostMetric::NCV_111.weight(GateKind::Toffoli), 5);
        assert_eq!(CostMetric::NCV_012.weight(GateKind::Toffoli), 8);
        assert_eq!(CostMetric::NCV_155.weight(GateKind::Toffoli), 25);
    }

    #[test]
    fn names() {
        assert_eq!(alloc::format!("{}", CostMetric::xyz(1, 5, 5)), "ncv-155");
        assert_eq!(
            alloc::format!("{}", CostMetric::xyz(2, 3, 2)),
            "custom:2,3,2"
        );
        assert_eq!(
            alloc::format!("{}", CostMetric::new(1, 1, 1, 2)),
            "custom:1,1,1,2"
        );
    }

    #[test]
    fn lexicographic_splits_back() {
        let m = CostMetric::lexicographic(CostMetric::NCV_111, CostMetric::NCV_012);
        let total = m.weight(GateKind::V) + m.weight(GateKind::Not);
        assert_eq!(total / LEX_BASE, 2);
        assert_eq!(total % LEX_BASE, 2);
    }
}
