// SPDX-License-Identifier: Apache-2.0

use core::fmt;

use super::line::{lines_in, Line, LinePermutation, Topology};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Not,
    Cnot,
    V,
    /// Controlled-V⁺, the inverse of controlled-V.
    VDag,
    /// Two-control Toffoli; only appears in NCT circuits.
    Toffoli,
}

impl GateKind {
    pub const fn control_count(self) -> u32 {
        match self {
            GateKind::Not => 0,
            GateKind::Cnot | GateKind::V | GateKind::VDag => 1,
            GateKind::Toffoli => 2,
        }
    }

    pub const fn inverse(self) -> GateKind {
        match self {
            GateKind::V => GateKind::VDag,
            GateKind::VDag => GateKind::V,
            k => k,
        }
    }

    pub const fn is_quantum(self) -> bool {
        matches!(self, GateKind::V | GateKind::VDag)
    }

    pub const fn mnemonic(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::V => "V",
            GateKind::VDag => "V+",
            GateKind::Toffoli => "TOF",
        }
    }

    pub fn from_mnemonic(s: &str) -> Option<GateKind> {
        match s {
            "NOT" => Some(GateKind::Not),
            "CNOT" => Some(GateKind::Cnot),
            "V" => Some(GateKind::V),
            "V+" => Some(GateKind::VDag),
            "TOF" => Some(GateKind::Toffoli),
            _ => None,
        }
    }
}

/// The lines a gate touches: its control set and its target.
///
/// Two gates with equal placements are reducible when adjacent, whatever
/// their kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub controls: u8,
    pub target: Line,
}

impl Placement {
    /// Number of distinct placements (3 unary, 6 binary, 3 ternary).
    pub const COUNT: usize = 12;

    /// Dense index: NOT targets first, then ordered (control, target) pairs,
    /// then Toffoli targets.
    pub fn index(self) -> usize {
        let t = self.target.index();
        match self.controls.count_ones() {
            0 => t,
            1 => {
                let c = self.controls.trailing_zeros() as usize;
                3 + c * 2 + if t > c { t - 1 } else { t }
            }
            _ => 9 + t,
        }
    }

    pub fn from_index(index: usize) -> Option<Placement> {
        let line = |i: usize| Line::from_index(i).expect("line index below 3");
        match index {
            0..=2 => Some(Placement {
                controls: 0,
                target: line(index),
            }),
            3..=8 => {
                let c = (index - 3) / 2;
                let k = (index - 3) % 2;
                let t = if k < c { k } else { k + 1 };
                Some(Placement {
                    controls: line(c).mask(),
                    target: line(t),
                })
            }
            9..=11 => {
                let t = line(index - 9);
                Some(Placement {
                    controls: 0b111 & !t.mask(),
                    target: t,
                })
            }
            _ => None,
        }
    }

    pub fn relabel(self, perm: LinePermutation) -> Placement {
        Placement {
            controls: perm.apply_mask(self.controls),
            target: perm.apply(self.target),
        }
    }
}

/// A library gate placed on concrete lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    controls: u8,
    target: Line,
}

impl Gate {
    pub fn new(kind: GateKind, controls: &[Line], target: Line) -> Result<Gate, Error> {
        let mask = controls.iter().fold(0u8, |m, l| m | l.mask());
        if mask.count_ones() as usize != controls.len()
            || mask & target.mask() != 0
            || mask.count_ones() != kind.control_count()
        {
            return Err(Error::InvalidGate);
        }
        Ok(Gate {
            kind,
            controls: mask,
            target,
        })
    }

    pub const fn not(target: Line) -> Gate {
        Gate {
            kind: GateKind::Not,
            controls: 0,
            target,
        }
    }

    pub fn cnot(control: Line, target: Line) -> Gate {
        Self::controlled(GateKind::Cnot, control, target)
    }

    pub fn v(control: Line, target: Line) -> Gate {
        Self::controlled(GateKind::V, control, target)
    }

    pub fn v_dag(control: Line, target: Line) -> Gate {
        Self::controlled(GateKind::VDag, control, target)
    }

    /// # Panics
    /// If any two of the lines coincide.
    pub fn toffoli(c1: Line, c2: Line, target: Line) -> Gate {
        Gate::new(GateKind::Toffoli, &[c1, c2], target).expect("distinct Toffoli lines")
    }

    fn controlled(kind: GateKind, control: Line, target: Line) -> Gate {
        assert_ne!(control, target, "control and target must differ");
        Gate {
            kind,
            controls: control.mask(),
            target,
        }
    }

    #[inline]
    pub fn kind(self) -> GateKind {
        self.kind
    }

    #[inline]
    pub fn target(self) -> Line {
        self.target
    }

    /// Control set as a line mask (bit `l.index()` set for each control).
    #[inline]
    pub fn control_mask(self) -> u8 {
        self.controls
    }

    pub fn controls(self) -> impl Iterator<Item = Line> {
        lines_in(self.controls)
    }

    /// The single control of a CNOT/V/V⁺ gate.
    pub fn control(self) -> Option<Line> {
        (self.controls.count_ones() == 1).then(|| self.controls().next().unwrap())
    }

    #[inline]
    pub fn placement(self) -> Placement {
        Placement {
            controls: self.controls,
            target: self.target,
        }
    }

    pub fn inverse(self) -> Gate {
        Gate {
            kind: self.kind.inverse(),
            ..self
        }
    }

    pub fn relabel(self, perm: LinePermutation) -> Gate {
        Gate {
            kind: self.kind,
            controls: perm.apply_mask(self.controls),
            target: perm.apply(self.target),
        }
    }

    pub fn is_ncv(self) -> bool {
        self.kind != GateKind::Toffoli
    }

    /// Whether every interacting pair of lines of this gate is allowed.
    pub fn fits(self, topology: Topology) -> bool {
        self.controls().all(|c| topology.allows(c, self.target))
            && (self.controls.count_ones() < 2 || {
                let mut cs = self.controls();
                let (x, y) = (cs.next().unwrap(), cs.next().unwrap());
                topology.allows(x, y)
            })
    }

    /// Canonical NCV gate order: NOT by target, then CNOT, V, V⁺, each by
    /// (control, target) lexicographically.
    pub fn ncv_library() -> [Gate; 21] {
        let mut out = [Gate::not(Line::A); 21];
        let mut i = 0;
        for t in Line::ALL {
            out[i] = Gate::not(t);
            i += 1;
        }
        for kind in [GateKind::Cnot, GateKind::V, GateKind::VDag] {
            for c in Line::ALL {
                for t in Line::ALL {
                    if c != t {
                        out[i] = Gate::controlled(kind, c, t);
                        i += 1;
                    }
                }
            }
        }
        out
    }

    /// NOT, CNOT and Toffoli placements on three lines, in canonical order.
    pub fn nct_library() -> [Gate; 12] {
        let mut out = [Gate::not(Line::A); 12];
        let mut i = 0;
        for t in Line::ALL {
            out[i] = Gate::not(t);
            i += 1;
        }
        for c in Line::ALL {
            for t in Line::ALL {
                if c != t {
                    out[i] = Gate::cnot(c, t);
                    i += 1;
                }
            }
        }
        for t in Line::ALL {
            out[i] = Gate {
                kind: GateKind::Toffoli,
                controls: 0b111 & !t.mask(),
                target: t,
            };
            i += 1;
        }
        out
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.mnemonic())?;
        for c in self.controls() {
            write!(f, " {c}")?;
        }
        write!(f, " {}", self.target)
    }
}
