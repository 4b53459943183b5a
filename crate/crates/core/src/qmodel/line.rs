// SPDX-License-Identifier: Apache-2.0

//! Lines, line relabelings and qubit-interaction topologies.

use core::fmt;

use crate::Error;

/// One of the three circuit lines. Line `A` is the most significant bit of a
/// truth-table row index, so row `i = 4a + 2b + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Line {
    A = 0,
    B = 1,
    C = 2,
}

impl Line {
    pub const ALL: [Line; 3] = [Line::A, Line::B, Line::C];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub const fn mask(self) -> u8 {
        1 << (self as u8)
    }

    /// Bit position of this line inside a row index.
    #[inline]
    pub const fn row_shift(self) -> u32 {
        2 - self as u32
    }

    pub const fn from_index(i: usize) -> Option<Line> {
        match i {
            0 => Some(Line::A),
            1 => Some(Line::B),
            2 => Some(Line::C),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Option<Line> {
        match name {
            "a" | "A" => Some(Line::A),
            "b" | "B" => Some(Line::B),
            "c" | "C" => Some(Line::C),
            _ => None,
        }
    }

    pub const fn name(self) -> char {
        match self {
            Line::A => 'a',
            Line::B => 'b',
            Line::C => 'c',
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Iterates the lines present in a 3-bit line mask, in order a, b, c.
pub(crate) fn lines_in(mask: u8) -> impl Iterator<Item = Line> {
    Line::ALL.into_iter().filter(move |l| mask & l.mask() != 0)
}

/// A bijection on `{a, b, c}`; `map[old] = new`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinePermutation([u8; 3]);

impl LinePermutation {
    pub const IDENTITY: LinePermutation = LinePermutation([0, 1, 2]);

    /// All six relabelings, identity first.
    pub const ALL: [LinePermutation; 6] = [
        LinePermutation([0, 1, 2]),
        LinePermutation([0, 2, 1]),
        LinePermutation([1, 0, 2]),
        LinePermutation([1, 2, 0]),
        LinePermutation([2, 0, 1]),
        LinePermutation([2, 1, 0]),
    ];

    pub fn new(map: [u8; 3]) -> Result<Self, Error> {
        let mut seen = 0u8;
        for &m in &map {
            if m > 2 {
                return Err(Error::InvalidLinePermutation);
            }
            seen |= 1 << m;
        }
        if seen != 0b111 {
            return Err(Error::InvalidLinePermutation);
        }
        Ok(LinePermutation(map))
    }

    /// Swap of two lines.
    pub fn swap(x: Line, y: Line) -> Self {
        let mut map = [0, 1, 2];
        map.swap(x.index(), y.index());
        LinePermutation(map)
    }

    pub fn as_array(self) -> [u8; 3] {
        self.0
    }

    /// Position of this permutation in [`LinePermutation::ALL`].
    pub fn index(self) -> usize {
        LinePermutation::ALL
            .iter()
            .position(|p| *p == self)
            .expect("every bijection is listed")
    }

    #[inline]
    pub fn apply(self, line: Line) -> Line {
        Line::ALL[self.0[line.index()] as usize]
    }

    pub fn apply_mask(self, mask: u8) -> u8 {
        lines_in(mask).fold(0, |acc, l| acc | self.apply(l).mask())
    }

    /// Moves each line's bit of a row index to its new position.
    #[inline]
    pub fn apply_row(self, row: usize) -> usize {
        Line::ALL.iter().fold(0, |acc, &l| {
            let bit = (row >> l.row_shift()) & 1;
            acc | (bit << self.apply(l).row_shift())
        })
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0u8; 3];
        for (old, &new) in self.0.iter().enumerate() {
            inv[new as usize] = old as u8;
        }
        LinePermutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: LinePermutation) -> Self {
        LinePermutation([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
        ])
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl fmt::Display for LinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in Line::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}->{}", l, self.apply(*l))?;
        }
        Ok(())
    }
}

/// Unordered line pairs on which two-qubit gates may be placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Topology {
    pairs: u8,
}

const PAIR_AB: u8 = 0b001;
const PAIR_AC: u8 = 0b010;
const PAIR_BC: u8 = 0b100;

fn pair_bit(x: Line, y: Line) -> u8 {
    match (x.min(y), x.max(y)) {
        (Line::A, Line::B) => PAIR_AB,
        (Line::A, Line::C) => PAIR_AC,
        (Line::B, Line::C) => PAIR_BC,
        _ => 0,
    }
}

impl Topology {
    /// Every pair interacts directly.
    pub const FULL: Topology = Topology {
        pairs: PAIR_AB | PAIR_AC | PAIR_BC,
    };
    /// Nearest-neighbour chain `a - b - c`.
    pub const PATH: Topology = Topology {
        pairs: PAIR_AB | PAIR_BC,
    };
    /// No two-qubit interactions at all.
    pub const NONE: Topology = Topology { pairs: 0 };

    pub fn from_pairs(pairs: &[(Line, Line)]) -> Self {
        let pairs = pairs.iter().fold(0, |acc, &(x, y)| acc | pair_bit(x, y));
        Topology { pairs }
    }

    #[inline]
    pub fn allows(self, x: Line, y: Line) -> bool {
        self.pairs & pair_bit(x, y) != 0
    }

    pub fn pair_count(self) -> u32 {
        self.pairs.count_ones()
    }

    /// Three vertices are connected iff at least two of the three edges exist.
    pub fn is_connected(self) -> bool {
        self.pair_count() >= 2
    }

    /// Line relabelings that map the allowed pair set onto itself.
    pub fn symmetries(self) -> impl Iterator<Item = LinePermutation> {
        LinePermutation::ALL.into_iter().filter(move |p| {
            let mapped = Topology::from_pairs(
                &[(Line::A, Line::B), (Line::A, Line::C), (Line::B, Line::C)]
                    .into_iter()
                    .filter(|&(x, y)| self.allows(x, y))
                    .map(|(x, y)| (p.apply(x), p.apply(y)))
                    .collect::<alloc::vec::Vec<_>>(),
            );
            mapped == self
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Topology::FULL => "full",
            Topology::PATH => "path",
            Topology::NONE => "none",
            _ => "custom",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_a_c_moves_rows() {
        let p = LinePermutation::swap(Line::A, Line::C);
        // 011 -> 110
        assert_eq!(p.apply_row(3), 6);
        assert_eq!(p.apply_row(7), 7);
        assert_eq!(p.apply_row(1), 4);
    }

    #[test]
    fn composition_and_inverse() {
        for p in LinePermutation::ALL {
            assert!(p.compose(p.inverse()).is_identity());
            for q in LinePermutation::ALL {
                for r in 0..8 {
                    assert_eq!(p.compose(q).apply_row(r), p.apply_row(q.apply_row(r)));
                }
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(LinePermutation::new([0, 0, 1]).is_err());
        assert!(LinePermutation::new([0, 1, 3]).is_err());
        assert!(LinePermutation::new([2, 0, 1]).is_ok());
    }

    #[test]
    fn topology_symmetries() {
        assert_eq!(Topology::FULL.symmetries().count(), 6);
        let path: alloc::vec::Vec<_> = Topology::PATH.symmetries().collect();
        assert_eq!(
            path,
            [
                LinePermutation::IDENTITY,
                LinePermutation::swap(Line::A, Line::C)
            ]
        );
        assert!(Topology::PATH.is_connected());
        assert!(!Topology::from_pairs(&[(Line::A, Line::B)]).is_connected());
        assert!(!Topology::NONE.is_connected());
        assert!(!Topology::PATH.allows(Line::C, Line::A));
    }
}
