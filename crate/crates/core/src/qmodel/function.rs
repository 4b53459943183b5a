// SPDX-License-Identifier: Apache-2.0

use core::fmt;

use super::line::LinePermutation;
use crate::Error;

/// Number of reversible functions on three bits (8!).
pub const FUNCTION_COUNT: usize = 40_320;

const FACTORIALS: [usize; 8] = [5040, 720, 120, 24, 6, 2, 1, 1];

/// A 3-bit reversible function, written as its 8 outputs: `out[i] = f(i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 8]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3, 4, 5, 6, 7]);

    pub fn new(outputs: [u8; 8]) -> Result<Permutation, Error> {
        let mut seen = 0u8;
        for &o in &outputs {
            if o > 7 || seen & (1 << o) != 0 {
                return Err(Error::InvalidFunction);
            }
            seen |= 1 << o;
        }
        Ok(Permutation(outputs))
    }

    pub fn from_slice(outputs: &[u8]) -> Result<Permutation, Error> {
        let arr: [u8; 8] = outputs.try_into().map_err(|_| Error::InvalidFunction)?;
        Permutation::new(arr)
    }

    #[inline]
    pub fn as_array(&self) -> [u8; 8] {
        self.0
    }

    #[inline]
    pub fn apply(&self, row: usize) -> usize {
        self.0[row] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 8];
        for (i, &o) in self.0.iter().enumerate() {
            inv[o as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut out = [0u8; 8];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[other.0[i] as usize];
        }
        Permutation(out)
    }

    /// `π ∘ f ∘ π⁻¹` with `π` acting on row indices by moving line bits.
    pub fn relabel(&self, perm: LinePermutation) -> Permutation {
        let mut out = [0u8; 8];
        for r in 0..8 {
            out[perm.apply_row(r)] = perm.apply_row(self.0[r] as usize) as u8;
        }
        Permutation(out)
    }

    /// Lexicographic rank in `0..40320` (Lehmer code).
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        let mut used = 0u8;
        for (i, &o) in self.0.iter().enumerate() {
            let below = (!used & ((1u16 << o) - 1) as u8).count_ones() as usize;
            rank += below * FACTORIALS[i];
            used |= 1 << o;
        }
        rank
    }

    pub fn unrank(mut rank: usize) -> Permutation {
        assert!(rank < FUNCTION_COUNT, "rank out of range");
        let mut out = [0u8; 8];
        let mut used = 0u8;
        for (i, o) in out.iter_mut().enumerate() {
            let mut k = rank / FACTORIALS[i];
            rank %= FACTORIALS[i];
            for v in 0..8u8 {
                if used & (1 << v) == 0 {
                    if k == 0 {
                        *o = v;
                        used |= 1 << v;
                        break;
                    }
                    k -= 1;
                }
            }
        }
        Permutation(out)
    }

    /// All reversible functions in rank order.
    pub fn all() -> impl Iterator<Item = Permutation> {
        (0..FUNCTION_COUNT).map(Permutation::unrank)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, o) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}")?;
        }
        Ok(())
    }
}
