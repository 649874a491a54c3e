//! Fixed-width bit strings and small GF(2) linear algebra.
//!
//! Bit strings are packed into a `u32` most-significant-first: character `j`
//! of the printed form lives at bit `width - 1 - j`. With this layout integer
//! order coincides with lexicographic order of the printed strings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported qubit count.
pub const MAX_WIDTH: usize = 24;

pub(crate) fn check_width(width: usize) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        return Err(Error::WidthOutOfRange {
            width,
            max: MAX_WIDTH,
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn mask(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

#[inline]
pub(crate) fn parity(v: u32) -> u32 {
    v.count_ones() & 1
}

/// A bit string of fixed width, also used as a coset label in F2^p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    width: u8,
    bits: u32,
}

impl BitString {
    /// Builds a bit string from its packed value. Bits above `width` are dropped.
    pub fn new(width: usize, bits: u32) -> Self {
        debug_assert!(width <= MAX_WIDTH);
        BitString {
            width: width as u8,
            bits: bits & mask(width),
        }
    }

    pub fn zeros(width: usize) -> Self {
        Self::new(width, 0)
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// Packed value; character 0 is the most significant bit.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Bit at printed position `j`.
    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.width());
        (self.bits >> (self.width() - 1 - j)) & 1 == 1
    }

    pub fn with(mut self, j: usize, value: bool) -> Self {
        assert!(j < self.width());
        let b = 1u32 << (self.width() - 1 - j);
        if value {
            self.bits |= b;
        } else {
            self.bits &= !b;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn xor(&self, other: &BitString) -> BitString {
        debug_assert_eq!(self.width, other.width);
        BitString {
            width: self.width,
            bits: self.bits ^ other.bits,
        }
    }

    /// Inner product over F2.
    pub fn dot(&self, other: &BitString) -> bool {
        parity(self.bits & other.bits) == 1
    }

    /// All `2^width` strings in lexicographic order.
    pub fn all(width: usize) -> impl Iterator<Item = BitString> {
        (0..(1u64 << width)).map(move |v| BitString::new(width, v as u32))
    }

    pub fn parse(text: &str, width: usize) -> Result<Self> {
        let s: BitString = text.parse()?;
        if s.width() != width {
            return Err(Error::Parse {
                position: s.width().min(width),
                message: format!("expected {width} bits, found {}", s.width()),
            });
        }
        Ok(s)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty bit string".into(),
            });
        }
        if text.len() > MAX_WIDTH {
            return Err(Error::WidthOutOfRange {
                width: text.len(),
                max: MAX_WIDTH,
            });
        }
        let mut bits = 0u32;
        for (j, ch) in text.chars().enumerate() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                other => {
                    return Err(Error::Parse {
                        position: j,
                        message: format!("unexpected character {other:?} in bit string"),
                    })
                }
            }
        }
        Ok(BitString::new(text.chars().count(), bits))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.width() {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Returns true iff the set is a subgroup of (F2^p, ⊕): it contains zero and
/// is closed under XOR.
pub fn is_xor_subgroup(strings: &[BitString]) -> bool {
    use std::collections::HashSet;
    let set: HashSet<u32> = strings.iter().map(|s| s.bits()).collect();
    if !set.contains(&0) {
        return false;
    }
    set.iter()
        .all(|a| set.iter().all(|b| set.contains(&(a ^ b))))
}

/// Row-reduced basis over GF(2) that remembers which input rows combine into
/// each basis vector.
#[derive(Debug, Clone, Default)]
pub(crate) struct Gf2Basis {
    // (pivot bit, reduced row, mask of contributing input indices)
    rows: Vec<(u32, u64, u64)>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` against the basis, returning the remainder and the mask
    /// of basis inputs that were folded in.
    pub fn reduce(&self, mut row: u64) -> (u64, u64) {
        let mut used = 0u64;
        for &(pivot, r, m) in &self.rows {
            if (row >> pivot) & 1 == 1 {
                row ^= r;
                used ^= m;
            }
        }
        (row, used)
    }

    /// Inserts the row contributed by input `index`. Returns `Err(mask)` when
    /// the row is dependent; `mask` then names the inputs (including `index`)
    /// whose rows sum to zero.
    pub fn insert(&mut self, row: u64, index: usize) -> std::result::Result<(), u64> {
        let (rem, used) = self.reduce(row);
        let mask = used ^ (1u64 << index);
        if rem == 0 {
            return Err(mask);
        }
        let pivot = 63 - rem.leading_zeros();
        // keep rows fully reduced on their pivots
        for entry in &mut self.rows {
            if (entry.1 >> pivot) & 1 == 1 {
                entry.1 ^= rem;
                entry.2 ^= mask;
            }
        }
        self.rows.push((pivot, rem, mask));
        Ok(())
    }
}

/// Rank over GF(2) of the given rows.
pub fn gf2_rank(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = Gf2Basis::new();
    let mut r = 0;
    for (i, row) in rows.into_iter().enumerate() {
        if basis.insert(row, i % 64).is_ok() {
            r += 1;
        }
    }
    r
}

/// Solves `A v = rhs` over GF(2), where `A` has the given rows and `rhs` bit
/// `t` (least significant = row 0) is the target of row `t`. Returns one
/// solution, or `None` when the system is inconsistent.
pub(crate) fn gf2_solve(rows: &[u64], rhs: u64) -> Option<u64> {
    // Augmented elimination: track right-hand side alongside each row.
    let mut sys: Vec<(u64, bool)> = rows
        .iter()
        .enumerate()
        .map(|(t, &r)| (r, (rhs >> t) & 1 == 1))
        .collect();
    let mut pivots: Vec<(u32, usize)> = Vec::new();
    let mut next = 0;
    for bit in (0..64u32).rev() {
        let Some(found) = (next..sys.len()).find(|&i| (sys[i].0 >> bit) & 1 == 1) else {
            continue;
        };
        sys.swap(next, found);
        let (prow, prhs) = sys[next];
        for (i, entry) in sys.iter_mut().enumerate() {
            if i != next && (entry.0 >> bit) & 1 == 1 {
                entry.0 ^= prow;
                entry.1 ^= prhs;
            }
        }
        pivots.push((bit, next));
        next += 1;
    }
    if sys[next..].iter().any(|&(r, b)| r == 0 && b) {
        return None;
    }
    let mut v = 0u64;
    for &(bit, i) in &pivots {
        if sys[i].1 {
            v |= 1u64 << bit;
        }
    }
    Some(v)
}
