//! Exact arithmetic on the p-qubit Pauli group.
//!
//! A [`PauliSpinor`] is stored as `i^phase · X^a Z^b`, with X applied after Z on
//! every qubit. Multiplication follows
//!
//! ```text
//! (i^d1 X^a1 Z^b1)(i^d2 X^a2 Z^b2) = i^(d1 + d2 + 2 b1·a2) X^(a1⊕a2) Z^(b1⊕b2)
//! ```
//!
//! The text form writes `Y` for positions with `a_j = b_j = 1` and absorbs one
//! factor of `i` per `Y`, so an unprefixed string is always Hermitian.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, check_width, parity, BitString};
use crate::error::{Error, Result};

/// A power of `i`, kept modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn new(exp: u32) -> Self {
        Phase((exp % 4) as u8)
    }

    pub fn exp(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// Text prefix used in Pauli strings and seed terms.
    pub fn prefix(self) -> &'static str {
        match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }

    pub fn from_prefix(text: &str) -> Option<Phase> {
        match text {
            "" | "+" => Some(Phase::ONE),
            "-" => Some(Phase::MINUS_ONE),
            "+i" => Some(Phase::I),
            "-i" => Some(Phase::MINUS_I),
            _ => None,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

/// A signed tensor product of Pauli matrices: `i^phase · X^x Z^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliSpinor {
    width: u8,
    phase: u8,
    x: u32,
    z: u32,
}

impl PauliSpinor {
    /// Builds a spinor from packed parts; bit layout as in [`BitString`].
    pub fn from_parts(width: usize, phase_exp: u32, x: u32, z: u32) -> Self {
        debug_assert!((1..=bits::MAX_WIDTH).contains(&width));
        let m = bits::mask(width);
        PauliSpinor {
            width: width as u8,
            phase: (phase_exp % 4) as u8,
            x: x & m,
            z: z & m,
        }
    }

    /// The Hermitian, positively signed spinor with the given parts.
    pub fn hermitian(width: usize, x: u32, z: u32) -> Self {
        Self::from_parts(width, (x & z).count_ones(), x, z)
    }

    pub fn identity(width: usize) -> Self {
        Self::from_parts(width, 0, 0, 0)
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn phase(&self) -> Phase {
        Phase(self.phase)
    }

    pub fn x_bits(&self) -> u32 {
        self.x
    }

    pub fn z_bits(&self) -> u32 {
        self.z
    }

    pub fn x_part(&self) -> BitString {
        BitString::new(self.width(), self.x)
    }

    pub fn z_part(&self) -> BitString {
        BitString::new(self.width(), self.z)
    }

    /// Number of `Y` positions.
    fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// Phase left over once each `Y` absorbs its factor of `i`; this is the
    /// prefix printed in the text form.
    pub fn residual_phase(&self) -> Phase {
        Phase::new(self.phase as u32 + 4 - self.y_count() % 4)
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase as u32 % 2) == parity(self.x & self.z)
    }

    pub fn is_identity_mod_phase(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn is_identity(&self) -> bool {
        self.is_identity_mod_phase() && self.phase == 0
    }

    pub fn is_diagonal(&self) -> bool {
        self.x == 0
    }

    /// Equality ignoring the phase.
    pub fn eq_mod_phase(&self, other: &PauliSpinor) -> bool {
        self.width == other.width && self.x == other.x && self.z == other.z
    }

    /// Key identifying the spinor modulo phase.
    pub fn key(&self) -> u64 {
        ((self.x as u64) << 32) | self.z as u64
    }

    /// Same operator modulo phase, rewritten in its Hermitian positive form.
    pub fn canonical(&self) -> PauliSpinor {
        PauliSpinor::hermitian(self.width(), self.x, self.z)
    }

    pub fn with_phase(&self, phase: Phase) -> PauliSpinor {
        PauliSpinor {
            phase: phase.0,
            ..*self
        }
    }

    pub fn negate(&self) -> PauliSpinor {
        self.with_phase(self.phase() * Phase::MINUS_ONE)
    }

    /// Hermitian conjugate, `i^-d (-1)^(a·b) X^a Z^b`.
    pub fn adjoint(&self) -> PauliSpinor {
        let exp = (4 - self.phase as u32) + 2 * parity(self.x & self.z);
        PauliSpinor::from_parts(self.width(), exp, self.x, self.z)
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn multiply(&self, other: &PauliSpinor) -> Result<PauliSpinor> {
        check_same_width(self, other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliSpinor) -> PauliSpinor {
        let exp = self.phase as u32 + other.phase as u32 + 2 * parity(self.z & other.x);
        PauliSpinor {
            width: self.width,
            phase: (exp % 4) as u8,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        }
    }

    /// Symplectic form: `false` when the two commute, `true` when they anticommute.
    pub fn anticommutes(&self, other: &PauliSpinor) -> Result<bool> {
        check_same_width(self, other)?;
        Ok(self.anticommutes_unchecked(other))
    }

    pub(crate) fn anticommutes_unchecked(&self, other: &PauliSpinor) -> bool {
        parity((self.x & other.z) ^ (self.z & other.x)) == 1
    }

    pub fn parse(text: &str, width: usize) -> Result<PauliSpinor> {
        let s: PauliSpinor = text.parse()?;
        if s.width() != width {
            return Err(Error::Parse {
                position: text.trim().len(),
                message: format!("expected {width} Pauli characters, found {}", s.width()),
            });
        }
        Ok(s)
    }
}

fn check_same_width(a: &PauliSpinor, b: &PauliSpinor) -> Result<()> {
    if a.width != b.width {
        return Err(Error::WidthMismatch {
            expected: a.width(),
            found: b.width(),
        });
    }
    Ok(())
}

/// Multiplies two spinors; fails on width mismatch.
pub fn multiply(s1: &PauliSpinor, s2: &PauliSpinor) -> Result<PauliSpinor> {
    s1.multiply(s2)
}

/// Returns 0 when the spinors commute and 1 when they anticommute.
pub fn commutes(s1: &PauliSpinor, s2: &PauliSpinor) -> Result<u8> {
    Ok(s1.anticommutes(s2)? as u8)
}

pub fn weight(s: &PauliSpinor) -> usize {
    s.weight()
}

/// Rank over F2 of the `(x|z)` rows of the spinors.
pub fn rank_mod_phase(spinors: &[PauliSpinor]) -> Result<usize> {
    if let Some(first) = spinors.first() {
        for s in spinors {
            check_same_width(first, s)?;
        }
    }
    Ok(bits::gf2_rank(spinors.iter().map(|s| s.key())))
}

pub fn parse_spinor(text: &str, width: usize) -> Result<PauliSpinor> {
    PauliSpinor::parse(text, width)
}

pub fn format_spinor(s: &PauliSpinor) -> String {
    s.to_string()
}

impl FromStr for PauliSpinor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (prefix, body) = split_prefix(text);
        let phase = Phase::from_prefix(prefix).ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("invalid phase prefix {prefix:?}"),
        })?;
        let width = body.chars().count();
        if width == 0 {
            return Err(Error::Parse {
                position: prefix.len(),
                message: "missing Pauli characters".into(),
            });
        }
        check_width(width)?;
        let (mut x, mut z, mut ys) = (0u32, 0u32, 0u32);
        for (j, ch) in body.chars().enumerate() {
            x <<= 1;
            z <<= 1;
            match ch {
                'I' => {}
                'X' => x |= 1,
                'Z' => z |= 1,
                'Y' => {
                    x |= 1;
                    z |= 1;
                    ys += 1;
                }
                other => {
                    return Err(Error::Parse {
                        position: prefix.len() + j,
                        message: format!(
                            "unexpected character {other:?}; expected one of I, X, Y, Z"
                        ),
                    })
                }
            }
        }
        Ok(PauliSpinor::from_parts(
            width,
            phase.exp() as u32 + ys,
            x,
            z,
        ))
    }
}

fn split_prefix(text: &str) -> (&str, &str) {
    for p in ["+i", "-i", "+", "-"] {
        if let Some(rest) = text.strip_prefix(p) {
            return (p, rest);
        }
    }
    ("", text)
}

impl fmt::Display for PauliSpinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.residual_phase().exp() {
            0 => "",
            p => Phase(p).prefix(),
        };
        f.write_str(prefix)?;
        let w = self.width();
        for j in 0..w {
            let bit = 1u32 << (w - 1 - j);
            let ch = match (self.x & bit != 0, self.z & bit != 0) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl Serialize for PauliSpinor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliSpinor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered list of distinct-mod-phase errors whose first entry is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorSet {
    width: usize,
    errors: Vec<PauliSpinor>,
}

impl ErrorSet {
    pub fn new(errors: Vec<PauliSpinor>) -> Result<Self> {
        let first = errors
            .first()
            .ok_or_else(|| Error::InvalidErrorSet("error set is empty".into()))?;
        if !first.is_identity_mod_phase() {
            return Err(Error::InvalidErrorSet(format!(
                "first error must be the identity, found {first}"
            )));
        }
        let width = first.width();
        let mut seen = std::collections::HashSet::new();
        for (i, e) in errors.iter().enumerate() {
            if e.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: e.width(),
                });
            }
            if !seen.insert(e.key()) {
                return Err(Error::InvalidErrorSet(format!(
                    "error {i} ({e}) repeats an earlier entry up to phase"
                )));
            }
        }
        Ok(ErrorSet { width, errors })
    }

    /// Identity followed by every single-qubit X, Y and Z error, qubit-major.
    pub fn single_qubit(width: usize) -> Self {
        let mut errors = vec![PauliSpinor::identity(width)];
        for j in 0..width {
            let bit = 1u32 << (width - 1 - j);
            for (x, z) in [(bit, 0), (bit, bit), (0, bit)] {
                errors.push(PauliSpinor::hermitian(width, x, z));
            }
        }
        ErrorSet { width, errors }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.errors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.errors.is_empty()
    }

    pub fn errors(&self) -> &[PauliSpinor] {
        &self.errors
    }

    pub fn get(&self, i: usize) -> &PauliSpinor {
        &self.errors[i]
    }
}
