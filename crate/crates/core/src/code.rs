//! Seed states, codeword spinors and the `[[p, K]]` code object.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{is_xor_subgroup, BitString};
use crate::cartanion::{coset_members, Cartanion, CosetLabel};
use crate::error::{Error, Result};
use crate::spinor::{PauliSpinor, Phase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedOrigin {
    CartanionDerived,
    Punctured,
    Explicit,
}

impl fmt::Display for SeedOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedOrigin::CartanionDerived => "cartanion-derived",
            SeedOrigin::Punctured => "punctured",
            SeedOrigin::Explicit => "explicit",
        })
    }
}

/// A seed state stored as an unnormalized sum of computational basis strings
/// with unit phases. Every term has the same magnitude.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedState {
    width: usize,
    base: BitString,
    terms: Vec<(Phase, BitString)>,
    origin: SeedOrigin,
}

impl SeedState {
    /// A seed given term by term. Strings must be distinct and of equal width.
    pub fn explicit(base: BitString, terms: Vec<(Phase, BitString)>) -> Result<Self> {
        Self::with_origin(base, terms, SeedOrigin::Explicit)
    }

    pub(crate) fn with_origin(
        base: BitString,
        mut terms: Vec<(Phase, BitString)>,
        origin: SeedOrigin,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidSeed("a seed needs at least one term".into()));
        }
        let width = base.width();
        let mut seen = HashSet::new();
        for (_, s) in &terms {
            if s.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: s.width(),
                });
            }
            if !seen.insert(*s) {
                return Err(Error::InvalidSeed(format!("string {s} appears twice")));
            }
        }
        terms.sort_by_key(|(_, s)| *s);
        Ok(SeedState {
            width,
            base,
            terms,
            origin,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn base(&self) -> BitString {
        self.base
    }

    pub fn terms(&self) -> &[(Phase, BitString)] {
        &self.terms
    }

    pub fn origin(&self) -> SeedOrigin {
        self.origin
    }

    pub fn strings(&self) -> Vec<BitString> {
        self.terms.iter().map(|(_, s)| *s).collect()
    }

    /// The string set translated by the base string (C_sb).
    pub fn support(&self) -> Vec<BitString> {
        self.terms.iter().map(|(_, s)| s.xor(&self.base)).collect()
    }

    pub fn support_is_subgroup(&self) -> bool {
        is_xor_subgroup(&self.support())
    }
}

/// Evaluates `Σ_{S ∈ closure(c)} S|base⟩` symbolically.
///
/// Every diagonal element of the Cartanion must fix `|base⟩`; otherwise the
/// sum vanishes and the call is refused. Apply [`normalize_signs`] first.
///
/// [`normalize_signs`]: crate::cartanion::normalize_signs
pub fn seed_state(c: &Cartanion, base: &BitString) -> Result<SeedState> {
    if base.width() != c.width() {
        return Err(Error::WidthMismatch {
            expected: c.width(),
            found: base.width(),
        });
    }
    // coefficient per string as (re, im)
    let mut coeffs: BTreeMap<BitString, (i64, i64)> = BTreeMap::new();
    let mut diagonal = 0i64;
    for s in c.closure() {
        let mut phase = s.phase();
        if s.z_part().dot(base) {
            phase = phase * Phase::MINUS_ONE;
        }
        if s.is_diagonal() {
            if phase != Phase::ONE {
                return Err(Error::NotNormalized {
                    base: base.to_string(),
                    element: s.to_string(),
                });
            }
            diagonal += 1;
        }
        let entry = coeffs.entry(base.xor(&s.x_part())).or_insert((0, 0));
        match phase.exp() {
            0 => entry.0 += 1,
            1 => entry.1 += 1,
            2 => entry.0 -= 1,
            _ => entry.1 -= 1,
        }
    }
    let mut terms = Vec::new();
    for (string, (re, im)) in coeffs {
        let phase = match (re, im) {
            (0, 0) => continue,
            (r, 0) if r == diagonal => Phase::ONE,
            (r, 0) if r == -diagonal => Phase::MINUS_ONE,
            (0, i) if i == diagonal => Phase::I,
            (0, i) if i == -diagonal => Phase::MINUS_I,
            other => {
                return Err(Error::Internal(format!(
                    "seed coefficient {other:?} on {string} is not a unit multiple of {diagonal}"
                )))
            }
        };
        terms.push((phase, string));
    }
    SeedState::with_origin(*base, terms, SeedOrigin::CartanionDerived)
}

/// Representative selection policy for codeword spinors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepresentativePolicy {
    /// Minimum weight, ties broken by the lexicographic order of the text form.
    #[default]
    MinWeightLex,
}

pub fn coset_representative(
    c: &Cartanion,
    label: &CosetLabel,
    policy: RepresentativePolicy,
) -> Result<PauliSpinor> {
    match policy {
        RepresentativePolicy::MinWeightLex => {
            if label.is_zero() {
                return Ok(PauliSpinor::identity(c.width()));
            }
            let members = coset_members(c, label)?;
            members
                .into_iter()
                .map(|s| (s.weight(), s.to_string(), s))
                .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
                .map(|(_, _, s)| s)
                .ok_or_else(|| Error::Internal("empty coset".into()))
        }
    }
}

/// A `[[p, K]]` code: seed state plus K codeword spinors from distinct cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCode {
    cartanion: Cartanion,
    seed: SeedState,
    codeword_spinors: Vec<PauliSpinor>,
    labels: Vec<CosetLabel>,
}

impl QuantumCode {
    /// Assembles a code from explicit parts, recomputing the coset labels.
    pub fn from_parts(
        cartanion: Cartanion,
        seed: SeedState,
        codeword_spinors: Vec<PauliSpinor>,
    ) -> Result<Self> {
        let p = cartanion.width();
        if seed.width() != p {
            return Err(Error::WidthMismatch {
                expected: p,
                found: seed.width(),
            });
        }
        let first = codeword_spinors.first().ok_or_else(|| {
            Error::InvalidCode("a code needs at least one codeword spinor".into())
        })?;
        if !first.is_identity() {
            return Err(Error::InvalidCode(format!(
                "the first codeword spinor must be the identity, found {first}"
            )));
        }
        let labels = codeword_spinors
            .iter()
            .map(|s| cartanion.syndrome(s))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = HashSet::new();
        for (j, l) in labels.iter().enumerate() {
            if !seen.insert(*l) {
                return Err(Error::InvalidCode(format!(
                    "codeword spinor {j} repeats coset label {l}"
                )));
            }
        }
        Ok(QuantumCode {
            cartanion,
            seed,
            codeword_spinors,
            labels,
        })
    }

    pub fn width(&self) -> usize {
        self.cartanion.width()
    }

    /// Code dimension K.
    pub fn dimension(&self) -> usize {
        self.codeword_spinors.len()
    }

    pub fn cartanion(&self) -> &Cartanion {
        &self.cartanion
    }

    pub fn seed(&self) -> &SeedState {
        &self.seed
    }

    pub fn codeword_spinors(&self) -> &[PauliSpinor] {
        &self.codeword_spinors
    }

    pub fn labels(&self) -> &[CosetLabel] {
        &self.labels
    }

    /// The same code with a different seed (e.g. a punctured one).
    pub fn with_seed(&self, seed: SeedState) -> Result<Self> {
        Self::from_parts(self.cartanion.clone(), seed, self.codeword_spinors.clone())
    }
}

/// Builds a code from coset labels: the seed comes from the sign-normalized
/// Cartanion on `|0…0⟩`, codeword spinors are min-weight coset representatives.
///
/// Labels are interpreted against `c` exactly as given.
pub fn build_code(c: &Cartanion, labels: &[CosetLabel]) -> Result<QuantumCode> {
    let p = c.width();
    let first = labels
        .first()
        .ok_or_else(|| Error::InvalidCode("at least one label is required".into()))?;
    if !first.is_zero() {
        return Err(Error::InvalidCode(format!(
            "the first label must be the zero label, found {first}"
        )));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if l.width() != p {
            return Err(Error::WidthMismatch {
                expected: p,
                found: l.width(),
            });
        }
        if !seen.insert(*l) {
            return Err(Error::InvalidCode(format!("duplicate label {l}")));
        }
    }
    let zeros = BitString::zeros(p);
    let normalized = crate::cartanion::normalize_signs(c, &zeros)?;
    let seed = seed_state(&normalized, &zeros)?;
    let spinors = labels
        .iter()
        .map(|l| coset_representative(c, l, RepresentativePolicy::MinWeightLex))
        .collect::<Result<Vec<_>>>()?;
    QuantumCode::from_parts(c.clone(), seed, spinors)
}

/// Drops the given strings from a seed. At least two strings must be removed
/// and at least one term must survive.
pub fn punctured_seed(seed: &SeedState, removed: &[BitString]) -> Result<SeedState> {
    let removed: HashSet<BitString> = removed.iter().copied().collect();
    if removed.len() < 2 {
        return Err(Error::InvalidSeed(format!(
            "puncturing must remove more than one string, {} given",
            removed.len()
        )));
    }
    let present: HashSet<BitString> = seed.strings().into_iter().collect();
    let mut missing: Vec<&BitString> = removed.iter().filter(|s| !present.contains(s)).collect();
    if !missing.is_empty() {
        missing.sort();
        return Err(Error::InvalidSeed(format!(
            "string {} is not part of the seed",
            missing[0]
        )));
    }
    let terms: Vec<(Phase, BitString)> = seed
        .terms()
        .iter()
        .filter(|(_, s)| !removed.contains(s))
        .copied()
        .collect();
    if terms.is_empty() {
        return Err(Error::InvalidSeed(
            "puncturing would remove every term".into(),
        ));
    }
    SeedState::with_origin(seed.base(), terms, SeedOrigin::Punctured)
}
