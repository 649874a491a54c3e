//! Cartanions: maximal abelian subgroups of the p-qubit Pauli group given by
//! p commuting, independent, Hermitian generators.
//!
//! The coset partition a Cartanion induces on the Pauli group is never stored
//! explicitly. The syndrome map `s ↦ (commutation bit of s with generator t)_t`
//! is a group homomorphism onto F2^p whose kernel is the Cartanion, so the
//! label of a spinor identifies its coset.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{self, check_width, gf2_solve, BitString, Gf2Basis};
use crate::error::{Error, Result};
use crate::spinor::{PauliSpinor, Phase};

/// Coset label in F2^p; bit `t` is the commutation bit against generator `t`.
pub type CosetLabel = BitString;

/// Largest width accepted by [`enumerate_cartanions`].
pub const MAX_ENUMERATION_WIDTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CartanionFile", into = "CartanionFile")]
pub struct Cartanion {
    width: usize,
    generators: Vec<PauliSpinor>,
}

/// JSON form `{"width": p, "generators": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanionFile {
    pub width: usize,
    pub generators: Vec<String>,
}

impl TryFrom<CartanionFile> for Cartanion {
    type Error = Error;

    fn try_from(file: CartanionFile) -> Result<Self> {
        check_width(file.width)?;
        let gens = file
            .generators
            .iter()
            .map(|g| PauliSpinor::parse(g, file.width))
            .collect::<Result<Vec<_>>>()?;
        build_cartanion(&gens)
    }
}

impl From<Cartanion> for CartanionFile {
    fn from(c: Cartanion) -> Self {
        CartanionFile {
            width: c.width,
            generators: c.generators.iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// Validates `gens` as the generating set of a Cartanion.
pub fn build_cartanion(gens: &[PauliSpinor]) -> Result<Cartanion> {
    let width = gens.first().map(|g| g.width()).unwrap_or(0);
    check_width(width.max(1))?;
    if gens.len() != width {
        return Err(Error::GeneratorCount {
            expected: width,
            found: gens.len(),
        });
    }
    for g in gens {
        if g.width() != width {
            return Err(Error::WidthMismatch {
                expected: width,
                found: g.width(),
            });
        }
    }
    for (i, g) in gens.iter().enumerate() {
        if !g.is_hermitian() {
            return Err(Error::NonHermitian(i));
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if gens[i].anticommutes_unchecked(&gens[j]) {
                return Err(Error::AnticommutingPair(i, j));
            }
        }
    }
    let mut basis = Gf2Basis::new();
    for (i, g) in gens.iter().enumerate() {
        if let Err(mask) = basis.insert(g.key(), i) {
            let subset = (0..gens.len()).filter(|t| (mask >> t) & 1 == 1).collect();
            return Err(Error::DependentGenerators { subset });
        }
    }
    Ok(Cartanion {
        width,
        generators: gens.to_vec(),
    })
}

impl Cartanion {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn generators(&self) -> &[PauliSpinor] {
        &self.generators
    }

    /// The diagonal Cartanion `{Z_1, …, Z_p}`.
    pub fn diagonal(width: usize) -> Self {
        let generators = (0..width)
            .map(|j| PauliSpinor::hermitian(width, 0, 1 << (width - 1 - j)))
            .collect();
        Cartanion { width, generators }
    }

    /// Product of the generators selected by `exponents`, ascending order.
    pub fn element(&self, exponents: &CosetLabel) -> PauliSpinor {
        let mut acc = PauliSpinor::identity(self.width);
        for (t, g) in self.generators.iter().enumerate() {
            if exponents.get(t) {
                acc = acc.mul_unchecked(g);
            }
        }
        acc
    }

    /// All `2^p` elements, indexed by exponent vector in lexicographic order.
    pub fn closure(&self) -> Vec<PauliSpinor> {
        closure(self)
    }

    pub fn syndrome(&self, s: &PauliSpinor) -> Result<CosetLabel> {
        syndrome(self, s)
    }

    pub(crate) fn syndrome_unchecked(&self, s: &PauliSpinor) -> CosetLabel {
        let mut bits = 0u32;
        for g in &self.generators {
            bits = (bits << 1) | s.anticommutes_unchecked(g) as u32;
        }
        BitString::new(self.width, bits)
    }

    /// True when `s` lies in the Cartanion up to phase.
    pub fn contains_mod_phase(&self, s: &PauliSpinor) -> bool {
        s.width() == self.width && self.syndrome_unchecked(s).is_zero()
    }

    /// Some spinor whose syndrome is `label`.
    pub fn representative(&self, label: &CosetLabel) -> Result<PauliSpinor> {
        if label.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: label.width(),
            });
        }
        // Unknown v = (x << 32 | z); the symplectic form against generator
        // g_t is the parity of v & (z_t << 32 | x_t).
        let rows: Vec<u64> = self
            .generators
            .iter()
            .map(|g| ((g.z_bits() as u64) << 32) | g.x_bits() as u64)
            .collect();
        let mut rhs = 0u64;
        for t in 0..self.width {
            if label.get(t) {
                rhs |= 1 << t;
            }
        }
        let v = gf2_solve(&rows, rhs)
            .ok_or_else(|| Error::Internal("syndrome map is not surjective".into()))?;
        Ok(PauliSpinor::hermitian(
            self.width,
            (v >> 32) as u32,
            v as u32,
        ))
    }
}

pub fn closure(c: &Cartanion) -> Vec<PauliSpinor> {
    BitString::all(c.width).map(|lam| c.element(&lam)).collect()
}

pub fn syndrome(c: &Cartanion, s: &PauliSpinor) -> Result<CosetLabel> {
    if s.width() != c.width {
        return Err(Error::WidthMismatch {
            expected: c.width,
            found: s.width(),
        });
    }
    Ok(c.syndrome_unchecked(s))
}

/// The `2^p` spinors (Hermitian form, mod phase) with syndrome `label`.
pub fn coset_members(c: &Cartanion, label: &CosetLabel) -> Result<Vec<PauliSpinor>> {
    let r = c.representative(label)?;
    Ok(closure(c)
        .iter()
        .map(|s| r.mul_unchecked(s).canonical())
        .collect())
}

/// Re-chooses the generating set so that the diagonal subgroup is generated by
/// a subset of generators, each signed to fix `|base⟩` with eigenvalue +1.
///
/// A generator whose x-part is a combination of earlier generators' x-parts is
/// replaced by its product with those generators, which makes it diagonal.
/// Generators with independent x-parts are kept verbatim.
pub fn normalize_signs(c: &Cartanion, base: &BitString) -> Result<Cartanion> {
    if base.width() != c.width {
        return Err(Error::WidthMismatch {
            expected: c.width,
            found: base.width(),
        });
    }
    let mut basis = Gf2Basis::new();
    let mut out = Vec::with_capacity(c.width);
    for (i, g) in c.generators.iter().enumerate() {
        match basis.insert(g.x_bits() as u64, i) {
            Ok(()) => out.push(*g),
            Err(mask) => {
                let mut d = *g;
                for (t, h) in c.generators.iter().enumerate().take(i) {
                    if (mask >> t) & 1 == 1 {
                        d = d.mul_unchecked(h);
                    }
                }
                debug_assert!(d.is_diagonal());
                // eigenvalue on |base⟩ is i^phase (-1)^(z·base)
                let flip = bits::parity(d.z_bits() & base.bits()) == 1;
                let sign = if flip { Phase::MINUS_ONE } else { Phase::ONE };
                out.push(d.with_phase(sign));
            }
        }
    }
    Ok(Cartanion {
        width: c.width,
        generators: out,
    })
}

/// Greedily draws random Hermitian spinors until `width` commuting,
/// independent generators are held. Deterministic in `seed`.
pub fn random_cartanion(width: usize, seed: u64) -> Result<Cartanion> {
    check_width(width)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_cartanion_with(width, &mut rng))
}

pub(crate) fn random_cartanion_with<R: Rng>(width: usize, rng: &mut R) -> Cartanion {
    let m = bits::mask(width);
    let mut gens: Vec<PauliSpinor> = Vec::with_capacity(width);
    let mut basis = Gf2Basis::new();
    while gens.len() < width {
        let x = rng.gen::<u32>() & m;
        let z = rng.gen::<u32>() & m;
        let negative = rng.gen::<bool>();
        if x == 0 && z == 0 {
            continue;
        }
        let mut s = PauliSpinor::hermitian(width, x, z);
        if negative {
            s = s.negate();
        }
        if gens.iter().any(|g| g.anticommutes_unchecked(&s)) {
            continue;
        }
        if basis.insert(s.key(), gens.len()).is_ok() {
            gens.push(s);
        }
    }
    Cartanion {
        width,
        generators: gens,
    }
}

/// Every Cartanion of the given width, once per distinct subgroup mod phase,
/// ordered by the sorted list of its elements' `(x, z)` keys.
///
/// Each emitted Cartanion uses positive Hermitian generators chosen greedily
/// from the sorted element list.
pub fn enumerate_cartanions(width: usize) -> Result<impl Iterator<Item = Cartanion>> {
    check_width(width)?;
    if width > MAX_ENUMERATION_WIDTH {
        return Err(Error::Unsupported(format!(
            "exhaustive Cartanion enumeration is limited to width <= {MAX_ENUMERATION_WIDTH} \
             (the count grows super-exponentially); width {width} requested"
        )));
    }
    let n = 1u32 << width;
    let all: Vec<PauliSpinor> = (1..n * n)
        .map(|v| PauliSpinor::hermitian(width, v >> width, v & (n - 1)))
        .collect();

    let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut stack: Vec<PauliSpinor> = Vec::new();
    collect_subgroups(width, &all, 0, &mut stack, &mut found);

    let out: BTreeMap<Vec<u64>, Cartanion> = found
        .into_iter()
        .map(|keys| {
            let mut basis = Gf2Basis::new();
            let mut gens = Vec::with_capacity(width);
            for &k in &keys {
                if basis.insert(k, gens.len()).is_ok() {
                    gens.push(PauliSpinor::hermitian(width, (k >> 32) as u32, k as u32));
                }
            }
            let c = Cartanion {
                width,
                generators: gens,
            };
            (keys, c)
        })
        .collect();
    Ok(out.into_values())
}

fn collect_subgroups(
    width: usize,
    all: &[PauliSpinor],
    start: usize,
    stack: &mut Vec<PauliSpinor>,
    found: &mut BTreeSet<Vec<u64>>,
) {
    if stack.len() == width {
        let c = Cartanion {
            width,
            generators: stack.clone(),
        };
        let mut keys: Vec<u64> = closure(&c).iter().map(|s| s.key()).collect();
        keys.sort_unstable();
        found.insert(keys);
        return;
    }
    for (i, s) in all.iter().enumerate().skip(start) {
        if stack.iter().any(|g| g.anticommutes_unchecked(s)) {
            continue;
        }
        stack.push(*s);
        if bits::gf2_rank(stack.iter().map(|g| g.key())) == stack.len() {
            collect_subgroups(width, all, i + 1, stack, found);
        }
        stack.pop();
    }
}
