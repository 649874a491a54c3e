//! Exact dense state-vector oracle.
//!
//! States are unnormalized vectors of Gaussian integers together with their
//! squared norm. Spinors act through the basis map
//! `|α⟩ ↦ i^d (-1)^(b·α) |α ⊕ a⟩`; nothing here uses the multiplication rule or
//! the syndrome map, so the checks are independent of the algebraic modules.
//! All comparisons are exact equalities.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::bits::{parity, BitString};
use crate::cartanion::Cartanion;
use crate::code::{QuantumCode, SeedOrigin};
use crate::error::{Error, Result};
use crate::spinor::{ErrorSet, PauliSpinor};

pub type GaussInt = Complex<BigInt>;

/// Widest state the oracle materializes.
pub const MAX_ORACLE_WIDTH: usize = 14;
/// Widest Cartanion swept by [`check_lemma3`] (4^p spinors).
pub const MAX_SWEEP_WIDTH: usize = 10;
/// Widest code handled by the pairwise checks.
pub const MAX_PAIRWISE_WIDTH: usize = 12;

fn check_oracle_width(width: usize, max: usize) -> Result<()> {
    if width > max {
        return Err(Error::Unsupported(format!(
            "oracle width cap exceeded: {width} qubits > {max}"
        )));
    }
    Ok(())
}

fn i_pow(exp: u32) -> GaussInt {
    match exp % 4 {
        0 => Complex::new(BigInt::one(), BigInt::zero()),
        1 => Complex::new(BigInt::zero(), BigInt::one()),
        2 => Complex::new(-BigInt::one(), BigInt::zero()),
        _ => Complex::new(BigInt::zero(), -BigInt::one()),
    }
}

fn norm_sqr(z: &GaussInt) -> BigInt {
    &z.re * &z.re + &z.im * &z.im
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseState {
    width: usize,
    amplitudes: Vec<GaussInt>,
    norm2: BigInt,
}

impl DenseState {
    pub fn from_amplitudes(width: usize, amplitudes: Vec<GaussInt>) -> Result<Self> {
        check_oracle_width(width, MAX_ORACLE_WIDTH)?;
        if amplitudes.len() != 1 << width {
            return Err(Error::WidthMismatch {
                expected: 1 << width,
                found: amplitudes.len(),
            });
        }
        let norm2 = amplitudes.iter().map(norm_sqr).sum();
        Ok(DenseState {
            width,
            amplitudes,
            norm2,
        })
    }

    /// `|s⟩` for a computational basis string.
    pub fn basis(s: &BitString) -> Result<Self> {
        let mut amps = vec![GaussInt::zero(); 1 << s.width()];
        amps[s.bits() as usize] = GaussInt::one();
        Self::from_amplitudes(s.width(), amps)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[GaussInt] {
        &self.amplitudes
    }

    pub fn amplitude(&self, s: &BitString) -> &GaussInt {
        &self.amplitudes[s.bits() as usize]
    }

    pub fn norm2(&self) -> &BigInt {
        &self.norm2
    }

    pub fn is_zero(&self) -> bool {
        self.norm2.is_zero()
    }

    pub fn negated(&self) -> DenseState {
        DenseState {
            width: self.width,
            amplitudes: self.amplitudes.iter().map(|a| -a.clone()).collect(),
            norm2: self.norm2.clone(),
        }
    }
}

/// Dense vector of a seed: amplitude of each present string is its phase.
pub fn materialize(seed: &crate::code::SeedState) -> Result<DenseState> {
    check_oracle_width(seed.width(), MAX_ORACLE_WIDTH)?;
    let mut amps = vec![GaussInt::zero(); 1 << seed.width()];
    for (phase, s) in seed.terms() {
        amps[s.bits() as usize] = i_pow(phase.exp() as u32);
    }
    DenseState::from_amplitudes(seed.width(), amps)
}

pub fn apply_spinor(v: &DenseState, s: &PauliSpinor) -> Result<DenseState> {
    if s.width() != v.width {
        return Err(Error::WidthMismatch {
            expected: v.width,
            found: s.width(),
        });
    }
    let (a, b) = (s.x_bits(), s.z_bits());
    let mut out = vec![GaussInt::zero(); v.amplitudes.len()];
    for (alpha, amp) in v.amplitudes.iter().enumerate() {
        if amp.is_zero() {
            continue;
        }
        let alpha = alpha as u32;
        let exp = s.phase_exp() as u32 + 2 * parity(b & alpha);
        out[(alpha ^ a) as usize] = amp * i_pow(exp);
    }
    Ok(DenseState {
        width: v.width,
        amplitudes: out,
        norm2: v.norm2.clone(),
    })
}

/// Unnormalized inner product `⟨u|v⟩` with both squared norms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProduct {
    pub value: GaussInt,
    pub norm2_left: BigInt,
    pub norm2_right: BigInt,
}

impl InnerProduct {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

pub fn inner_product(u: &DenseState, v: &DenseState) -> Result<InnerProduct> {
    if u.width != v.width {
        return Err(Error::WidthMismatch {
            expected: u.width,
            found: v.width,
        });
    }
    let mut acc = GaussInt::zero();
    for (x, y) in u.amplitudes.iter().zip(&v.amplitudes) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc += x.conj() * y;
    }
    Ok(InnerProduct {
        value: acc,
        norm2_left: u.norm2.clone(),
        norm2_right: v.norm2.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigen {
    Plus,
    Minus,
    NotEigen,
}

pub fn eigencheck(v: &DenseState, s: &PauliSpinor) -> Result<Eigen> {
    let w = apply_spinor(v, s)?;
    if w.amplitudes == v.amplitudes {
        Ok(Eigen::Plus)
    } else if w
        .amplitudes
        .iter()
        .zip(&v.amplitudes)
        .all(|(a, b)| *a == -b.clone())
    {
        Ok(Eigen::Minus)
    } else {
        Ok(Eigen::NotEigen)
    }
}

/// `Ŝ_r |φ0⟩`.
pub fn basis_codeword(code: &QuantumCode, r: usize) -> Result<DenseState> {
    let seed = materialize(code.seed())?;
    apply_spinor(&seed, &code.codeword_spinors()[r])
}

/// `E_i Ŝ_j |φ0⟩`, applied one operator at a time.
pub fn syndrome_state(
    code: &QuantumCode,
    errs: &ErrorSet,
    i: usize,
    j: usize,
) -> Result<DenseState> {
    apply_spinor(&basis_codeword(code, j)?, errs.get(i))
}

/// Outcome of an oracle sweep: how many cases were examined and which failed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, msg: String) {
        // keep reports bounded
        if self.violations.len() < 32 {
            self.violations.push(msg);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{} cases, no violations", self.checked)
        } else {
            write!(
                f,
                "{} cases, {} violations; first: {}",
                self.checked,
                self.violations.len(),
                self.violations[0]
            )
        }
    }
}

/// Sweeps every spinor mod phase: `⟨φ0|S|φ0⟩ = 0` exactly when `S` lies
/// outside the Cartanion, and `⟨φ0|S|φ0⟩ = ±norm2` when it lies inside.
///
/// Membership is decided by listing the closure, not through the syndrome map.
pub fn check_lemma3(c: &Cartanion) -> Result<Report> {
    let p = c.width();
    check_oracle_width(p, MAX_SWEEP_WIDTH)?;
    let zeros = BitString::zeros(p);
    let normalized = crate::cartanion::normalize_signs(c, &zeros)?;
    let seed = materialize(&crate::code::seed_state(&normalized, &zeros)?)?;
    let members: std::collections::HashSet<u64> = c.closure().iter().map(|s| s.key()).collect();
    let mut report = Report::default();
    let n = 1u32 << p;
    for x in 0..n {
        for z in 0..n {
            let s = PauliSpinor::hermitian(p, x, z);
            let ip = inner_product(&seed, &apply_spinor(&seed, &s)?)?;
            let inside = members.contains(&s.key());
            report.checked += 1;
            if inside {
                let plus = ip.value == Complex::new(seed.norm2.clone(), BigInt::zero());
                let minus = ip.value == Complex::new(-seed.norm2.clone(), BigInt::zero());
                if !(plus || minus) {
                    report.fail(format!(
                        "{s} is in the Cartanion but <phi0|S|phi0> = {}",
                        ip.value
                    ));
                }
            } else if !ip.is_zero() {
                report.fail(format!(
                    "{s} is outside the Cartanion but <phi0|S|phi0> = {}",
                    ip.value
                ));
            }
        }
    }
    Ok(report)
}

/// Every basis codeword and every syndrome state is a ±1 eigenvector of every
/// closure element.
pub fn check_eigenvectors(code: &QuantumCode, errs: &ErrorSet) -> Result<Report> {
    check_oracle_width(code.width(), MAX_PAIRWISE_WIDTH)?;
    let closure = code.cartanion().closure();
    let mut report = Report::default();
    for j in 0..code.dimension() {
        for i in 0..errs.len() {
            let state = syndrome_state(code, errs, i, j)?;
            for s in &closure {
                report.checked += 1;
                if eigencheck(&state, s)? == Eigen::NotEigen {
                    report.fail(format!(
                        "state (error {i}, codeword {j}) is not an eigenvector of {s}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Pairwise: syndrome states are orthogonal exactly when their coset labels
/// differ. Only meaningful for Cartanion-derived seeds.
pub fn check_theorem3(code: &QuantumCode, errs: &ErrorSet) -> Result<Report> {
    check_oracle_width(code.width(), MAX_PAIRWISE_WIDTH)?;
    if code.seed().origin() != SeedOrigin::CartanionDerived {
        return Err(Error::Unsupported(format!(
            "orthogonality equivalence is only asserted for cartanion-derived seeds, this seed is {}",
            code.seed().origin()
        )));
    }
    orthogonality_sweep(code, errs)
}

/// Same sweep as [`check_theorem3`] for any seed; outcomes are informational.
pub fn report_theorem3(code: &QuantumCode, errs: &ErrorSet) -> Result<Report> {
    check_oracle_width(code.width(), MAX_PAIRWISE_WIDTH)?;
    orthogonality_sweep(code, errs)
}

fn orthogonality_sweep(code: &QuantumCode, errs: &ErrorSet) -> Result<Report> {
    let c = code.cartanion();
    let mut states = Vec::with_capacity(errs.len() * code.dimension());
    for i in 0..errs.len() {
        for j in 0..code.dimension() {
            // label from the commutation pattern of E_i and Ŝ_j separately
            let label = c.syndrome(errs.get(i))?.xor(&code.labels()[j]);
            states.push(((i, j), label, syndrome_state(code, errs, i, j)?));
        }
    }
    let mut report = Report::default();
    for (n, (a, la, sa)) in states.iter().enumerate() {
        for (b, lb, sb) in &states[n + 1..] {
            report.checked += 1;
            let orthogonal = inner_product(sa, sb)?.is_zero();
            if orthogonal == (la == lb) {
                report.fail(format!(
                    "states {a:?} (label {la}) and {b:?} (label {lb}): orthogonal = {orthogonal}"
                ));
            }
        }
    }
    Ok(report)
}

/// Witness for a failed Knill–Laflamme check: error indices `(a, b)` and
/// codeword indices `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KlWitness {
    pub errors: (usize, usize),
    pub codewords: (usize, usize),
}

/// Knill–Laflamme conditions over the materialized codeword basis:
/// `⟨E_a ψ_i | E_b ψ_j⟩ = c_ab δ_ij` with `c_ab` independent of the codeword.
/// The normalized diagonal values are compared by cross-multiplying norms.
///
/// This is a cross-check; correctability itself is decided by labels.
pub fn check_kl(code: &QuantumCode, errs: &ErrorSet) -> Result<std::result::Result<(), KlWitness>> {
    check_oracle_width(code.width(), MAX_PAIRWISE_WIDTH)?;
    let k = code.dimension();
    let words = (0..k)
        .map(|r| basis_codeword(code, r))
        .collect::<Result<Vec<_>>>()?;
    let corrupted: Vec<Vec<DenseState>> = errs
        .errors()
        .iter()
        .map(|e| {
            words
                .iter()
                .map(|w| apply_spinor(w, e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for a in 0..errs.len() {
        for b in 0..errs.len() {
            let mut reference: Option<(GaussInt, BigInt)> = None;
            for i in 0..k {
                for j in 0..k {
                    let ip = inner_product(&corrupted[a][i], &corrupted[b][j])?;
                    let witness = KlWitness {
                        errors: (a, b),
                        codewords: (i, j),
                    };
                    if i != j {
                        if !ip.is_zero() {
                            return Ok(Err(witness));
                        }
                        continue;
                    }
                    // value / norm2 must be the same for every i
                    let norm = words[i].norm2().clone();
                    match &reference {
                        None => reference = Some((ip.value, norm)),
                        Some((v0, n0)) => {
                            let lhs = &ip.value * Complex::new(n0.clone(), BigInt::zero());
                            let rhs = v0 * Complex::new(norm, BigInt::zero());
                            if lhs != rhs {
                                return Ok(Err(witness));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}
