//! Syndrome tables, the distinct-label correctability criterion and syndrome
//! diagnosis. Everything here is algebraic; nothing touches state vectors.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::cartanion::CosetLabel;
use crate::code::{QuantumCode, SeedOrigin};
use crate::error::{Error, Result};
use crate::search::sumset_distinct;
use crate::spinor::ErrorSet;

/// Coset labels of every syndrome spinor `E_i · Ŝ_j`, row-major in `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    errors: usize,
    codewords: usize,
    entries: Vec<CosetLabel>,
    inverse: Option<HashMap<CosetLabel, (usize, usize)>>,
}

impl SyndromeTable {
    pub fn rows(&self) -> usize {
        self.errors
    }

    pub fn columns(&self) -> usize {
        self.codewords
    }

    pub fn entry(&self, i: usize, j: usize) -> CosetLabel {
        self.entries[i * self.codewords + j]
    }

    /// Labels in row-major order.
    pub fn entries(&self) -> &[CosetLabel] {
        &self.entries
    }

    pub fn is_injective(&self) -> bool {
        self.inverse.is_some()
    }

    /// `(error index, codeword index)` for an observed label.
    pub fn lookup(&self, observed: &CosetLabel) -> Result<(usize, usize)> {
        let inverse = self.inverse.as_ref().ok_or(Error::NotCorrectable)?;
        inverse
            .get(observed)
            .copied()
            .ok_or_else(|| Error::UnknownSyndrome(observed.to_string()))
    }
}

/// Builds the table, computing each entry both directly from the product
/// spinor and from additivity of the syndrome map; the two must agree.
pub fn syndrome_table(code: &QuantumCode, errs: &ErrorSet) -> Result<SyndromeTable> {
    let c = code.cartanion();
    if errs.width() != code.width() {
        return Err(Error::WidthMismatch {
            expected: code.width(),
            found: errs.width(),
        });
    }
    let k = code.dimension();
    let mut entries = Vec::with_capacity(errs.len() * k);
    for (i, e) in errs.errors().iter().enumerate() {
        let error_label = c.syndrome(e)?;
        for (j, (s, label)) in code
            .codeword_spinors()
            .iter()
            .zip(code.labels())
            .enumerate()
        {
            let direct = c.syndrome(&e.multiply(s)?)?;
            let additive = error_label.xor(label);
            if direct != additive {
                return Err(Error::Internal(format!(
                    "syndrome additivity fails at ({i}, {j}): {direct} vs {additive}"
                )));
            }
            entries.push(direct);
        }
    }
    let mut inverse = HashMap::with_capacity(entries.len());
    let mut injective = true;
    for (n, l) in entries.iter().enumerate() {
        if inverse.insert(*l, (n / k, n % k)).is_some() {
            injective = false;
            break;
        }
    }
    Ok(SyndromeTable {
        errors: errs.len(),
        codewords: k,
        entries,
        inverse: injective.then_some(inverse),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Correctable,
    /// Two syndrome spinors share a coset; `first` precedes `second`.
    Collision {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// `N·K > 2^p`, so labels cannot all be distinct.
    Pigeonhole {
        errors: usize,
        codewords: usize,
        width: usize,
    },
}

impl Verdict {
    pub fn is_correctable(&self) -> bool {
        matches!(self, Verdict::Correctable)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Correctable => f.write_str("correctable"),
            Verdict::Collision { first, second } => write!(
                f,
                "collision({},{},{},{})",
                first.0, first.1, second.0, second.1
            ),
            Verdict::Pigeonhole {
                errors,
                codewords,
                width,
            } => write!(
                f,
                "collision by pigeonhole: {errors} errors x {codewords} codewords > 2^{width} labels"
            ),
        }
    }
}

/// Decides correctability by label distinctness.
///
/// Collisions are reported in a fixed order: first a pair of errors sharing a
/// coset (reported with codeword 0), then the first repeated label scanning
/// the table row-major.
pub fn check_correctable(code: &QuantumCode, errs: &ErrorSet) -> Result<Verdict> {
    let p = code.width();
    let (n, k) = (errs.len(), code.dimension());
    if (n as u64) * (k as u64) > 1u64 << p {
        return Ok(Verdict::Pigeonhole {
            errors: n,
            codewords: k,
            width: p,
        });
    }
    let table = syndrome_table(code, errs)?;

    let mut error_seen: HashMap<CosetLabel, usize> = HashMap::new();
    for i in 0..n {
        if let Some(&prev) = error_seen.get(&table.entry(i, 0)) {
            return Ok(Verdict::Collision {
                first: (prev, 0),
                second: (i, 0),
            });
        }
        error_seen.insert(table.entry(i, 0), i);
    }

    let mut seen: HashMap<CosetLabel, (usize, usize)> = HashMap::new();
    let mut verdict = Verdict::Correctable;
    'scan: for i in 0..n {
        for j in 0..k {
            let l = table.entry(i, j);
            if let Some(&prev) = seen.get(&l) {
                verdict = Verdict::Collision {
                    first: prev,
                    second: (i, j),
                };
                break 'scan;
            }
            seen.insert(l, (i, j));
        }
    }

    let error_labels: Vec<CosetLabel> = (0..n).map(|i| table.entry(i, 0)).collect();
    if sumset_distinct(&error_labels, code.labels()) != verdict.is_correctable() {
        return Err(Error::Internal(
            "table scan and sumset criterion disagree".into(),
        ));
    }
    Ok(verdict)
}

/// Whether an algebraic verdict is backed by the stabilizer-seed argument or
/// still needs state-vector confirmation.
pub fn verdict_scope(code: &QuantumCode) -> &'static str {
    match code.seed().origin() {
        SeedOrigin::CartanionDerived => "algebraic",
        SeedOrigin::Punctured | SeedOrigin::Explicit => {
            "algebraic-only, oracle confirmation required"
        }
    }
}

/// Looks up the `(error, codeword)` pair that produced `observed`. The error
/// spinor is its own inverse up to sign, so it is also the correction.
pub fn diagnose(
    code: &QuantumCode,
    errs: &ErrorSet,
    observed: &CosetLabel,
) -> Result<(usize, usize)> {
    if observed.width() != code.width() {
        return Err(Error::WidthMismatch {
            expected: code.width(),
            found: observed.width(),
        });
    }
    syndrome_table(code, errs)?.lookup(observed)
}
