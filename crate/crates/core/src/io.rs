//! File formats: code JSON and plain-text error lists.
//!
//! Code file:
//!
//! ```json
//! {"width": 3,
//!  "cartanion": {"width": 3, "generators": ["ZII", "IZI", "IIZ"]},
//!  "seed": [["+", "000"]],
//!  "codeword_spinors": ["III", "XXX"],
//!  "labels": ["000", "111"]}
//! ```
//!
//! Seed signs are `"+"`, `"-"`, `"+i"` or `"-i"`; the integers `1` and `-1`
//! are accepted on input. `seed_origin` and `seed_base` are optional.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bits::BitString;
use crate::cartanion::{normalize_signs, Cartanion};
use crate::code::{seed_state, QuantumCode, SeedOrigin, SeedState};
use crate::error::{Error, Result};
use crate::spinor::{ErrorSet, PauliSpinor, Phase};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeFile {
    pub width: usize,
    pub cartanion: Cartanion,
    pub seed: Vec<(Value, String)>,
    pub codeword_spinors: Vec<String>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_origin: Option<SeedOrigin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_base: Option<String>,
}

fn parse_sign(v: &Value) -> Result<Phase> {
    let bad = || Error::Parse {
        position: 0,
        message: format!("invalid seed sign {v}"),
    };
    match v {
        Value::String(s) => Phase::from_prefix(s)
            .filter(|_| !s.is_empty())
            .ok_or_else(bad),
        Value::Number(n) => match n.as_i64() {
            Some(1) => Ok(Phase::ONE),
            Some(-1) => Ok(Phase::MINUS_ONE),
            _ => Err(bad()),
        },
        _ => Err(bad()),
    }
}

impl CodeFile {
    pub fn from_code(code: &QuantumCode) -> Self {
        let seed = code.seed();
        let base = seed.base();
        CodeFile {
            width: code.width(),
            cartanion: code.cartanion().clone(),
            seed: seed
                .terms()
                .iter()
                .map(|(p, s)| (Value::String(p.prefix().into()), s.to_string()))
                .collect(),
            codeword_spinors: code
                .codeword_spinors()
                .iter()
                .map(|s| s.to_string())
                .collect(),
            labels: code.labels().iter().map(|l| l.to_string()).collect(),
            seed_origin: Some(seed.origin()),
            seed_base: (!base.is_zero()).then(|| base.to_string()),
        }
    }

    pub fn into_code(self) -> Result<QuantumCode> {
        let p = self.width;
        if self.cartanion.width() != p {
            return Err(Error::WidthMismatch {
                expected: p,
                found: self.cartanion.width(),
            });
        }
        let base = match &self.seed_base {
            Some(b) => BitString::parse(b, p)?,
            None => BitString::zeros(p),
        };
        let terms = self
            .seed
            .iter()
            .map(|(sign, s)| Ok((parse_sign(sign)?, BitString::parse(s, p)?)))
            .collect::<Result<Vec<_>>>()?;
        let explicit = SeedState::explicit(base, terms)?;
        // Without an explicit tag, a seed equal to the Cartanion's own is
        // treated as derived from it.
        let origin = match self.seed_origin {
            Some(o) => o,
            None => {
                let derived = seed_state(&normalize_signs(&self.cartanion, &base)?, &base)?;
                if derived.terms() == explicit.terms() {
                    SeedOrigin::CartanionDerived
                } else {
                    SeedOrigin::Explicit
                }
            }
        };
        let seed = match origin {
            SeedOrigin::CartanionDerived => {
                let derived = seed_state(&normalize_signs(&self.cartanion, &base)?, &base)?;
                if derived.terms() != explicit.terms() {
                    return Err(Error::InvalidSeed(
                        "seed is tagged cartanion-derived but differs from the Cartanion's seed"
                            .into(),
                    ));
                }
                derived
            }
            other => SeedState::with_origin(base, explicit.terms().to_vec(), other)?,
        };
        let spinors = self
            .codeword_spinors
            .iter()
            .map(|s| PauliSpinor::parse(s, p))
            .collect::<Result<Vec<_>>>()?;
        let code = QuantumCode::from_parts(self.cartanion, seed, spinors)?;
        if !self.labels.is_empty() {
            let given = self
                .labels
                .iter()
                .map(|l| BitString::parse(l, p))
                .collect::<Result<Vec<_>>>()?;
            if given != code.labels() {
                return Err(Error::InvalidCode(format!(
                    "stored labels {:?} disagree with the codeword spinors' syndromes {:?}",
                    self.labels,
                    code.labels()
                        .iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                )));
            }
        }
        Ok(code)
    }
}

pub fn code_to_json(code: &QuantumCode) -> String {
    serde_json::to_string_pretty(&CodeFile::from_code(code)).expect("code file serializes")
}

pub fn code_from_json(text: &str) -> Result<QuantumCode> {
    let file: CodeFile = serde_json::from_str(text).map_err(json_error)?;
    file.into_code()
}

pub fn cartanion_from_json(text: &str) -> Result<Cartanion> {
    serde_json::from_str(text).map_err(json_error)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        position: e.column(),
        message: format!("line {}: {e}", e.line()),
    }
}

/// Parses an error list: one Pauli string per line, the first being the
/// identity. Blank lines and lines starting with `#` are skipped.
pub fn parse_error_list(text: &str) -> Result<ErrorSet> {
    let mut errors = Vec::new();
    let mut width = None;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at_line = |e: Error| match e {
            Error::Parse { position, message } => Error::Parse {
                position,
                message: format!("line {}: {message}", n + 1),
            },
            other => other,
        };
        let s: PauliSpinor = line.parse().map_err(at_line)?;
        match width {
            None => width = Some(s.width()),
            Some(w) if w != s.width() => {
                return Err(Error::Parse {
                    position: 0,
                    message: format!("line {}: expected {w} qubits, found {}", n + 1, s.width()),
                })
            }
            _ => {}
        }
        errors.push(s);
    }
    ErrorSet::new(errors)
}

pub fn format_error_list(errs: &ErrorSet) -> String {
    errs.errors().iter().map(|e| format!("{e}\n")).collect()
}

/// Reads a file, prefixing any error with its path.
pub fn read_with<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T>,
) -> std::result::Result<T, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}
