//! Four-way classification of constructed codes by whether the codeword
//! spinors and the seed's string set form groups.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bits::{is_xor_subgroup, BitString};
use crate::code::QuantumCode;
use crate::spinor::PauliSpinor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CodeType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::I => "I",
            CodeType::II => "II",
            CodeType::III => "III",
            CodeType::IV => "IV",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Linearity {
    Linear,
    Nonlinear,
}

impl fmt::Display for Linearity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Linearity::Linear => "linear",
            Linearity::Nonlinear => "nonlinear",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeClass {
    pub type_tag: CodeType,
    /// Codeword spinors closed under multiplication modulo the Cartanion
    /// (their labels form a subgroup of F2^p). Drives the type.
    pub bcw_is_group: bool,
    /// Codeword spinors closed under multiplication modulo phase only.
    pub bcw_is_group_strict: bool,
    pub csb_is_group: bool,
    pub additive: bool,
    pub linearity: Linearity,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = |b: bool| if b { "g." } else { "n.g." };
        writeln!(f, "type\t{}", self.type_tag)?;
        writeln!(f, "bcw_mod_cartanion\t{}", g(self.bcw_is_group))?;
        writeln!(f, "bcw_mod_phase\t{}", g(self.bcw_is_group_strict))?;
        writeln!(f, "csb\t{}", g(self.csb_is_group))?;
        writeln!(
            f,
            "additivity\t{}",
            if self.additive {
                "additive"
            } else {
                "nonadditive"
            }
        )?;
        write!(f, "linearity\t{}", self.linearity)
    }
}

/// True iff the set contains the zero string and is closed under XOR.
pub fn is_subgroup_strings(strings: &[BitString]) -> bool {
    is_xor_subgroup(strings)
}

/// True iff the spinors contain the identity and are closed under
/// multiplication modulo phase.
pub fn is_group_spinors(spinors: &[PauliSpinor]) -> bool {
    let keys: HashSet<u64> = spinors.iter().map(|s| s.key()).collect();
    if !keys.contains(&0) {
        return false;
    }
    spinors.iter().all(|a| {
        spinors
            .iter()
            .all(|b| keys.contains(&a.mul_unchecked(b).key()))
    })
}

pub fn linearity_note(code: &QuantumCode) -> Linearity {
    if is_xor_subgroup(code.labels()) {
        Linearity::Linear
    } else {
        Linearity::Nonlinear
    }
}

pub fn classify(code: &QuantumCode) -> CodeClass {
    let bcw_is_group = is_xor_subgroup(code.labels());
    let bcw_is_group_strict = is_group_spinors(code.codeword_spinors());
    let csb_is_group = code.seed().support_is_subgroup();
    let type_tag = match (bcw_is_group, csb_is_group) {
        (true, true) => CodeType::I,
        (false, true) => CodeType::II,
        (true, false) => CodeType::III,
        (false, false) => CodeType::IV,
    };
    CodeClass {
        type_tag,
        bcw_is_group,
        bcw_is_group_strict,
        csb_is_group,
        additive: type_tag == CodeType::I,
        linearity: linearity_note(code),
    }
}
