//! Reference codes and error sets used by the examples, the self-test and the
//! test suites.

use crate::bits::BitString;
use crate::cartanion::{build_cartanion, Cartanion};
use crate::code::{build_code, punctured_seed, QuantumCode};
use crate::spinor::{ErrorSet, PauliSpinor};

fn spinors(texts: &[&str]) -> Vec<PauliSpinor> {
    texts
        .iter()
        .map(|t| t.parse().expect("fixture spinor parses"))
        .collect()
}

fn labels(texts: &[&str]) -> Vec<BitString> {
    texts
        .iter()
        .map(|t| t.parse().expect("fixture label parses"))
        .collect()
}

fn errors(texts: &[&str]) -> ErrorSet {
    ErrorSet::new(spinors(texts)).expect("fixture error set is valid")
}

/// Identity plus a bit flip on each of three qubits.
pub fn x_flips3() -> ErrorSet {
    errors(&["III", "XII", "IXI", "IIX"])
}

/// Identity plus a phase flip on each of three qubits.
pub fn z_flips3() -> ErrorSet {
    errors(&["III", "ZII", "IZI", "IIZ"])
}

/// `[[3,2]]` bit-flip repetition code: diagonal Cartanion, labels {000, 111}.
pub fn repetition3() -> QuantumCode {
    build_code(&Cartanion::diagonal(3), &labels(&["000", "111"])).expect("repetition code builds")
}

/// Stabilizers of the five-qubit code plus the logical operator ZZZZZ.
pub fn five_qubit_cartanion() -> Cartanion {
    build_cartanion(&spinors(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZZZZ"]))
        .expect("five-qubit generators form a Cartanion")
}

/// `[[5,2]]` code whose two codewords are the five-qubit code's logical states.
pub fn five_qubit() -> QuantumCode {
    build_code(&five_qubit_cartanion(), &labels(&["00000", "00001"]))
        .expect("five-qubit code builds")
}

pub fn cat_cartanion() -> Cartanion {
    build_cartanion(&spinors(&["XXX", "ZZI", "IZZ"])).expect("cat generators form a Cartanion")
}

/// Cat-state code with labels {000, 100}; cannot separate single phase flips.
pub fn cat3() -> QuantumCode {
    build_code(&cat_cartanion(), &labels(&["000", "100"])).expect("cat code builds")
}

/// Cartanion {XII, IXI, IIX}; its seed contains all eight strings.
pub fn x_cartanion3() -> Cartanion {
    build_cartanion(&spinors(&["XII", "IXI", "IIX"])).expect("X generators form a Cartanion")
}

/// Type I: the repetition code.
pub fn type_i() -> QuantumCode {
    repetition3()
}

/// Type II: diagonal five-qubit Cartanion with codeword spinors {I, XIIII, IXIII}.
pub fn type_ii() -> QuantumCode {
    build_code(
        &Cartanion::diagonal(5),
        &labels(&["00000", "10000", "01000"]),
    )
    .expect("type II fixture builds")
}

fn punctured_x3(code_labels: &[&str]) -> QuantumCode {
    let code = build_code(&x_cartanion3(), &labels(code_labels)).expect("fixture builds");
    let seed = punctured_seed(code.seed(), &labels(&["011", "101"])).expect("fixture punctures");
    code.with_seed(seed).expect("fixture reseeds")
}

/// Type III: codeword labels {000, 100} over a seed punctured by {011, 101}.
pub fn type_iii() -> QuantumCode {
    punctured_x3(&["000", "100"])
}

/// Type IV: codeword labels {000, 100, 010} over the same punctured seed.
pub fn type_iv() -> QuantumCode {
    punctured_x3(&["000", "100", "010"])
}

/// Codes paired with the error sets they are checked against.
pub fn golden_suite() -> Vec<(&'static str, QuantumCode, ErrorSet)> {
    vec![
        ("repetition3/x-flips", repetition3(), x_flips3()),
        ("repetition3/z-flips", repetition3(), z_flips3()),
        (
            "five-qubit/single-qubit",
            five_qubit(),
            ErrorSet::single_qubit(5),
        ),
        ("cat3/z-flips", cat3(), z_flips3()),
        ("cat3/x-flips", cat3(), x_flips3()),
        (
            "type-ii/single-x",
            type_ii(),
            errors(&["IIIII", "IIIXI", "IIIIX"]),
        ),
    ]
}
