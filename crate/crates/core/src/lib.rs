//! Quantum code construction from the coset partition a Cartanion (a maximal
//! abelian subgroup of the Pauli group) induces, with an exact state-vector
//! oracle for independent verification.
//!
//! The pipeline:
//!
//! 1. [`cartanion`]: validate or generate p commuting, independent generators;
//!    the syndrome map labels each Pauli spinor's coset by an element of F2^p.
//! 2. [`code`]: build the seed state `Σ_S S|0…0⟩` and pick one codeword spinor
//!    per chosen coset.
//! 3. [`verifier`]: a code corrects an error set when all products
//!    `E_i · Ŝ_j` fall in distinct cosets.
//! 4. [`oracle`]: dense Gaussian-integer state vectors re-check orthogonality
//!    and eigenvector claims without using the algebra above.
//! 5. [`classifier`] and [`search`]: four-way additive/nonadditive
//!    classification and constructive search over Cartanions.
//!
//! ```
//! use cartan_qec::{build_code, check_correctable, Cartanion, ErrorSet};
//!
//! let code = build_code(&Cartanion::diagonal(3), &["000".parse()?, "111".parse()?])?;
//! let errs = ErrorSet::new(vec!["III".parse()?, "XII".parse()?, "IXI".parse()?, "IIX".parse()?])?;
//! assert!(check_correctable(&code, &errs)?.is_correctable());
//! # Ok::<(), cartan_qec::Error>(())
//! ```

pub mod bits;
pub mod cartanion;
pub mod classifier;
pub mod code;
pub mod error;
pub mod golden;
pub mod io;
pub mod oracle;
pub mod search;
pub mod selftest;
pub mod spinor;
pub mod verifier;

pub use bits::BitString;
pub use cartanion::{
    build_cartanion, closure, coset_members, enumerate_cartanions, normalize_signs,
    random_cartanion, syndrome, Cartanion, CosetLabel,
};
pub use classifier::{
    classify, is_group_spinors, is_subgroup_strings, linearity_note, CodeClass, CodeType, Linearity,
};
pub use code::{
    build_code, coset_representative, punctured_seed, seed_state, QuantumCode,
    RepresentativePolicy, SeedOrigin, SeedState,
};
pub use error::{Error, Result};
pub use oracle::DenseState;
pub use search::{max_k, search_code, sumset_distinct, MaxK, SearchOutcome, Strategy};
pub use spinor::{
    commutes, format_spinor, multiply, parse_spinor, rank_mod_phase, weight, ErrorSet, PauliSpinor,
    Phase,
};
pub use verifier::{check_correctable, diagnose, syndrome_table, SyndromeTable, Verdict};
