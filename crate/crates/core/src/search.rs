//! Constructive code search: find a Cartanion whose coset labels separate a
//! given error set and admit K codeword cosets with a collision-free sumset.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bits::BitString;
use crate::cartanion::{enumerate_cartanions, random_cartanion_with, Cartanion, CosetLabel};
use crate::code::{build_code, QuantumCode};
use crate::error::{Error, Result};
use crate::spinor::ErrorSet;

/// True iff every `e_i ⊕ c_j` is distinct over all `(i, j)`.
pub fn sumset_distinct(error_labels: &[CosetLabel], codeword_labels: &[CosetLabel]) -> bool {
    let mut seen = HashSet::with_capacity(error_labels.len() * codeword_labels.len());
    error_labels
        .iter()
        .all(|e| codeword_labels.iter().all(|c| seen.insert(e.xor(c))))
}

/// Result of the greedy label scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxK {
    pub labels: Vec<CosetLabel>,
    /// First pair of error indices sharing a coset, when the error set is
    /// degenerate under this Cartanion. The scan then runs over the distinct
    /// error labels.
    pub degeneracy: Option<(usize, usize)>,
}

impl MaxK {
    pub fn k(&self) -> usize {
        self.labels.len()
    }
}

/// Greedy scan of F2^p in lexicographic order from zero, keeping each label
/// that preserves a collision-free sumset. Not guaranteed to be optimal.
pub fn max_k(c: &Cartanion, errs: &ErrorSet) -> Result<MaxK> {
    let labels = errs
        .errors()
        .iter()
        .map(|e| c.syndrome(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(max_k_from_labels(c.width(), &labels))
}

fn first_duplicate(labels: &[CosetLabel]) -> Option<(usize, usize)> {
    for j in 0..labels.len() {
        for i in 0..j {
            if labels[i] == labels[j] {
                return Some((i, j));
            }
        }
    }
    None
}

fn max_k_from_labels(width: usize, error_labels: &[CosetLabel]) -> MaxK {
    let degeneracy = first_duplicate(error_labels);
    let mut distinct: Vec<CosetLabel> = Vec::new();
    for l in error_labels {
        if !distinct.contains(l) {
            distinct.push(*l);
        }
    }
    // Blocked differences: λ can join iff λ ⊕ c_j ∉ D for every kept c_j,
    // where D = {e ⊕ e'} is the difference set of the error labels.
    let size = 1usize << width;
    let mut diff = vec![false; size];
    for a in &distinct {
        for b in &distinct {
            diff[(a.bits() ^ b.bits()) as usize] = true;
        }
    }
    let mut kept: Vec<CosetLabel> = Vec::new();
    for lam in BitString::all(width) {
        if kept.iter().all(|c| !diff[(lam.bits() ^ c.bits()) as usize]) {
            kept.push(lam);
        }
    }
    MaxK {
        labels: kept,
        degeneracy,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every Cartanion in enumeration order (width ≤ 3).
    Exhaustive,
    /// `budget` random Cartanions; candidate `n` is drawn from ChaCha8 stream
    /// `n` under `seed`, so results do not depend on the worker count.
    Random { budget: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub code: QuantumCode,
    /// Zero-based position of the hit in the candidate stream.
    pub candidate_index: u64,
    /// Greedy K reached by the winning Cartanion (≥ the target).
    pub max_k: usize,
}

fn evaluate(c: &Cartanion, errs: &ErrorSet, k_target: usize) -> Option<Vec<CosetLabel>> {
    let labels: Vec<CosetLabel> = errs
        .errors()
        .iter()
        .map(|e| c.syndrome_unchecked(e))
        .collect();
    if first_duplicate(&labels).is_some() {
        return None;
    }
    let found = max_k_from_labels(c.width(), &labels);
    (found.k() >= k_target).then_some(found.labels)
}

/// Random candidate `index` under `seed`.
pub fn random_candidate(width: usize, seed: u64, index: u64) -> Cartanion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    random_cartanion_with(width, &mut rng)
}

/// Searches for a `[[p, K]]` code correcting `errs`. With `workers > 1`
/// candidates are evaluated in parallel; the returned hit is always the one
/// with the smallest candidate index.
pub fn search_code(
    errs: &ErrorSet,
    k_target: usize,
    strategy: Strategy,
    workers: usize,
) -> Result<SearchOutcome> {
    let p = errs.width();
    if k_target == 0 {
        return Err(Error::InvalidCode(
            "target dimension must be at least 1".into(),
        ));
    }
    // N·K > 2^p: no Cartanion can work
    let impossible = (errs.len() as u128) * (k_target as u128) > 1u128 << p;

    let finish = |c: &Cartanion, labels: Vec<CosetLabel>, index: u64| -> Result<SearchOutcome> {
        let max_k = labels.len();
        let code = build_code(c, &labels[..k_target])?;
        Ok(SearchOutcome {
            code,
            candidate_index: index,
            max_k,
        })
    };

    match strategy {
        Strategy::Exhaustive => {
            let mut examined = 0u64;
            if impossible {
                return Err(Error::NotFound { examined });
            }
            for (n, c) in enumerate_cartanions(p)?.enumerate() {
                examined += 1;
                if let Some(labels) = evaluate(&c, errs, k_target) {
                    return finish(&c, labels, n as u64);
                }
            }
            Err(Error::NotFound { examined })
        }
        Strategy::Random { budget, seed } => {
            if impossible {
                return Err(Error::NotFound { examined: 0 });
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            const CHUNK: u64 = 4096;
            let mut start = 0u64;
            while start < budget {
                let end = (start + CHUNK).min(budget);
                let hit = pool.install(|| {
                    (start..end).into_par_iter().find_map_first(|n| {
                        let c = random_candidate(p, seed, n);
                        evaluate(&c, errs, k_target).map(|labels| (n, c, labels))
                    })
                });
                if let Some((n, c, labels)) = hit {
                    return finish(&c, labels, n);
                }
                start = end;
            }
            Err(Error::NotFound { examined: budget })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::PauliSpinor;
    use crate::verifier::check_correctable;

    fn bs(v: &[&str]) -> Vec<CosetLabel> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn errs(v: &[&str]) -> ErrorSet {
        ErrorSet::new(
            v.iter()
                .map(|s| s.parse::<PauliSpinor>().unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn sumset_examples() {
        assert!(sumset_distinct(
            &bs(&["000", "100", "010", "001"]),
            &bs(&["000", "111"])
        ));
        assert!(!sumset_distinct(&bs(&["000", "100"]), &bs(&["000", "100"])));
        assert!(sumset_distinct(&bs(&["00", "01", "11"]), &bs(&["00"])));
        assert!(!sumset_distinct(&bs(&["00", "01", "01"]), &bs(&["00"])));
    }

    #[test]
    fn max_k_examples() {
        let diag = Cartanion::diagonal(3);
        let m = max_k(&diag, &errs(&["III", "XII", "IXI", "IIX"])).unwrap();
        assert_eq!(m.labels, bs(&["000", "111"]));
        assert_eq!(m.degeneracy, None);

        let m = max_k(&diag, &errs(&["III"])).unwrap();
        assert_eq!(m.k(), 8);

        let m = max_k(&diag, &errs(&["III", "ZII", "XII"])).unwrap();
        assert_eq!(m.degeneracy, Some((0, 1)));
        assert_eq!(m.labels, bs(&["000", "001", "010", "011"]));
    }

    #[test]
    fn exhaustive_search_finds_bit_flip_code() {
        let e = errs(&["III", "XII", "IXI", "IIX"]);
        let out = search_code(&e, 2, Strategy::Exhaustive, 1).unwrap();
        assert_eq!(out.code.dimension(), 2);
        assert!(check_correctable(&out.code, &e).unwrap().is_correctable());
    }

    #[test]
    fn impossible_by_counting() {
        let e = errs(&["I", "X", "Y", "Z"]);
        assert!(matches!(
            search_code(&e, 2, Strategy::Exhaustive, 1),
            Err(Error::NotFound { .. })
        ));
        assert!(matches!(
            search_code(
                &e,
                2,
                Strategy::Random {
                    budget: 10,
                    seed: 1
                },
                2
            ),
            Err(Error::NotFound { .. })
        ));
    }

    #[test]
    fn random_search_is_worker_independent() {
        let e = errs(&["IIII", "XIII", "IXII", "IIXI", "IIIX"]);
        let s = Strategy::Random {
            budget: 20_000,
            seed: 3,
        };
        let a = search_code(&e, 2, s, 1).unwrap();
        let b = search_code(&e, 2, s, 4).unwrap();
        assert_eq!(a.candidate_index, b.candidate_index);
        assert_eq!(a.code, b.code);
    }
}
