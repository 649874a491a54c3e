//! Built-in consistency checks, run by the `selftest` command.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bits::BitString;
use crate::cartanion::random_cartanion;
use crate::classifier::{classify, CodeType};
use crate::code::QuantumCode;
use crate::golden;
use crate::oracle::{self, DenseState};
use crate::search::{search_code, Strategy};
use crate::spinor::{ErrorSet, PauliSpinor};
use crate::verifier::{check_correctable, Verdict};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Result<String, String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

type Check = std::result::Result<String, String>;

fn all_spinors(width: usize) -> Vec<PauliSpinor> {
    let n = 1u32 << width;
    let mut out = Vec::with_capacity((n * n * 4) as usize);
    for x in 0..n {
        for z in 0..n {
            for ph in 0..4 {
                out.push(PauliSpinor::from_parts(width, ph, x, z));
            }
        }
    }
    out
}

fn group_law(width: usize) -> Check {
    let all = all_spinors(width);
    let id = PauliSpinor::identity(width);
    let minus_id = id.negate();
    for a in &all {
        if a.mul_unchecked(&id) != *a || id.mul_unchecked(a) != *a {
            return Err(format!("identity is not neutral for {a}"));
        }
        let sq = a.mul_unchecked(a);
        if sq != id && sq != minus_id {
            return Err(format!("{a} squares to {sq}"));
        }
        for b in &all {
            let ab = a.mul_unchecked(b);
            for c in all.iter().step_by(3) {
                if ab.mul_unchecked(c) != a.mul_unchecked(&b.mul_unchecked(c)) {
                    return Err(format!("associativity fails on {a}, {b}, {c}"));
                }
            }
        }
    }
    Ok(format!("{} spinors", all.len()))
}

/// Applying `s2` then `s1` to every basis state equals applying `s1·s2`.
fn multiply_matches_action(width: usize) -> Check {
    let all = all_spinors(width);
    let basis: Vec<DenseState> = BitString::all(width)
        .map(|s| DenseState::basis(&s).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for a in &all {
        for b in &all {
            let ab = a.mul_unchecked(b);
            for v in &basis {
                let seq = oracle::apply_spinor(&oracle::apply_spinor(v, b).unwrap(), a).unwrap();
                let direct = oracle::apply_spinor(v, &ab).unwrap();
                if seq != direct {
                    return Err(format!("{a}·{b} = {ab} disagrees with sequential action"));
                }
            }
        }
    }
    Ok(format!("{} pairs", all.len() * all.len()))
}

fn partition_isomorphism(width: usize, seeds: std::ops::Range<u64>) -> Check {
    let n = 1u32 << width;
    for seed in seeds.clone() {
        let c = random_cartanion(width, seed).map_err(|e| e.to_string())?;
        let members: std::collections::HashSet<u64> = c.closure().iter().map(|s| s.key()).collect();
        let mut counts: HashMap<BitString, usize> = HashMap::new();
        let sample: Vec<PauliSpinor> = (0..n * n)
            .map(|v| PauliSpinor::hermitian(width, v >> width, v & (n - 1)))
            .collect();
        for s in &sample {
            let l = c.syndrome_unchecked(s);
            *counts.entry(l).or_default() += 1;
            if l.is_zero() != members.contains(&s.key()) {
                return Err(format!("seed {seed}: kernel mismatch at {s}"));
            }
        }
        for (i, s) in sample.iter().enumerate().step_by(7) {
            for t in sample.iter().skip(i % 5).step_by(11) {
                let lhs = c.syndrome_unchecked(&s.mul_unchecked(t));
                let rhs = c.syndrome_unchecked(s).xor(&c.syndrome_unchecked(t));
                if lhs != rhs {
                    return Err(format!("seed {seed}: additivity fails on {s}, {t}"));
                }
            }
        }
        if counts.len() != n as usize || counts.values().any(|&k| k != n as usize) {
            return Err(format!("seed {seed}: labels are not equidistributed"));
        }
    }
    Ok(format!("{} Cartanions", seeds.end - seeds.start))
}

fn seed_expectation_sweep(width: usize, count: u64) -> Check {
    for seed in 0..count {
        let c = random_cartanion(width, 1000 + seed).map_err(|e| e.to_string())?;
        let r = oracle::check_lemma3(&c).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(format!("seed {seed}: {r}"));
        }
    }
    Ok(format!("{count} Cartanions"))
}

fn golden_code_checks(max_width: usize) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for (name, code, errs) in golden::golden_suite() {
        if code.width() > max_width {
            continue;
        }
        let eig = oracle::check_eigenvectors(&code, &errs).map_err(|e| e.to_string());
        out.push((
            format!("eigenvectors {name}"),
            eig.and_then(|r| {
                if r.passed() {
                    Ok(r.to_string())
                } else {
                    Err(r.to_string())
                }
            }),
        ));
        let t3 = oracle::check_theorem3(&code, &errs).map_err(|e| e.to_string());
        out.push((
            format!("orthogonality iff distinct labels {name}"),
            t3.and_then(|r| {
                if r.passed() {
                    Ok(r.to_string())
                } else {
                    Err(r.to_string())
                }
            }),
        ));
    }
    out
}

fn expect(name: &str, code: &QuantumCode, errs: &ErrorSet, correctable: bool) -> (String, Check) {
    let check = match check_correctable(code, errs) {
        Ok(v) if v.is_correctable() == correctable => match oracle::check_kl(code, errs) {
            Ok(kl) if !correctable || kl.is_ok() => Ok(v.to_string()),
            Ok(kl) => Err(format!("Knill-Laflamme failed: {kl:?}")),
            Err(e) => Err(e.to_string()),
        },
        Ok(v) => Err(format!("unexpected verdict {v}")),
        Err(e) => Err(e.to_string()),
    };
    (format!("verdict {name}"), check)
}

fn golden_verdicts(max_width: usize) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    out.push(expect(
        "repetition3/x-flips",
        &golden::repetition3(),
        &golden::x_flips3(),
        true,
    ));
    out.push(expect(
        "cat3/z-flips",
        &golden::cat3(),
        &golden::z_flips3(),
        false,
    ));
    if max_width >= 5 {
        out.push(expect(
            "five-qubit/single-qubit",
            &golden::five_qubit(),
            &ErrorSet::single_qubit(5),
            true,
        ));
    }
    if !matches!(
        check_correctable(&golden::cat3(), &golden::z_flips3()),
        Ok(Verdict::Collision { .. })
    ) {
        out.push((
            "cat collision kind".into(),
            Err("expected a label collision".into()),
        ));
    }
    out
}

fn classification(max_width: usize) -> Check {
    let mut fixtures = vec![
        (golden::type_i(), CodeType::I),
        (golden::type_iii(), CodeType::III),
        (golden::type_iv(), CodeType::IV),
    ];
    if max_width >= 5 {
        fixtures.push((golden::type_ii(), CodeType::II));
    }
    for (code, expected) in &fixtures {
        let class = classify(code);
        if class.type_tag != *expected || class.additive != (*expected == CodeType::I) {
            return Err(format!("expected type {expected}, got {}", class.type_tag));
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn exhaustive_search() -> Check {
    let errs = golden::x_flips3();
    let out = search_code(&errs, 2, Strategy::Exhaustive, 1).map_err(|e| e.to_string())?;
    let v = check_correctable(&out.code, &errs).map_err(|e| e.to_string())?;
    if !v.is_correctable() {
        return Err(format!("returned code is not correctable: {v}"));
    }
    let r = oracle::check_theorem3(&out.code, &errs).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(r.to_string());
    }
    Ok(format!("hit at candidate {}", out.candidate_index))
}

/// Runs every check that fits within `max_width` qubits.
pub fn run(max_width: usize) -> Vec<CheckResult> {
    let mut checks: Vec<(String, Check)> = Vec::new();
    for w in 1..=max_width.min(2) {
        checks.push((format!("group law p={w}"), group_law(w)));
        checks.push((
            format!("multiplication matches action p={w}"),
            multiply_matches_action(w),
        ));
    }
    for w in 2..=max_width.min(5) {
        checks.push((
            format!("partition isomorphism p={w}"),
            partition_isomorphism(w, 0..25),
        ));
    }
    for w in 2..=max_width.min(4) {
        checks.push((
            format!("stabilizer expectation sweep p={w}"),
            seed_expectation_sweep(w, 20),
        ));
    }
    if max_width >= 3 {
        checks.extend(golden_code_checks(max_width));
        checks.extend(golden_verdicts(max_width));
        checks.push(("classification fixtures".into(), classification(max_width)));
        checks.push(("exhaustive search p=3".into(), exhaustive_search()));
    }
    checks
        .into_iter()
        .map(|(name, outcome)| CheckResult { name, outcome })
        .collect()
}

/// TAP rendering of a check list.
pub fn tap(results: &[CheckResult]) -> String {
    let mut out = format!("1..{}\n", results.len());
    for (n, r) in results.iter().enumerate() {
        match &r.outcome {
            Ok(detail) => writeln!(out, "ok {} - {} # {}", n + 1, r.name, detail),
            Err(detail) => writeln!(out, "not ok {} - {} # {}", n + 1, r.name, detail),
        }
        .expect("writing to a string");
    }
    out
}
