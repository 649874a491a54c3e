//! Acceptance criteria, one PASS/FAIL line each with elapsed time against
//! its limit. Runs without the libtest harness so the lines always print.

mod common;

use std::collections::{HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cartan_qec::classifier::classify;
use cartan_qec::golden;
use cartan_qec::oracle::{self, inner_product, syndrome_state};
use cartan_qec::{
    check_correctable, commutes, multiply, random_cartanion, search_code, syndrome_table,
    BitString, CodeType, ErrorSet, QuantumCode, Strategy, Verdict,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group_law() -> Outcome {
    let mut pairs = 0;
    for p in 1..=2 {
        let all = common::all_spinors(p);
        let mats: Vec<_> = all.iter().map(common::matrix).collect();
        for (a, ma) in all.iter().zip(&mats) {
            for (b, mb) in all.iter().zip(&mats) {
                let ab = multiply(a, b).map_err(|e| e.to_string())?;
                let mab = common::matmul(ma, mb);
                ensure(common::matrix(&ab) == mab, || {
                    format!("{a}·{b} = {ab} disagrees with matrices")
                })?;
                let mba = common::matmul(mb, ma);
                let anti = mab == common::neg(&mba) && mab != mba;
                let c = commutes(a, b).map_err(|e| e.to_string())?;
                ensure((c == 1) == anti, || format!("commutes({a},{b}) = {c}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn partition_isomorphism() -> Outcome {
    let mut count = 0;
    for p in 2..=5usize {
        for seed in 0..25 {
            let c = random_cartanion(p, seed).map_err(|e| e.to_string())?;
            let members = common::closure_letters(c.generators());
            let all = common::all_mod_phase(p);
            let labels: Vec<BitString> = all
                .iter()
                .map(|s| c.syndrome(s).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let mut tally: HashMap<BitString, usize> = HashMap::new();
            for (s, l) in all.iter().zip(&labels) {
                for (t, g) in c.generators().iter().enumerate() {
                    ensure(l.get(t) == common::anticommute_text(s, g), || {
                        format!("p={p} seed={seed}: label bit {t} of {s}")
                    })?;
                }
                ensure(l.is_zero() == members.contains(&common::letters(s)), || {
                    format!("p={p} seed={seed}: kernel disagrees at {s}")
                })?;
                *tally.entry(*l).or_default() += 1;
            }
            ensure(
                tally.len() == 1 << p && tally.values().all(|&n| n == 1 << p),
                || format!("p={p} seed={seed}: preimage counts {tally:?}"),
            )?;
            for (a, la) in all.iter().zip(&labels) {
                for (b, lb) in all.iter().zip(&labels).step_by(if p == 5 { 3 } else { 1 }) {
                    let lab = c.syndrome(&multiply(a, b).unwrap()).unwrap();
                    ensure(lab == la.xor(lb), || {
                        format!("p={p} seed={seed}: additivity on {a}, {b}")
                    })?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} Cartanions"))
}

fn seed_expectations() -> Outcome {
    let mut cases = 0;
    for p in 2..=4 {
        for seed in 0..20 {
            let c = random_cartanion(p, 5000 + seed).map_err(|e| e.to_string())?;
            let r = oracle::check_lemma3(&c).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("p={p} seed={seed}: {r}"))?;
            cases += r.checked;
        }
    }
    Ok(format!("{cases} expectation values"))
}

fn eigenvectors() -> Outcome {
    let mut cases = 0;
    for (name, code, errs) in golden::golden_suite() {
        let r = oracle::check_eigenvectors(&code, &errs).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: {r}"))?;
        cases += r.checked;
    }
    Ok(format!("{cases} eigen-relations"))
}

/// Compares exact orthogonality with label distinctness for every pair of
/// syndrome states.
fn orthogonality_vs_labels(code: &QuantumCode, errs: &ErrorSet) -> Result<(usize, usize), String> {
    let table = syndrome_table(code, errs).map_err(|e| e.to_string())?;
    let mut cells = Vec::new();
    for i in 0..errs.len() {
        for j in 0..code.dimension() {
            cells.push((
                (i, j),
                syndrome_state(code, errs, i, j).map_err(|e| e.to_string())?,
            ));
        }
    }
    let (mut orthogonal, mut overlapping) = (0, 0);
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            let ((i1, j1), u) = &cells[a];
            let ((i2, j2), v) = &cells[b];
            let zero = inner_product(u, v).map_err(|e| e.to_string())?.is_zero();
            let distinct = table.entry(*i1, *j1) != table.entry(*i2, *j2);
            ensure(zero == distinct, || {
                format!("({i1},{j1}) vs ({i2},{j2}): orthogonal={zero} distinct labels={distinct}")
            })?;
            if zero {
                orthogonal += 1;
            } else {
                overlapping += 1;
            }
        }
    }
    Ok((orthogonal, overlapping))
}

fn orthogonality() -> Outcome {
    let (mut orth, mut over) = (0, 0);
    for (name, code, errs) in golden::golden_suite() {
        if code.width() > 5 {
            continue;
        }
        let (o, v) = orthogonality_vs_labels(&code, &errs).map_err(|e| format!("{name}: {e}"))?;
        orth += o;
        over += v;
    }
    ensure(orth > 0 && over > 0, || {
        "both directions must be exercised".into()
    })?;
    Ok(format!("{orth} orthogonal pairs, {over} overlapping pairs"))
}

fn distinct_labels(code: &QuantumCode, errs: &ErrorSet) -> Result<usize, String> {
    let table = syndrome_table(code, errs).map_err(|e| e.to_string())?;
    Ok(table.entries().iter().collect::<HashSet<_>>().len())
}

fn kl_passes(code: &QuantumCode, errs: &ErrorSet) -> Result<(), String> {
    match oracle::check_kl(code, errs).map_err(|e| e.to_string())? {
        Ok(()) => Ok(()),
        Err(w) => Err(format!("Knill-Laflamme fails at {w:?}")),
    }
}

fn repetition_positive() -> Outcome {
    let (code, errs) = (golden::repetition3(), golden::x_flips3());
    let v = check_correctable(&code, &errs).map_err(|e| e.to_string())?;
    ensure(v.is_correctable(), || format!("verdict {v}"))?;
    let n = distinct_labels(&code, &errs)?;
    ensure(n == 8, || format!("{n} distinct labels"))?;
    kl_passes(&code, &errs)?;
    let class = classify(&code);
    ensure(class.type_tag == CodeType::I && class.additive, || {
        format!("classified {}", class.type_tag)
    })?;
    Ok("correctable, 8 labels, type I additive".into())
}

fn five_qubit_positive() -> Outcome {
    let (code, errs) = (golden::five_qubit(), ErrorSet::single_qubit(5));
    ensure(errs.len() == 16, || "expected 16 errors".into())?;
    let v = check_correctable(&code, &errs).map_err(|e| e.to_string())?;
    ensure(v.is_correctable(), || format!("verdict {v}"))?;
    let n = distinct_labels(&code, &errs)?;
    ensure(n == 32, || format!("{n} distinct labels"))?;
    let (orth, over) = orthogonality_vs_labels(&code, &errs)?;
    ensure(over == 0 && orth == 32 * 31 / 2, || {
        format!("{orth} orthogonal, {over} overlapping")
    })?;
    kl_passes(&code, &errs)?;
    let class = classify(&code);
    ensure(class.type_tag == CodeType::I, || {
        format!("classified {}", class.type_tag)
    })?;
    Ok("correctable, 32 labels, 496 orthogonal pairs, type I".into())
}

fn cat_negative() -> Outcome {
    let (code, errs) = (golden::cat3(), golden::z_flips3());
    let v = check_correctable(&code, &errs).map_err(|e| e.to_string())?;
    let Verdict::Collision { first, second } = v else {
        return Err(format!("expected a collision, got {v}"));
    };
    let u = syndrome_state(&code, &errs, first.0, first.1).map_err(|e| e.to_string())?;
    let w = syndrome_state(&code, &errs, second.0, second.1).map_err(|e| e.to_string())?;
    let ip = inner_product(&u, &w).map_err(|e| e.to_string())?;
    ensure(!ip.is_zero(), || {
        format!("{v}: oracle finds the states orthogonal")
    })?;
    Ok(format!("{v}, overlap {}", ip.value))
}

fn reverify(code: &QuantumCode, errs: &ErrorSet) -> Result<(), String> {
    let v = check_correctable(code, errs).map_err(|e| e.to_string())?;
    ensure(v.is_correctable(), || {
        format!("returned code has verdict {v}")
    })?;
    let r = oracle::check_theorem3(code, errs).map_err(|e| e.to_string())?;
    ensure(r.passed(), || r.to_string())
}

fn search() -> Outcome {
    let errs = golden::x_flips3();
    let ex = search_code(&errs, 2, Strategy::Exhaustive, 1).map_err(|e| e.to_string())?;
    reverify(&ex.code, &errs)?;
    let errs5 = ErrorSet::single_qubit(5);
    let rnd = search_code(
        &errs5,
        2,
        Strategy::Random {
            budget: 100_000,
            seed: 7,
        },
        1,
    )
    .map_err(|e| e.to_string())?;
    reverify(&rnd.code, &errs5)?;
    Ok(format!(
        "exhaustive hit at {}, random hit at {}",
        ex.candidate_index, rnd.candidate_index
    ))
}

fn classification() -> Outcome {
    let fixtures = [
        (golden::type_i(), CodeType::I),
        (golden::type_ii(), CodeType::II),
        (golden::type_iii(), CodeType::III),
        (golden::type_iv(), CodeType::IV),
    ];
    for (code, expected) in &fixtures {
        let class = classify(code);
        ensure(class.type_tag == *expected, || {
            format!("expected {expected}, got {}", class.type_tag)
        })?;
        ensure(class.additive == (*expected == CodeType::I), || {
            format!("type {expected} has additive={}", class.additive)
        })?;
    }
    Ok("I, II, III, IV".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("group law vs dense matrices", 5, group_law),
        ("partition isomorphism", 30, partition_isomorphism),
        ("seed expectation biconditional", 60, seed_expectations),
        ("eigenvector checks on golden codes", 30, eigenvectors),
        ("orthogonality iff distinct labels", 60, orthogonality),
        ("repetition [[3,2]] positive", 5, repetition_positive),
        ("five-qubit [[5,2]] positive", 30, five_qubit_positive),
        ("cat-state negative", 5, cat_negative),
        ("exhaustive and random search", 300, search),
        ("four-type classification", 5, classification),
    ];
    let mut failed = 0;
    for (n, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {:>2}: {name} ({:.2}s / {limit}s) {detail}",
            n + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
