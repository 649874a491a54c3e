// Searching Cartanions for codes: exhaustively at three qubits, randomly at five.

use cartan_qec::golden;
use cartan_qec::io::code_to_json;
use cartan_qec::{check_correctable, max_k, search_code, ErrorSet, Result, Strategy};

pub fn run_example() -> Result<()> {
    let flips = golden::x_flips3();
    let hit = search_code(&flips, 2, Strategy::Exhaustive, 1)?;
    println!(
        "exhaustive: candidate {}, greedy K {}",
        hit.candidate_index, hit.max_k
    );
    println!("{}", code_to_json(&hit.code));

    let errs = ErrorSet::single_qubit(5);
    let hit = search_code(
        &errs,
        2,
        Strategy::Random {
            budget: 100_000,
            seed: 7,
        },
        2,
    )?;
    let gens: Vec<String> = hit
        .code
        .cartanion()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect();
    println!(
        "random: candidate {}, generators {}",
        hit.candidate_index,
        gens.join(" ")
    );
    println!("verdict: {}", check_correctable(&hit.code, &errs)?);

    let greedy = max_k(hit.code.cartanion(), &errs)?;
    println!(
        "greedy labels: {:?}",
        greedy
            .labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
