// Exact state-vector checks: seed expectations and eigenvector relations.

use cartan_qec::golden;
use cartan_qec::oracle::{self, eigencheck, materialize, Eigen};
use cartan_qec::{random_cartanion, Result};

pub fn run_example() -> Result<()> {
    for seed in 0..3 {
        let c = random_cartanion(4, seed)?;
        let report = oracle::check_lemma3(&c)?;
        let gens: Vec<String> = c.generators().iter().map(|g| g.to_string()).collect();
        println!("{}: {report}", gens.join(" "));
    }

    let code = golden::repetition3();
    let seed = materialize(code.seed())?;
    println!(
        "seed amplitudes: {:?}",
        seed.amplitudes()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
    );
    for s in code.cartanion().closure() {
        let e = eigencheck(&seed, &s)?;
        println!("{s}: {e:?}");
        assert_ne!(e, Eigen::NotEigen);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
