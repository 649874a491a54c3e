// A code that fails: the cat-state code cannot tell phase flips apart, and
// the oracle shows the colliding states overlap.

use cartan_qec::golden;
use cartan_qec::oracle::{inner_product, syndrome_state};
use cartan_qec::{check_correctable, Result, Verdict};

pub fn run_example() -> Result<()> {
    let code = golden::cat3();
    let errs = golden::z_flips3();
    let verdict = check_correctable(&code, &errs)?;
    println!("verdict: {verdict}");

    if let Verdict::Collision { first, second } = verdict {
        let u = syndrome_state(&code, &errs, first.0, first.1)?;
        let v = syndrome_state(&code, &errs, second.0, second.1)?;
        let ip = inner_product(&u, &v)?;
        println!(
            "<{} psi_{} | {} psi_{}> = {} (norms {} and {})",
            errs.get(first.0),
            first.1,
            errs.get(second.0),
            second.1,
            ip.value,
            ip.norm2_left,
            ip.norm2_right
        );
        assert!(!ip.is_zero());
    } else {
        unreachable!("the cat code collides");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
