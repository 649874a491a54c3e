// The [[5,2]] code built from the five-qubit stabilizers plus ZZZZZ,
// checked against every single-qubit error and confirmed by the oracle.

use cartan_qec::golden;
use cartan_qec::oracle;
use cartan_qec::{check_correctable, ErrorSet, Result};

pub fn run_example() -> Result<()> {
    let code = golden::five_qubit();
    let errs = ErrorSet::single_qubit(5);

    let verdict = check_correctable(&code, &errs)?;
    println!(
        "{} errors x {} codewords: {verdict}",
        errs.len(),
        code.dimension()
    );

    let report = oracle::check_theorem3(&code, &errs)?;
    println!("orthogonality vs labels: {report}");
    let kl = oracle::check_kl(&code, &errs)?;
    println!(
        "Knill-Laflamme: {}",
        if kl.is_ok() { "holds" } else { "fails" }
    );
    assert!(verdict.is_correctable() && report.passed() && kl.is_ok());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
