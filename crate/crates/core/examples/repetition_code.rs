// The [[3,2]] bit-flip repetition code: build, tabulate syndromes, decode.

use cartan_qec::{
    build_code, check_correctable, diagnose, syndrome_table, Cartanion, ErrorSet, Result,
};

pub fn run_example() -> Result<()> {
    let code = build_code(&Cartanion::diagonal(3), &["000".parse()?, "111".parse()?])?;
    let errs = ErrorSet::new(vec![
        "III".parse()?,
        "XII".parse()?,
        "IXI".parse()?,
        "IIX".parse()?,
    ])?;

    let table = syndrome_table(&code, &errs)?;
    for i in 0..table.rows() {
        for j in 0..table.columns() {
            println!(
                "{} · {} -> {}",
                errs.get(i),
                code.codeword_spinors()[j],
                table.entry(i, j)
            );
        }
    }
    let verdict = check_correctable(&code, &errs)?;
    println!("verdict: {verdict}");
    assert!(verdict.is_correctable());

    let (i, j) = diagnose(&code, &errs, &"011".parse()?)?;
    println!("syndrome 011: error {} on codeword {j}", errs.get(i));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
