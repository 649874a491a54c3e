// The four code types, from additive to fully nonadditive.

use cartan_qec::classify;
use cartan_qec::golden;
use cartan_qec::Result;

pub fn run_example() -> Result<()> {
    let fixtures = [
        ("repetition", golden::type_i()),
        ("diagonal, three codewords", golden::type_ii()),
        ("punctured seed, two codewords", golden::type_iii()),
        ("punctured seed, three codewords", golden::type_iv()),
    ];
    for (name, code) in &fixtures {
        let class = classify(code);
        println!("== {name}: [[{}, {}]]", code.width(), code.dimension());
        println!("{class}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
