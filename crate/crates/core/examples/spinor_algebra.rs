// Multiplying, commuting and reading Pauli spinors.

use cartan_qec::{commutes, multiply, PauliSpinor, Result};

pub fn run_example() -> Result<()> {
    let x: PauliSpinor = "XI".parse()?;
    let z: PauliSpinor = "ZI".parse()?;

    // X·Z = -iY
    let xz = multiply(&x, &z)?;
    println!("{x} * {z} = {xz}");
    assert_eq!(xz, "-iYI".parse()?);

    for (a, b) in [("XX", "ZZ"), ("XI", "ZI"), ("XYZ", "ZYX")] {
        let (a, b): (PauliSpinor, PauliSpinor) = (a.parse()?, b.parse()?);
        let word = if commutes(&a, &b)? == 0 {
            "commute"
        } else {
            "anticommute"
        };
        println!("{a} and {b} {word}");
    }

    let s: PauliSpinor = "-iXYZI".parse()?;
    println!(
        "{s}: weight {}, hermitian {}, adjoint {}",
        s.weight(),
        s.is_hermitian(),
        s.adjoint()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
