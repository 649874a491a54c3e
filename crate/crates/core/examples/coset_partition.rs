// How a Cartanion splits the Pauli group into labelled cosets.

use std::collections::BTreeMap;

use cartan_qec::{build_cartanion, coset_members, BitString, PauliSpinor, Result};

pub fn run_example() -> Result<()> {
    let c = build_cartanion(&["XX".parse()?, "ZZ".parse()?])?;
    println!(
        "Cartanion {:?}",
        c.generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "closure: {}",
        c.closure()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    let mut cosets: BTreeMap<BitString, Vec<String>> = BTreeMap::new();
    for x in 0..4 {
        for z in 0..4 {
            let s = PauliSpinor::hermitian(2, x, z);
            cosets
                .entry(c.syndrome(&s)?)
                .or_default()
                .push(s.to_string());
        }
    }
    for (label, members) in &cosets {
        println!("{label}: {}", members.join(" "));
        assert_eq!(coset_members(&c, label)?.len(), members.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
