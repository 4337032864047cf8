//! Möbius-inverted basis of the span of minimal diagrams, and the check that
//! it spans the joint kernel of the merging generators on a cell module.
//!
//! Usage: `cargo run --example psi_basis -- <n> <t>`

use partalg::diagram::{minimal_elements, psi_basis};
use partalg::rep::field::{Field, PrimeField};
use partalg::rep::cell::psi_annihilator_check;
use partalg::partition::partitions_of;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, t) = match args[..] {
        [n, t] => (n, t),
        _ => (3, 1),
    };
    println!("minimal diagrams with {t} propagating blocks, n = {n}:");
    for d in minimal_elements(n, t) {
        println!("  {d}");
    }
    println!("ψ basis:");
    for psi in psi_basis(n, t) {
        println!("  {}", psi.to_string().replace('\n', "\n  "));
    }
    let f = PrimeField::new(3)?;
    for mu in partitions_of(t) {
        let ok = psi_annihilator_check(&mu, n, &f, &f.from_int(2))?;
        println!("annihilator check for {mu:?} over F_3, δ = 2: {ok}");
    }
    Ok(())
}
