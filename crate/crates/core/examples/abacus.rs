//! Beta numbers, runner counts and cores on a `p`-runner abacus.
//!
//! Usage: `cargo run --example abacus -- <partition> <beads> <p> [delta]`

use partalg::abacus::{beta_sequence, gamma, gamma_delta, marked_abacus, p_core, render_abacus};
use partalg::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (lambda, beads, p, delta) = match &args[..] {
        [l, b, p, rest @ ..] => (l.parse::<Partition>()?, b.parse()?, p.parse()?, rest.first().map(|d| d.parse()).transpose()?),
        _ => ("2,1".parse()?, 7, 5, Some(6)),
    };
    println!("λ = {lambda:?}, b = {beads}, p = {p}");
    println!("β = {:?}", beta_sequence(&lambda, beads)?.values());
    println!("{}", render_abacus(&lambda, beads, p)?);
    println!("Γ = {:?}", gamma(&lambda, beads, p)?.counts);
    println!("{p}-core = {:?}", p_core(&lambda, p));
    if let Some(d) = delta {
        let m = marked_abacus(&lambda, beads, d, p)?;
        println!("\nmarked abacus for δ = {d}, marker on runner {}", m.marker);
        println!("{}", m.render());
        println!("Γ_δ = {:?}", gamma_delta(&lambda, beads, d, p)?.counts);
    }
    Ok(())
}
