//! Integral Specht modules, their Gram ranks mod p and composition factors.
//!
//! Usage: `cargo run --example specht -- <partition> <p>`

use partalg::rep::field::PrimeField;
use partalg::rep::meataxe::composition_factors;
use partalg::rep::specht::{integral_specht, specht_gram_rank, specht_module};
use partalg::Partition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (shape, p): (Partition, usize) = match &args[..] {
        [s, p] => (s.parse()?, p.parse()?),
        _ => ("2,1,1".parse()?, 3),
    };
    let s = integral_specht(&shape);
    println!("S^{shape:?}: dimension {}", s.dim());
    let f = PrimeField::new(p)?;
    println!("rank of the Gram matrix mod {p}: {}", specht_gram_rank(&shape, &f)?);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let factors = composition_factors(&specht_module(&shape, &f), &mut rng, 64)?;
    let dims: Vec<usize> = factors.iter().map(|m| m.dim()).collect();
    println!("composition factor dimensions over F_{p}: {dims:?}");
    Ok(())
}
