//! Blocks of the partition algebra in characteristic 0 and p.
//!
//! Usage: `cargo run --example blocks -- <n> <delta> [p]`

use partalg::blocks::{blocks_char0, blocks_charp, martin_chain, Char0Param};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, delta, p) = match args[..] {
        [n, d] => (n as usize, d, None),
        [n, d, p] => (n as usize, d, Some(p as usize)),
        _ => (4, 1, Some(3)),
    };
    let char0 = blocks_char0(n, Char0Param::Integral(delta))?;
    println!("characteristic 0, n = {n}, δ = {delta}\n{char0}");
    for class in char0.classes.iter().filter(|c| c.len() > 1) {
        let chain: Vec<String> = martin_chain(class, delta)?.iter().map(|l| format!("{l:?}")).collect();
        println!("chain: {}", chain.join(" ↪ "));
    }
    if let Some(p) = p {
        println!("\ncharacteristic {p}\n{}", blocks_charp(n, p, delta)?);
    }
    Ok(())
}
