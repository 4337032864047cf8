//! Decomposition matrices from the closed-form recipes, checked against brute force.
//!
//! Usage: `cargo run --release --example decomposition -- <n> <p> <delta>`

use partalg::decomposition::{decompose, CharpParam, DecompRequest, Method, Regime};
use partalg::rep::oracle::OracleConfig;
use partalg::Error;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, p, delta) = match args[..] {
        [n, p, d] => (n as usize, p as usize, d),
        _ => (3, 3, 2),
    };
    let regime = Regime::CharP { p, delta: CharpParam::Residue(delta) };
    let cfg = OracleConfig::default();
    match decompose(&DecompRequest { n, regime, method: Method::Both }, &cfg) {
        Ok(ms) => {
            println!("recipe\n{}\nbrute force\n{}", ms[0], ms[1]);
            let diff = ms[0].diff(&ms[1]);
            println!("{}", if diff.is_empty() { "agree".to_string() } else { diff.join("\n") });
        }
        Err(Error::UnsupportedCase(why)) => {
            println!("no recipe: {why}");
            let ms = decompose(&DecompRequest { n, regime, method: Method::Oracle }, &cfg)?;
            println!("brute force\n{}", ms[0]);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}
