//! Brute-force decomposition matrix of `P_n(δ)` over `F_p`.
//!
//! Usage: `cargo run --release --example oracle -- <n> <p> <delta>`

use partalg::rep::field::FieldSpec;
use partalg::rep::oracle::{decomposition_matrix_oracle, OracleConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, p, delta) = match args[..] {
        [n, p, d] => (n, p, d as i64),
        _ => (3, 3, 2),
    };
    let spec = FieldSpec::prime(p, delta)?;
    let m = decomposition_matrix_oracle(n, &spec, &OracleConfig::default())?;
    println!("P_{n}({delta}) over F_{p}\n{m}");
    Ok(())
}
