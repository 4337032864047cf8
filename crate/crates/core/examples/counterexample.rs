//! At n = 4, p = 3, δ = 1 the modular matrix is not a product of a lifted
//! characteristic-0 matrix with the symmetric-group matrices.

use partalg::decomposition::counterexample_check;
use partalg::rep::oracle::OracleConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = counterexample_check(&OracleConfig::default())?;
    println!("D(P_4(1)) over F_3\n{}", report.oracle);
    for (r, differs) in &report.products_differ {
        println!("lift δ = {}: product {}", 1 + 3 * r, if *differs { "differs" } else { "matches" });
    }
    for (row, col, v) in &report.forced_entries {
        println!("[Δ_{row:?} : L_{col:?}] = {v}");
    }
    println!("holds: {}", report.holds);
    Ok(())
}
