//! Concatenating set-partition diagrams and counting closed loops.
//!
//! Usage: `cargo run --example diagram_multiplication -- <n> "<diagram A>" "<diagram B>"`

use partalg::diagram::{AlgebraElement, Diagram, Generator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, a, b) = match &args[..] {
        [n, a, b] => (n.parse()?, a.clone(), b.clone()),
        _ => (5, "1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4".into(), "1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5".into()),
    };
    let x = Diagram::parse(&a, n)?;
    let y = Diagram::parse(&b, n)?;
    let (z, loops) = x.multiply(&y)?;
    println!("{x}\n  ·\n{y}\n  =\nδ^{loops} * {z}");
    println!("propagating blocks: {} · {} → {}", x.propagating_count(), y.propagating_count(), z.propagating_count());

    let p1 = Generator::P1(1).element(n)?;
    println!("\np_1 · p_1 = {}", p1.mul(&p1)?);
    let x = AlgebraElement::from_diagram(x);
    println!("x · x = {}", x.mul(&x)?);
    Ok(())
}
