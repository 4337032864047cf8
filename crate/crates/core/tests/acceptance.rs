//! Acceptance run: one PASS/FAIL line per criterion, exit code 1 on any failure.
//!
//! Expected values are frozen literals in this file. Each criterion also has a
//! wall-clock ceiling; exceeding it counts as a failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use partalg::abacus::{beta_delta, beta_sequence, marked_abacus, p_core};
use partalg::decomposition::{
    counterexample_check, decomp_charp_theorem, product_check_remark, sym_group_decomp, CharpParam,
};
use partalg::diagram::Diagram;
use partalg::rep::field::{DeltaValue, FieldKind, FieldSpec};
use partalg::rep::oracle::{decomposition_matrix_oracle, OracleConfig};
use partalg::verify::run_criterion;
use partalg::{LabeledMatrix, Partition};

const SEED: u64 = 20241018;

type Check = Result<(), String>;
/// Row labels, column labels and entries of one diagonal block.
type SymBlock = (&'static [&'static str], &'static [&'static str], Vec<Vec<u32>>);
type Criterion = (&'static str, fn() -> Check, Duration);

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn parts(list: &[&str]) -> Vec<Partition> {
    list.iter().map(|s| part(s)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> OracleConfig {
    OracleConfig { seed: SEED, ..Default::default() }
}

/// Runs the library's own check for `id` on top of the literal checks here.
fn library_check(id: u8) -> Check {
    let r = run_criterion(id, SEED);
    ensure(r.passed, || r.detail)
}

fn same_matrix(a: &LabeledMatrix, b: &LabeledMatrix, what: &str) -> Check {
    let d = a.diff(b);
    ensure(d.is_empty(), || format!("{what}: {}", d.join("; ")))
}

fn c1() -> Check {
    let beta = beta_sequence(&part("5,4"), 10).map_err(|e| e.to_string())?;
    ensure(beta.values() == [14, 12, 7, 6, 5, 4, 3, 2, 1, 0], || format!("beta {:?}", beta.values()))?;
    ensure(p_core(&part("5,4"), 5) == part("3,1"), || "5-core of (5,4)".into())?;
    let bd = beta_delta(&part("2,1"), 7, 6).map_err(|e| e.to_string())?;
    ensure(bd == [10, 8, 6, 4, 3, 2, 1, 0], || format!("beta_delta {bd:?}"))?;
    let m = marked_abacus(&part("2,1"), 7, 6, 5).map_err(|e| e.to_string())?;
    ensure(m.marker == 0, || format!("marker runner {}", m.marker))
}

fn c2() -> Check {
    let a = Diagram::parse("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5).map_err(|e| e.to_string())?;
    let b = Diagram::parse("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5).map_err(|e| e.to_string())?;
    let expected = Diagram::parse("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5).map_err(|e| e.to_string())?;
    let (got, loops) = a.multiply(&b).map_err(|e| e.to_string())?;
    ensure(loops == 1 && got == expected, || format!("product δ^{loops} * {got}"))?;
    library_check(2)
}

fn bell(m: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

fn c3() -> Check {
    ensure(bell(4) == 15 && bell(6) == 203, || "Bell triangle".into())?;
    library_check(3)
}

fn c4() -> Check {
    let got = sym_group_decomp(4, 3, &cfg()).map_err(|e| e.to_string())?;
    let rows = parts(&["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    let cols = parts(&["4", "3,1", "2,2", "2,1,1"]);
    let entries = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]];
    ensure(got.rows == rows && got.cols == cols, || format!("labels {got}"))?;
    ensure(got.entries == entries, || format!("entries\n{got}"))?;
    library_check(4)
}

fn c5() -> Check {
    library_check(5)
}

fn c6() -> Check {
    for n in 2..=4 {
        for d in 0..5 {
            let spec = FieldSpec::prime(5, d).map_err(|e| e.to_string())?;
            let oracle = decomposition_matrix_oracle(n, &spec, &cfg()).map_err(|e| e.to_string())?;
            let theorem = decomp_charp_theorem(n, 5, CharpParam::Residue(d), &cfg()).map_err(|e| e.to_string())?;
            same_matrix(&theorem, &oracle, &format!("n = {n}, δ = {d}"))?;
        }
    }
    Ok(())
}

fn c7() -> Check {
    let rows = parts(&["-", "1", "2", "1,1", "3", "2,1", "1,1,1"]);
    let cols = parts(&["-", "1", "2", "1,1", "3", "2,1"]);
    let entries = vec![
        vec![1, 0, 0, 0, 1, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 1, 1],
        vec![0, 0, 0, 0, 0, 1],
    ];
    let spec = FieldSpec::prime(3, 2).map_err(|e| e.to_string())?;
    for m in [
        decomp_charp_theorem(3, 3, CharpParam::Residue(2), &cfg()).map_err(|e| e.to_string())?,
        decomposition_matrix_oracle(3, &spec, &cfg()).map_err(|e| e.to_string())?,
    ] {
        ensure(m.rows == rows && m.cols == cols, || format!("labels\n{m}"))?;
        ensure(m.entries == entries, || format!("entries\n{m}"))?;
    }
    Ok(())
}

fn c7_repeat() -> Check {
    let spec = FieldSpec::prime(5, 4).map_err(|e| e.to_string())?;
    let oracle = decomposition_matrix_oracle(5, &spec, &cfg()).map_err(|e| e.to_string())?;
    let theorem = decomp_charp_theorem(5, 5, CharpParam::Residue(4), &cfg()).map_err(|e| e.to_string())?;
    same_matrix(&theorem, &oracle, "p = 5, n = 5")?;
    // ∅ lies over (5) and (1) over (4); (1^5) has no head of its own.
    ensure(oracle.get(&part("-"), &part("5")) == Some(1), || "∅ → (5)".into())?;
    ensure(oracle.get(&part("1"), &part("4")) == Some(1), || "(1) → (4)".into())?;
    ensure(oracle.col_index(&part("1,1,1,1,1")).is_none(), || "(1^5) is a column".into())
}

fn c8() -> Check {
    // D(kS_m) over F_3 for m ≤ 3, rows then columns as in the stacked layout.
    let sym: [SymBlock; 4] = [
        (&["3", "2,1", "1,1,1"], &["3", "2,1"], vec![vec![1, 0], vec![1, 1], vec![0, 1]]),
        (&["2", "1,1"], &["2", "1,1"], vec![vec![1, 0], vec![0, 1]]),
        (&["1"], &["1"], vec![vec![1]]),
        (&["-"], &["-"], vec![vec![1]]),
    ];
    for n in 2..=3 {
        let spec = FieldSpec::new(FieldKind::Quadratic(3), DeltaValue::Generator).map_err(|e| e.to_string())?;
        let oracle = decomposition_matrix_oracle(n, &spec, &cfg()).map_err(|e| e.to_string())?;
        ensure(oracle.field.ext == 2, || "field tag".into())?;
        for row in &oracle.rows {
            for col in &oracle.cols {
                let expected = sym
                    .iter()
                    .find_map(|(r, c, e)| {
                        let i = r.iter().position(|s| part(s) == *row)?;
                        let j = c.iter().position(|s| part(s) == *col)?;
                        Some(e[i][j])
                    })
                    .unwrap_or(0);
                let got = oracle.get(row, col).unwrap_or(0);
                ensure(got == expected, || format!("n = {n}: [{row}:{col}] = {got}, expected {expected}"))?;
            }
        }
        let theorem = decomp_charp_theorem(n, 3, CharpParam::Outside, &cfg()).map_err(|e| e.to_string())?;
        same_matrix(&theorem, &oracle, &format!("n = {n}"))?;
    }
    Ok(())
}

fn c9() -> Check {
    for p in [3, 5] {
        let ok = product_check_remark(p, &cfg()).map_err(|e| e.to_string())?;
        ensure(ok, || format!("product identity fails at p = {p}"))?;
    }
    Ok(())
}

fn c10() -> Check {
    let report = counterexample_check(&cfg()).map_err(|e| e.to_string())?;
    ensure(report.holds, || format!("counterexample does not hold\n{}", report.oracle))?;
    ensure(report.products_differ.iter().map(|&(r, _)| r).eq([0, 1]), || "lifts 1 and 4".into())?;
    let o = &report.oracle;
    ensure(o.get(&part("2,1"), &part("2,1,1")) == Some(1), || "(2,1) → (2,1²)".into())?;
    ensure(o.get(&part("1"), &part("4")).unwrap_or(0) >= 1, || "(1) → (4)".into())?;
    ensure(o.get(&part("2,2"), &part("4")).unwrap_or(0) >= 1, || "(2²) → (4)".into())
}

fn c11() -> Check {
    library_check(11)
}

fn c12() -> Check {
    library_check(12)
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 13] = [
        ("1 abacus golden values", c1, secs(1)),
        ("2 diagram algebra properties", c2, secs(30)),
        ("3 dimension identities", c3, secs(10)),
        ("4 kS_4 over F_3", c4, secs(60)),
        ("5 hook modules at p", c5, secs(60)),
        ("6 p = 5 gluing vs oracle", c6, secs(300)),
        ("7 p = 3, n = 3, δ = 2 matrix", c7, secs(300)),
        ("7 p = 5, n = 5, δ = 4 repeat", c7_repeat, secs(900)),
        ("8 F_9 block diagonal", c8, secs(300)),
        ("9 product identity", c9, secs(600)),
        ("10 no product at n = 4, p = 3", c10, secs(600)),
        ("11 block cross-checks", c11, secs(60)),
        ("12 annihilator property", c12, secs(120)),
    ];
    let mut failures = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|_| ensure(took <= limit, || format!("took {took:.1?}, limit {limit:?}")));
        match outcome {
            Ok(()) => println!("PASS {name} ({:.2}s, limit {}s)", took.as_secs_f64(), limit.as_secs()),
            Err(e) => {
                failures += 1;
                println!("FAIL {name} ({:.2}s, limit {}s): {e}", took.as_secs_f64(), limit.as_secs());
            }
        }
    }
    if failures == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
