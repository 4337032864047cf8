//! The acceptance checks as a library, for `partalg verify`.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abacus::{beta_delta, beta_sequence, marked_abacus, p_core};
use crate::blocks::{blocks_char0, same_block_charp, same_block_charp_multiset, same_core, Char0Param};
use crate::decomposition::{
    counterexample_check, decomp_charp_theorem, product_check_remark, stacked_sym_decomp, sym_group_decomp, CharpParam,
};
use crate::diagram::{minimal_elements, AlgebraElement, Diagram, Generator};
use crate::laurent::Laurent;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::rep::cell::{psi_annihilator_check, CellModule};
use crate::rep::field::{DeltaValue, Field, FieldKind, FieldSpec, PrimeField, Rationals};
use crate::rep::meataxe::{composition_factors, DEFAULT_BUDGET};
use crate::rep::oracle::{decomposition_matrix_oracle, OracleConfig, OracleContext, DEFAULT_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Paper,
    All,
}

impl Suite {
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::Core => vec![1, 2, 3, 11, 12],
            Suite::Paper => vec![4, 5, 6, 7, 8, 9, 10],
            Suite::All => (1..=12).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

pub const NAMES: [&str; 12] = [
    "abacus golden values",
    "diagram algebra properties",
    "dimension identities",
    "symmetric group S_4 mod 3",
    "hook Specht modules at m = p",
    "gluing case against the oracle",
    "principal case n = p",
    "parameter outside the prime field",
    "product of characteristic 0 and symmetric group matrices",
    "n = 4, p = 3 counterexample",
    "block theory cross-checks",
    "annihilator of the merging generators",
];

pub fn run_suite(suite: Suite, seed: u64) -> Vec<CriterionResult> {
    suite.criteria().into_iter().map(|id| run_criterion(id, seed)).collect()
}

pub fn run_criterion(id: u8, seed: u64) -> CriterionResult {
    let cfg = OracleConfig { seed, ..Default::default() };
    let start = Instant::now();
    let outcome = match id {
        1 => abacus_golden(),
        2 => diagram_properties(seed),
        3 => dimension_identities(),
        4 => four_letters(&cfg),
        5 => hooks_at_p(seed),
        6 => gluing_agreement(&cfg),
        7 => principal_agreement(&cfg),
        8 => outside_agreement(&cfg),
        9 => product_identity(&cfg),
        10 => counterexample(&cfg),
        11 => block_cross_checks(),
        12 => annihilators(),
        _ => Err(format!("no criterion {id}")),
    };
    CriterionResult {
        id,
        name: NAMES.get(id as usize - 1).copied().unwrap_or("unknown"),
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn abacus_golden() -> Check {
    let beta = beta_sequence(&part("5,4"), 10).map_err(err)?;
    ensure(beta.values() == [14, 12, 7, 6, 5, 4, 3, 2, 1, 0], || format!("β((5,4),10) = {:?}", beta.values()))?;
    let core = p_core(&part("5,4"), 5);
    ensure(core == part("3,1"), || format!("5-core of (5,4) is {core:?}"))?;
    let bd = beta_delta(&part("2,1"), 7, 6).map_err(err)?;
    ensure(bd == [10, 8, 6, 4, 3, 2, 1, 0], || format!("β_δ((2,1),7) = {bd:?}"))?;
    let marker = marked_abacus(&part("2,1"), 7, 6, 5).map_err(err)?.marker;
    ensure(marker == 0, || format!("marker on runner {marker}"))
}

fn diagram_properties(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=5 {
        for _ in 0..500 {
            let [x, y, z] = [0; 3].map(|_| AlgebraElement::from_diagram(Diagram::random(n, &mut rng)));
            let left = x.mul(&y).and_then(|xy| xy.mul(&z)).map_err(err)?;
            let right = y.mul(&z).and_then(|yz| x.mul(&yz)).map_err(err)?;
            ensure(left == right, || format!("associativity fails at n = {n}: {x} {y} {z}"))?;
        }
        let el = |g: Generator| g.element(n).expect("valid generator");
        let sq = |g: Generator| el(g).mul(&el(g)).expect("same n");
        for i in 1..=n {
            ensure(sq(Generator::P1(i)) == el(Generator::P1(i)).scale(&Laurent::monomial(1, 1)), || format!("p_{i}² at n = {n}"))?;
            ensure(sq(Generator::E(i)) == el(Generator::E(i)), || format!("e_{i}² at n = {n}"))?;
            if i < n {
                ensure(sq(Generator::S(i, i + 1)) == el(Generator::Id), || format!("s_{i}² at n = {n}"))?;
                ensure(sq(Generator::P2(i, i + 1)) == el(Generator::P2(i, i + 1)), || format!("p_{i},{}² at n = {n}", i + 1))?;
            }
        }
    }
    let x = Diagram::parse("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5).map_err(err)?;
    let y = Diagram::parse("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5).map_err(err)?;
    let expected = Diagram::parse("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5).map_err(err)?;
    let (z, loops) = x.multiply(&y).map_err(err)?;
    ensure(z == expected && loops == 1, || format!("sample product gave δ^{loops} {z}"))
}

fn bell(m: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..m {
        let mut next = vec![*row.last().expect("nonempty")];
        for x in &row {
            next.push(next.last().expect("nonempty") + x);
        }
        row = next;
    }
    row[0]
}

fn dimension_identities() -> Check {
    // Dimensions do not depend on the parameter.
    let delta = Rationals.from_int(1);
    for n in [2usize, 3] {
        let mut total = 0;
        for a in partitions_up_to(n, None).iter() {
            let d = CellModule::new(a, n, &Rationals, &delta).map_err(err)?.dim();
            total += d * d;
        }
        ensure(total == bell(2 * n), || format!("Σ dim² = {total} at n = {n}"))?;
    }
    for n in 0..=5 {
        for t in 0..=n {
            let minimal = minimal_elements(n, t).len() as u128;
            let predicted: u128 = partitions_of(t)
                .iter()
                .map(|mu| mu.num_standard_tableaux() * mu.horizontal_strips(n - t).iter().map(|l| l.num_standard_tableaux()).sum::<u128>())
                .sum();
            ensure(minimal == predicted, || format!("|M({n},{t})| = {minimal}, expected {predicted}"))?;
        }
    }
    Ok(())
}

fn four_letters(cfg: &OracleConfig) -> Check {
    let m = sym_group_decomp(4, 3, cfg).map_err(err)?;
    let expected = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 0, 1, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]];
    ensure(m.entries == expected, || format!("got\n{m}"))
}

fn hooks_at_p(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in [3usize, 5] {
        let f = PrimeField::new(p).map_err(err)?;
        let ctx = OracleContext::symmetric_group(p, &f, DEFAULT_BOUND).map_err(err)?;
        for m in 0..p {
            let hook = Partition::hook(p - m - 1, m);
            let module = ctx.standard(&hook).expect("hook is a label");
            let mut got = composition_factors(module, &mut rng, DEFAULT_BUDGET)
                .map_err(err)?
                .iter()
                .map(|x| ctx.identify(x))
                .collect::<crate::Result<Vec<_>>>()
                .map_err(err)?;
            got.sort();
            let mut expected = match m {
                0 => vec![hook.clone()],
                m if m == p - 1 => vec![Partition::hook(1, p - 2)],
                m => vec![hook.clone(), Partition::hook(p - m, m - 1)],
            };
            expected.sort();
            ensure(got == expected, || format!("S^{hook:?} over F_{p}: {got:?}"))?;
        }
    }
    Ok(())
}

fn gluing_agreement(cfg: &OracleConfig) -> Check {
    for n in 2..=4 {
        for d in 0..5 {
            let theorem = decomp_charp_theorem(n, 5, CharpParam::Residue(d), cfg).map_err(err)?;
            let oracle = decomposition_matrix_oracle(n, &FieldSpec::prime(5, d).map_err(err)?, cfg).map_err(err)?;
            let diff = theorem.diff(&oracle);
            ensure(diff.is_empty(), || format!("n = {n}, δ = {d}: {diff:?}"))?;
        }
    }
    Ok(())
}

fn principal_agreement(cfg: &OracleConfig) -> Check {
    for p in [3usize, 5] {
        let theorem = decomp_charp_theorem(p, p, CharpParam::Residue(p as i64 - 1), cfg).map_err(err)?;
        let oracle = decomposition_matrix_oracle(p, &FieldSpec::prime(p, p as i64 - 1).map_err(err)?, cfg).map_err(err)?;
        let diff = theorem.diff(&oracle);
        ensure(diff.is_empty(), || format!("p = {p}: {diff:?}"))?;
        if p == 3 {
            let expected: Vec<Vec<u32>> = vec![
                vec![1, 0, 0, 0, 1, 0],
                vec![0, 1, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0],
                vec![0, 0, 0, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 0],
                vec![0, 0, 0, 0, 1, 1],
                vec![0, 0, 0, 0, 0, 1],
            ];
            ensure(oracle.entries == expected, || format!("p = 3 matrix\n{oracle}"))?;
        }
    }
    Ok(())
}

fn outside_agreement(cfg: &OracleConfig) -> Check {
    for n in [2usize, 3] {
        let spec = FieldSpec::new(FieldKind::Quadratic(3), DeltaValue::Generator).map_err(err)?;
        let oracle = decomposition_matrix_oracle(n, &spec, cfg).map_err(err)?;
        let stacked = stacked_sym_decomp(n, 3, cfg).map_err(err)?;
        let diff = oracle.diff(&stacked);
        ensure(diff.is_empty(), || format!("n = {n}: {diff:?}"))?;
    }
    Ok(())
}

fn product_identity(cfg: &OracleConfig) -> Check {
    for p in [3usize, 5] {
        ensure(product_check_remark(p, cfg).map_err(err)?, || format!("product differs at p = {p}"))?;
    }
    Ok(())
}

fn counterexample(cfg: &OracleConfig) -> Check {
    let report = counterexample_check(cfg).map_err(err)?;
    ensure(report.holds, || format!("{:?} {:?}", report.products_differ, report.forced_entries))
}

fn block_cross_checks() -> Check {
    let labels: Vec<Partition> = partitions_up_to(5, None).iter().cloned().collect();
    for p in [3usize, 5] {
        for d in 0..p as i64 {
            for a in &labels {
                for b in &labels {
                    let g = same_block_charp(a, b, d, p, 5).map_err(err)?;
                    let m = same_block_charp_multiset(a, b, d, p, 5).map_err(err)?;
                    ensure(g == m, || format!("{a:?} {b:?} p = {p} δ = {d}"))?;
                }
            }
        }
        for m in 0..=5 {
            let ps = partitions_of(m);
            for a in &ps {
                for b in &ps {
                    let same = same_core(a, b, p, 5).map_err(err)?;
                    ensure(same == (p_core(a, p) == p_core(b, p)), || format!("cores of {a:?} {b:?} at p = {p}"))?;
                }
            }
        }
    }
    for n in 0..=6 {
        for d in -2..=10 {
            let b = blocks_char0(n, Char0Param::Integral(d)).map_err(err)?;
            for c in &b.classes {
                let mut sizes: Vec<usize> = c.iter().map(|x| x.size()).collect();
                sizes.dedup();
                ensure(sizes.len() == c.len(), || format!("equal sizes in {c:?}"))?;
            }
        }
    }
    Ok(())
}

fn annihilators() -> Check {
    let f = PrimeField::new(3).map_err(err)?;
    for d in [1u32, 2] {
        for mu in partitions_up_to(4, None).iter() {
            ensure(psi_annihilator_check(mu, 4, &f, &d).map_err(err)?, || format!("μ = {mu:?}, δ = {d}"))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_criteria_pass() {
        for id in [1, 2, 3, 4, 11] {
            let r = run_criterion(id, 0);
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn suites_cover_everything_once() {
        let mut all = Suite::Core.criteria();
        all.extend(Suite::Paper.criteria());
        all.sort();
        assert_eq!(all, Suite::All.criteria());
    }
}
