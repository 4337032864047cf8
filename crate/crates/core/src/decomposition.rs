//! Decomposition matrices from closed-form recipes.
//!
//! Characteristic 0 matrices come from the block chains. In characteristic
//! `p` three situations have recipes: a parameter outside the prime field,
//! `n < p`, and `n = p` with parameter `p − 1`. Everything else is left to
//! the oracle.

use serde::{Deserialize, Serialize};

use crate::blocks::{blocks_char0, blocks_charp, delta_pair_row, martin_chain, Char0Param};
use crate::error::{Error, Result};
use crate::labeled::{FieldTag, LabeledMatrix};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::rep::field::{DeltaValue, FieldKind, FieldSpec};
use crate::rep::oracle::{decomposition_matrix_oracle, symmetric_group_oracle, OracleConfig};

/// The parameter in characteristic `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharpParam {
    /// A residue class in `F_p`.
    Residue(i64),
    /// The generator of `F_{p²}` over `F_p`.
    Outside,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    Char0(Char0Param),
    CharP { p: usize, delta: CharpParam },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompRequest {
    pub n: usize,
    pub regime: Regime,
    pub method: Method,
}

impl Regime {
    pub fn delta_text(&self) -> String {
        match self {
            Regime::Char0(Char0Param::Integral(d)) => d.to_string(),
            Regime::Char0(Char0Param::NonIntegral) => "ss".into(),
            Regime::CharP { p, delta: CharpParam::Residue(d) } => d.rem_euclid(*p as i64).to_string(),
            Regime::CharP { delta: CharpParam::Outside, .. } => "x".into(),
        }
    }

    pub fn field_tag(&self) -> FieldTag {
        match self {
            Regime::Char0(_) => FieldTag::rationals(),
            Regime::CharP { p, delta: CharpParam::Residue(_) } => FieldTag::prime(*p),
            Regime::CharP { p, delta: CharpParam::Outside } => FieldTag { p: *p, ext: 2 },
        }
    }

    /// The field the oracle runs over. A non-integral parameter is modelled
    /// by `1/2`.
    pub fn field_spec(&self) -> Result<FieldSpec> {
        match *self {
            Regime::Char0(Char0Param::Integral(d)) => Ok(FieldSpec::rationals(d)),
            Regime::Char0(Char0Param::NonIntegral) => FieldSpec::new(FieldKind::Rationals, DeltaValue::Ratio(1, 2)),
            Regime::CharP { p, delta: CharpParam::Residue(d) } => FieldSpec::prime(p, d),
            Regime::CharP { p, delta: CharpParam::Outside } => FieldSpec::new(FieldKind::Quadratic(p), DeltaValue::Generator),
        }
    }
}

fn labels(n: usize, p: Option<usize>) -> Vec<Partition> {
    partitions_up_to(n, p).iter().cloned().collect()
}

/// Columns in characteristic `p`: the `p`-regular labels, without `∅` when
/// the parameter is zero (then `Δ_∅` has no simple head).
pub fn charp_columns(n: usize, p: usize, delta_is_zero: bool) -> Vec<Partition> {
    labels(n, Some(p)).into_iter().filter(|a| !(delta_is_zero && n > 0 && a.is_empty())).collect()
}

/// Within each chain `λ^(0) ⊂ λ^(1) ⊂ …`, row `λ^(i)` has ones at `λ^(i)`
/// and `λ^(i+1)`.
pub fn decomp_char0(n: usize, delta: Char0Param) -> Result<LabeledMatrix> {
    let all = labels(n, None);
    let regime = Regime::Char0(delta);
    let mut m = LabeledMatrix::unit_diagonal(n, FieldTag::rationals(), regime.delta_text(), all.clone(), all);
    if let Char0Param::Integral(d) = delta {
        for class in blocks_char0(n, delta)?.classes {
            for w in martin_chain(&class, d)?.windows(2) {
                m.set(&w[0], &w[1], 1)?;
            }
        }
    }
    Ok(m)
}

/// `[S^μ : D^λ]` for the symmetric group on `m` letters. Below `p` the
/// algebra is semisimple; at `m = p` only the hooks (the principal block)
/// are not simple, and each hook `(p−k, 1^k)` has the factors `(p−k, 1^k)`
/// and `(p−k+1, 1^(k−1))` when those are `p`-regular. Above `p` the matrix
/// comes from the oracle.
pub fn sym_group_decomp(m: usize, p: usize, cfg: &OracleConfig) -> Result<LabeledMatrix> {
    if m > p {
        return symmetric_group_oracle(m, p, cfg);
    }
    let rows = partitions_of(m);
    let cols: Vec<Partition> = rows.iter().filter(|a| a.is_p_regular(p)).cloned().collect();
    let mut out = LabeledMatrix::unit_diagonal(m, FieldTag::prime(p), "", rows, cols);
    if m == p {
        for k in 1..p {
            let hook = Partition::hook(p - k - 1, k);
            let above = Partition::hook(p - k, k - 1);
            out.set(&hook, &above, 1)?;
        }
    }
    Ok(out)
}

/// The matrices of the symmetric groups on `n, n−1, …, 0` letters placed
/// along the diagonal, rows `Λ_{≤n}` and columns `Λ*_{≤n}`.
pub fn stacked_sym_decomp(n: usize, p: usize, cfg: &OracleConfig) -> Result<LabeledMatrix> {
    let mut out = LabeledMatrix::zeros(n, FieldTag::prime(p), "", labels(n, None), labels(n, Some(p)));
    for m in 0..=n {
        let d = sym_group_decomp(m, p, cfg)?;
        for (i, r) in d.rows.iter().enumerate() {
            for (j, c) in d.cols.iter().enumerate() {
                out.set(r, c, d.entries[i][j])?;
            }
        }
    }
    Ok(out)
}

/// The unique `(δ + rp)`-pair target of `μ` inside `Λ_{≤n}`, searching
/// `−n ≤ δ + rp ≤ 2n`.
fn pair_target(mu: &Partition, n: usize, p: usize, delta: i64) -> Result<Option<Partition>> {
    let pi = p as i64;
    let lo = (-(n as i64) - delta).div_euclid(pi);
    let hi = (2 * n as i64 - delta).div_euclid(pi) + 1;
    let mut found = Vec::new();
    for r in lo..=hi {
        let d = delta + r * pi;
        if d < -(n as i64) || d > 2 * n as i64 {
            continue;
        }
        for lam in partitions_up_to(n, None).iter() {
            if delta_pair_row(mu, lam, d).is_some() {
                found.push(lam.clone());
            }
        }
    }
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        _ => Err(Error::AmbiguousPair(format!("{mu:?} -> {found:?}"))),
    }
}

pub fn decomp_charp_theorem(n: usize, p: usize, delta: CharpParam, cfg: &OracleConfig) -> Result<LabeledMatrix> {
    let regime = Regime::CharP { p, delta };
    match delta {
        CharpParam::Outside => {
            let mut m = stacked_sym_decomp(n, p, cfg)?;
            m.field = regime.field_tag();
            m.delta = regime.delta_text();
            Ok(m)
        }
        CharpParam::Residue(d) => {
            let d = d.rem_euclid(p as i64);
            if n < p {
                gluing(n, p, d)
            } else if n == p && d == p as i64 - 1 {
                principal_case(p)
            } else {
                Err(Error::UnsupportedCase(format!("no recipe for n = {n}, p = {p}, δ = {d}; only the oracle applies")))
            }
        }
    }
}

fn gluing(n: usize, p: usize, d: i64) -> Result<LabeledMatrix> {
    let rows = labels(n, None);
    let cols = charp_columns(n, p, d == 0);
    let mut m = LabeledMatrix::unit_diagonal(n, FieldTag::prime(p), d.to_string(), rows.clone(), cols);
    for mu in &rows {
        if let Some(lam) = pair_target(mu, n, p, d)? {
            m.set(mu, &lam, 1)?;
        }
    }
    Ok(m)
}

fn principal_case(p: usize) -> Result<LabeledMatrix> {
    let n = p;
    let d = p as i64 - 1;
    let rows = labels(n, None);
    let cols = charp_columns(n, p, false);
    let mut m = LabeledMatrix::zeros(n, FieldTag::prime(p), d.to_string(), rows.clone(), cols.clone());
    let blocks = blocks_charp(n, p, d)?;
    let empty = Partition::empty();
    let principal = blocks.class_of(&empty).expect("∅ is a label").to_vec();
    let char0 = decomp_char0(n, Char0Param::Integral(d))?;
    for mu in &rows {
        if principal.contains(mu) {
            continue;
        }
        for (lam, v) in char0.row_support(mu) {
            if !cols.contains(&lam) {
                return Err(Error::PSingularLabel(format!("{lam:?}, reached from {mu:?} outside the principal block")));
            }
            m.set(mu, &lam, v)?;
        }
    }
    m.set(&empty, &empty, 1)?;
    m.set(&empty, &Partition::hook(p - 1, 0), 1)?;
    m.set(&Partition::hook(p - 1, 0), &Partition::hook(p - 1, 0), 1)?;
    for k in 1..p - 1 {
        let hook = Partition::hook(p - k - 1, k);
        m.set(&hook, &hook, 1)?;
        m.set(&hook, &Partition::hook(p - k, k - 1), 1)?;
    }
    m.set(&Partition::hook(0, p - 1), &Partition::hook(1, p - 2), 1)?;
    Ok(m)
}

/// Whether the `n = p`, `δ = p − 1` matrix equals the characteristic 0
/// matrix at `p − 1` times the stacked symmetric group matrices.
pub fn product_check_remark(p: usize, cfg: &OracleConfig) -> Result<bool> {
    let lhs = decomp_charp_theorem(p, p, CharpParam::Residue(p as i64 - 1), cfg)?;
    let rhs = decomp_char0(p, Char0Param::Integral(p as i64 - 1))?.mul(&stacked_sym_decomp(p, p, cfg)?)?;
    Ok(lhs.diff(&rhs).is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub oracle: LabeledMatrix,
    /// `(r, differs)` for the lifts `1 + 3r`.
    pub products_differ: Vec<(i64, bool)>,
    pub forced_entries: Vec<(Partition, Partition, u32)>,
    pub holds: bool,
}

/// At `n = 4`, `p = 3`, `δ = 1` the oracle matrix is not the product of a
/// characteristic 0 matrix at `1` or `4` with the symmetric group matrices.
pub fn counterexample_check(cfg: &OracleConfig) -> Result<CounterexampleReport> {
    let (n, p) = (4, 3);
    let oracle = decomposition_matrix_oracle(n, &FieldSpec::prime(p, 1)?, cfg)?;
    let s = stacked_sym_decomp(n, p, cfg)?;
    let mut products_differ = Vec::new();
    for r in [0i64, 1] {
        let prod = decomp_char0(n, Char0Param::Integral(1 + 3 * r))?.mul(&s)?;
        products_differ.push((r, !oracle.diff(&prod).is_empty()));
    }
    let part = |s: &str| -> Partition { s.parse().expect("literal") };
    let forced: Vec<(Partition, Partition)> = vec![(part("2,1"), part("2,1,1")), (part("1"), part("4")), (part("2,2"), part("4"))];
    let forced_entries: Vec<(Partition, Partition, u32)> =
        forced.into_iter().map(|(a, b)| { let v = oracle.get(&a, &b).unwrap_or(0); (a, b, v) }).collect();
    let holds = products_differ.iter().all(|&(_, d)| d) && forced_entries.iter().all(|&(_, _, v)| v >= 1);
    Ok(CounterexampleReport { oracle, products_differ, forced_entries, holds })
}

/// Runs a request; with [`Method::Both`] the theorem comes first.
pub fn decompose(req: &DecompRequest, cfg: &OracleConfig) -> Result<Vec<LabeledMatrix>> {
    let theorem = || match req.regime {
        Regime::Char0(d) => decomp_char0(req.n, d),
        Regime::CharP { p, delta } => decomp_charp_theorem(req.n, p, delta, cfg),
    };
    let oracle = || decomposition_matrix_oracle(req.n, &req.regime.field_spec()?, cfg);
    match req.method {
        Method::Theorem => Ok(vec![theorem()?]),
        Method::Oracle => Ok(vec![oracle()?]),
        Method::Both => Ok(vec![theorem()?, oracle()?]),
    }
}
