//! James' abacus: beta-sequences, runner counts, p-cores and the abacus with
//! a marker runner determined by the parameter.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Strictly decreasing bead positions; the number of entries is the bead count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSequence {
    values: Vec<usize>,
}

impl BetaSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Parse(format!("beta-sequence {values:?} is not strictly decreasing")));
        }
        Ok(BetaSequence { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn beads(&self) -> usize {
        self.values.len()
    }
}

/// Bead counts per runner.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RunnerCounts {
    pub counts: Vec<usize>,
}

impl RunnerCounts {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// An abacus with `beads` beads on `p` runners and a marker over one runner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedAbacus {
    pub p: usize,
    pub beads: usize,
    pub positions: Vec<usize>,
    pub marker: usize,
}

fn check_beads(a: &Partition, b: usize) -> Result<()> {
    if b < a.size() || b < a.len() {
        return Err(Error::BeadCountTooSmall { beads: b, size: a.size(), parts: a.len() });
    }
    Ok(())
}

pub fn beta_sequence(a: &Partition, b: usize) -> Result<BetaSequence> {
    check_beads(a, b)?;
    let values = (0..b).map(|i| a.part(i) + b - i - 1).collect();
    Ok(BetaSequence { values })
}

pub fn partition_of_beta(s: &BetaSequence) -> Partition {
    let b = s.beads();
    let parts = s.values.iter().enumerate().map(|(i, &v)| v + i + 1 - b).collect();
    Partition::new(parts).expect("a strictly decreasing sequence gives a partition")
}

fn residue(v: i64, p: usize) -> usize {
    v.rem_euclid(p as i64) as usize
}

fn counts_of(values: impl IntoIterator<Item = i64>, p: usize) -> RunnerCounts {
    let mut counts = vec![0; p];
    for v in values {
        counts[residue(v, p)] += 1;
    }
    RunnerCounts { counts }
}

pub fn gamma(a: &Partition, b: usize, p: usize) -> Result<RunnerCounts> {
    let beta = beta_sequence(a, b)?;
    Ok(counts_of(beta.values.iter().map(|&v| v as i64), p))
}

/// The p-core computed on an abacus with `b` beads.
pub fn p_core_with_beads(a: &Partition, p: usize, b: usize) -> Result<Partition> {
    let counts = gamma(a, b, p)?;
    let mut slid: Vec<usize> = counts
        .counts
        .iter()
        .enumerate()
        .flat_map(|(r, &c)| (0..c).map(move |k| r + k * p))
        .collect();
    slid.sort_unstable_by(|x, y| y.cmp(x));
    Ok(partition_of_beta(&BetaSequence { values: slid }))
}

pub fn p_core(a: &Partition, p: usize) -> Partition {
    p_core_with_beads(a, p, a.size().max(a.len())).expect("bead count is large enough")
}

/// The sequence `(delta - |a| + b, beta(a, b))`.
pub fn beta_delta(a: &Partition, b: usize, delta: i64) -> Result<Vec<i64>> {
    let beta = beta_sequence(a, b)?;
    let mut out = vec![delta - a.size() as i64 + b as i64];
    out.extend(beta.values.iter().map(|&v| v as i64));
    Ok(out)
}

pub fn marked_abacus(a: &Partition, b: usize, delta: i64, p: usize) -> Result<MarkedAbacus> {
    let seq = beta_delta(a, b, delta)?;
    Ok(MarkedAbacus {
        p,
        beads: b,
        positions: seq[1..].iter().map(|&v| v as usize).collect(),
        marker: residue(seq[0], p),
    })
}

pub fn gamma_delta(a: &Partition, b: usize, delta: i64, p: usize) -> Result<RunnerCounts> {
    let m = marked_abacus(a, b, delta, p)?;
    let mut counts = counts_of(m.positions.iter().map(|&v| v as i64), p);
    counts.counts[m.marker] += 1;
    Ok(counts)
}

fn render_grid(header: String, positions: &[usize], p: usize) -> String {
    let rows = positions.iter().max().map_or(0, |&m| (m + 1).div_ceil(p));
    let mut lines = vec![header];
    for r in 0..rows {
        let cells: Vec<&str> = (0..p)
            .map(|c| if positions.contains(&(r * p + c)) { "o" } else { "|" })
            .collect();
        lines.push(cells.join(" "));
    }
    lines.join("\n")
}

impl MarkedAbacus {
    /// ASCII picture: a marker line with `v` over the marked runner, then one
    /// line per row of positions, beads as `o` and empty runner slots as `|`.
    pub fn render(&self) -> String {
        let header: Vec<&str> = (0..self.p).map(|c| if c == self.marker { "v" } else { " " }).collect();
        render_grid(header.join(" "), &self.positions, self.p)
    }
}

/// ASCII picture of the plain abacus of `a`, headed by runner numbers.
pub fn render_abacus(a: &Partition, b: usize, p: usize) -> Result<String> {
    let beta = beta_sequence(a, b)?;
    let header: Vec<String> = (0..p).map(|c| (c % 10).to_string()).collect();
    Ok(render_grid(header.join(" "), beta.values(), p))
}
