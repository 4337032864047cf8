//! Blocks of the partition algebra: parameter pairs, chains in characteristic
//! 0 and marked-abacus classes in characteristic `p`.

use serde::{Deserialize, Serialize};

use crate::abacus::{beta_delta, gamma, gamma_delta};
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};

/// `(−|λ|, λ_1, …, λ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatVector(pub Vec<i64>);

/// `(δ, −1, −2, …, −n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoShift(pub Vec<i64>);

pub fn hat(a: &Partition, n: usize) -> Result<HatVector> {
    if a.len() > n {
        return Err(Error::LabelTooLarge { label: a.to_string(), n });
    }
    let mut v = vec![-(a.size() as i64)];
    v.extend((0..n).map(|i| a.part(i) as i64));
    Ok(HatVector(v))
}

pub fn rho(delta: i64, n: usize) -> RhoShift {
    let mut v = vec![delta];
    v.extend((1..=n as i64).map(|i| -i));
    RhoShift(v)
}

/// The parameter in characteristic 0: an integer, or anything outside `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Char0Param {
    Integral(i64),
    NonIntegral,
}

/// `μ ⊂ λ` strictly, differing in one row whose last node has content
/// `δ − |μ|`.
pub fn is_delta_pair(mu: &Partition, lam: &Partition, delta: i64) -> bool {
    delta_pair_row(mu, lam, delta).is_some()
}

/// The (1-based) row in which a parameter pair differs.
pub fn delta_pair_row(mu: &Partition, lam: &Partition, delta: i64) -> Option<usize> {
    if mu == lam || !lam.contains(mu) {
        return None;
    }
    let rows: Vec<usize> = (0..lam.len()).filter(|&i| lam.part(i) != mu.part(i)).collect();
    let [i] = rows[..] else { return None };
    let content = lam.part(i) as i64 - (i as i64 + 1);
    (content == delta - mu.size() as i64).then_some(i + 1)
}

fn sorted_multiset(v: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let mut v: Vec<i64> = v.into_iter().collect();
    v.sort_unstable();
    v
}

fn shifted(a: &Partition, delta: i64, n: usize) -> Result<Vec<i64>> {
    let h = hat(a, n)?;
    Ok(sorted_multiset(h.0.iter().zip(&rho(delta, n).0).map(|(x, y)| x + y)))
}

/// `â + ρ` and `b̂ + ρ` agree up to reordering.
pub fn same_block_char0(a: &Partition, b: &Partition, delta: Char0Param, n: usize) -> Result<bool> {
    match delta {
        Char0Param::NonIntegral => Ok(a == b),
        Char0Param::Integral(d) => Ok(shifted(a, d, n)? == shifted(b, d, n)?),
    }
}

/// Marked-abacus runner counts agree at `n` beads. Debug builds also compare
/// the marked bead positions modulo `p` as multisets.
pub fn same_block_charp(a: &Partition, b: &Partition, delta: i64, p: usize, n: usize) -> Result<bool> {
    let by_gamma = gamma_delta(a, n, delta, p)? == gamma_delta(b, n, delta, p)?;
    debug_assert_eq!(by_gamma, same_block_charp_multiset(a, b, delta, p, n)?);
    Ok(by_gamma)
}

/// The marked bead positions of `a` and `b` agree modulo `p` as multisets.
pub fn same_block_charp_multiset(a: &Partition, b: &Partition, delta: i64, p: usize, n: usize) -> Result<bool> {
    let m = p as i64;
    let reduce = |x: &Partition| -> Result<Vec<i64>> { Ok(sorted_multiset(beta_delta(x, n, delta)?.into_iter().map(|v| v.rem_euclid(m)))) };
    Ok(reduce(a)? == reduce(b)?)
}

/// Equal-size partitions share a `p`-block of the symmetric group iff their
/// unmarked runner counts agree.
pub fn same_core(a: &Partition, b: &Partition, p: usize, n: usize) -> Result<bool> {
    Ok(gamma(a, n, p)? == gamma(b, n, p)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub n: usize,
    /// `0` in characteristic 0.
    pub p: usize,
    /// `None` for a non-integral parameter.
    pub delta: Option<i64>,
    pub classes: Vec<Vec<Partition>>,
}

impl BlockDecomposition {
    pub fn class_of(&self, a: &Partition) -> Option<&[Partition]> {
        self.classes.iter().find(|c| c.contains(a)).map(|c| c.as_slice())
    }

    pub fn same_class(&self, a: &Partition, b: &Partition) -> bool {
        self.class_of(a).is_some_and(|c| c.contains(b))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl std::fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for class in &self.classes {
            let names: Vec<String> = class.iter().map(|c| format!("{c:?}")).collect();
            writeln!(f, "{{{}}}", names.join(", "))?;
        }
        Ok(())
    }
}

/// Groups labels by an equivalence given as a key function; classes come
/// out in order of their first member.
fn classes_by_key<K: PartialEq>(labels: &[Partition], key: impl Fn(&Partition) -> Result<K>) -> Result<Vec<Vec<Partition>>> {
    let mut keys: Vec<K> = Vec::new();
    let mut classes: Vec<Vec<Partition>> = Vec::new();
    for a in labels {
        let k = key(a)?;
        match keys.iter().position(|x| *x == k) {
            Some(i) => classes[i].push(a.clone()),
            None => {
                keys.push(k);
                classes.push(vec![a.clone()]);
            }
        }
    }
    Ok(classes)
}

/// Orders a characteristic-0 class as `λ^(0) ⊂ λ^(1) ⊂ …` and checks that
/// step `i` is a parameter pair differing in row `i + 1`.
pub fn martin_chain(class: &[Partition], delta: i64) -> Result<Vec<Partition>> {
    let mut chain = class.to_vec();
    chain.sort();
    for (i, w) in chain.windows(2).enumerate() {
        if delta_pair_row(&w[0], &w[1], delta) != Some(i + 1) {
            return Err(Error::ChainShapeViolation(format!("{:?} -> {:?} at step {i}", w[0], w[1])));
        }
    }
    Ok(chain)
}

pub fn blocks_char0(n: usize, delta: Char0Param) -> Result<BlockDecomposition> {
    let labels: Vec<Partition> = partitions_up_to(n, None).iter().cloned().collect();
    let (classes, d) = match delta {
        Char0Param::NonIntegral => (labels.iter().map(|a| vec![a.clone()]).collect(), None),
        Char0Param::Integral(d) => {
            let classes = classes_by_key(&labels, |a| shifted(a, d, n))?;
            for c in &classes {
                martin_chain(c, d)?;
            }
            (classes, Some(d))
        }
    };
    Ok(BlockDecomposition { n, p: 0, delta: d, classes })
}

pub fn blocks_charp(n: usize, p: usize, delta: i64) -> Result<BlockDecomposition> {
    let labels: Vec<Partition> = partitions_up_to(n, None).iter().cloned().collect();
    let d = delta.rem_euclid(p as i64);
    let classes = classes_by_key(&labels, |a| gamma_delta(a, n, d, p))?;
    Ok(BlockDecomposition { n, p, delta: Some(d), classes })
}

/// Semisimple unless the parameter is an integer in `[0, 2n − 1)`.
pub fn is_semisimple_char0(n: usize, delta: Char0Param) -> bool {
    match delta {
        Char0Param::NonIntegral => true,
        Char0Param::Integral(d) => !(0..2 * n as i64 - 1).contains(&d),
    }
}
