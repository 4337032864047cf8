//! Integer partitions, Young diagram nodes and the orders used to label
//! cell modules.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A node `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-based");
        Node { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(arm + 1, 1^leg)`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&x| x > c).count())
            .collect();
        Partition { parts }
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_p_regular(&self, p: usize) -> bool {
        let mut run = 0;
        for (i, &x) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == x { run + 1 } else { 1 };
            if run >= p {
                return false;
            }
        }
        true
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        (0..self.len())
            .filter(|&i| self.part(i + 1) < self.parts[i])
            .map(|i| Node::new(i + 1, self.parts[i]))
            .collect()
    }

    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out: Vec<Node> = (0..=self.len())
            .filter(|&i| i == 0 || self.parts[i - 1] > self.part(i))
            .map(|i| Node::new(i + 1, self.part(i) + 1))
            .collect();
        out.sort();
        out
    }

    pub fn remove_node(&self, node: Node) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.get_mut(node.row - 1) {
            Some(x) if *x == node.col => *x -= 1,
            _ => return Err(Error::MalformedPartition(format!("{node:?} is not in {self}"))),
        }
        Partition::new(parts)
    }

    pub fn add_node(&self, node: Node) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if node.row == parts.len() + 1 {
            parts.push(0);
        }
        match parts.get_mut(node.row - 1) {
            Some(x) if *x + 1 == node.col => *x += 1,
            _ => return Err(Error::MalformedPartition(format!("cannot add {node:?} to {self}"))),
        }
        Partition::new(parts)
    }

    /// Dominance order with size: smaller partitions come first, equal sizes
    /// compare by prefix sums.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        match self.size().cmp(&other.size()) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => {
                let (mut a, mut b) = (0, 0);
                (0..self.len().max(other.len())).all(|i| {
                    a += self.part(i);
                    b += other.part(i);
                    a <= b
                })
            }
        }
    }

    /// All `λ ⊇ self` with `k` more nodes, no two of them in one column.
    pub fn horizontal_strips(&self, k: usize) -> Vec<Partition> {
        fn go(mu: &Partition, row: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            let base = mu.part(row);
            if row > mu.len() {
                if left == 0 {
                    out.push(Partition { parts: prefix.iter().copied().filter(|&x| x > 0).collect() });
                }
                return;
            }
            let cap = if row == 0 { left } else { (mu.part(row - 1) - base).min(left) };
            for extra in 0..=cap {
                prefix.push(base + extra);
                go(mu, row + 1, left - extra, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, k, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> u128 {
        let conj = self.conjugate();
        let num: u128 = (1..=self.size() as u128).product();
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(r, &row)| {
                let conj = &conj;
                (0..row).map(move |c| ((row - c) + (conj.parts[c] - r) - 1) as u128)
            })
            .product();
        num / hooks
    }
}

/// Listing order: size ascending, then reverse-lexicographic within a size.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedPartition(s.to_string()))?;
        if parts.contains(&0) {
            return Err(Error::MalformedPartition(s.to_string()));
        }
        Partition::new(parts)
    }
}

/// Partitions of `m` in reverse-lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            prefix.push(x);
            go(rest - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// The labels of all partitions of size at most `n`, optionally restricted to
/// the `p`-regular ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSet {
    pub n: usize,
    pub p: Option<usize>,
    pub members: Vec<Partition>,
}

impl PartitionSet {
    pub fn iter(&self) -> std::slice::Iter<'_, Partition> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, a: &Partition) -> Option<usize> {
        self.members.iter().position(|x| x == a)
    }
}

pub fn partitions_up_to(n: usize, p: Option<usize>) -> PartitionSet {
    let members = (0..=n)
        .flat_map(partitions_of)
        .filter(|a| p.is_none_or(|p| a.is_p_regular(p)))
        .collect();
    PartitionSet { n, p, members }
}
