//! Set-partition diagrams, their multiplication, the named generators, the
//! sets `I(n, t)` with the refinement order, and the Möbius-inverted basis of
//! the elements killed by the `p_{i,j}`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::rep::field::Field;

/// A set partition of `{1..n, -1..-n}`, negatives standing for the bottom row.
///
/// Stored as restricted-growth block labels over the points in the order
/// `1 < .. < n < -1 < .. < -n`, which is the canonical form: two diagrams are
/// equal iff their labels are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct Diagram {
    n: usize,
    labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    n: usize,
    blocks: Vec<Vec<i64>>,
}

impl TryFrom<DiagramRepr> for Diagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        Diagram::from_blocks(r.n, &r.blocks)
    }
}

impl From<Diagram> for DiagramRepr {
    fn from(d: Diagram) -> Self {
        DiagramRepr { n: d.n, blocks: d.blocks() }
    }
}

fn relabel<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Vec<u8> {
    let mut seen: HashMap<T, u8> = HashMap::new();
    raw.iter()
        .map(|x| {
            let next = seen.len() as u8;
            *seen.entry(*x).or_insert(next)
        })
        .collect()
}

impl Diagram {
    /// Builds a diagram from block labels per point (top row then bottom row).
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(n: usize, raw: &[T]) -> Self {
        assert_eq!(raw.len(), 2 * n, "need one label per point");
        Diagram { n, labels: relabel(raw) }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedDiagram("empty block".into()));
            }
            for &pt in block {
                let idx = Diagram::index_of(n, pt)
                    .ok_or_else(|| Error::MalformedDiagram(format!("point {pt} out of range for n = {n}")))?;
                if raw[idx] != usize::MAX {
                    return Err(Error::MalformedDiagram(format!("point {pt} appears twice")));
                }
                raw[idx] = b;
            }
        }
        if let Some(idx) = raw.iter().position(|&x| x == usize::MAX) {
            let pt = Diagram::point_of(n, idx);
            return Err(Error::MalformedDiagram(format!("point {pt} is missing")));
        }
        Ok(Diagram::from_labels(n, &raw))
    }

    /// Parses blocks separated by `|`, points as signed integers.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let blocks = text
            .split('|')
            .map(|b| {
                b.split_whitespace()
                    .map(|x| x.parse::<i64>().map_err(|_| Error::MalformedDiagram(format!("bad point {x:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Diagram::from_blocks(n, &blocks)
    }

    fn index_of(n: usize, pt: i64) -> Option<usize> {
        let k = pt.unsigned_abs() as usize;
        if k == 0 || k > n {
            return None;
        }
        Some(if pt > 0 { k - 1 } else { n + k - 1 })
    }

    fn point_of(n: usize, idx: usize) -> i64 {
        if idx < n {
            idx as i64 + 1
        } else {
            -((idx - n) as i64 + 1)
        }
    }

    pub fn identity(n: usize) -> Self {
        Diagram::permutation(&(0..n).collect::<Vec<_>>())
    }

    /// A random diagram: each point joins one of the blocks so far or starts
    /// a new one, all choices equally likely.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut raw = Vec::with_capacity(2 * n);
        let mut blocks = 0usize;
        for _ in 0..2 * n {
            let b = rng.gen_range(0..=blocks);
            blocks += (b == blocks) as usize;
            raw.push(b);
        }
        Diagram::from_labels(n, &raw)
    }

    /// Top point `i` joined to bottom point `images[i]` (0-based).
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut raw = vec![0usize; 2 * n];
        for (i, &j) in images.iter().enumerate() {
            raw[i] = i;
            raw[n + j] = i;
        }
        Diagram::from_labels(n, &raw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Block label of each top point.
    pub fn top_labels(&self) -> &[u8] {
        &self.labels[..self.n]
    }

    /// Block label of each bottom point.
    pub fn bottom_labels(&self) -> &[u8] {
        &self.labels[self.n..]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (idx, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(Diagram::point_of(self.n, idx));
        }
        out
    }

    /// Labels of blocks meeting both rows.
    pub fn propagating_labels(&self) -> Vec<u8> {
        let top: HashSet<u8> = self.top_labels().iter().copied().collect();
        let mut out: Vec<u8> = self.bottom_labels().iter().copied().filter(|l| top.contains(l)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn propagating_count(&self) -> usize {
        self.propagating_labels().len()
    }

    /// The product `self * other` (self on top) and the number of closed
    /// components removed from the middle row.
    pub fn multiply(&self, other: &Diagram) -> Result<(Diagram, usize)> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut uf = UnionFind::<usize>::new(3 * n);
        for (d, offset) in [(self, 0), (other, n)] {
            let mut first: HashMap<u8, usize> = HashMap::new();
            for (idx, &l) in d.labels.iter().enumerate() {
                let node = idx + offset;
                let root = *first.entry(l).or_insert(node);
                uf.union(root, node);
            }
        }
        let outer: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|v| uf.find_mut(v)).collect();
        let outer_roots: HashSet<usize> = outer.iter().copied().collect();
        let interior: HashSet<usize> = (n..2 * n).map(|v| uf.find_mut(v)).filter(|r| !outer_roots.contains(r)).collect();
        Ok((Diagram::from_labels(n, &outer), interior.len()))
    }

    /// Swaps the two rows.
    pub fn flip(&self) -> Diagram {
        let n = self.n;
        let raw: Vec<u8> = self.labels[n..].iter().chain(&self.labels[..n]).copied().collect();
        Diagram::from_labels(n, &raw)
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Diagram) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::IncomparableDomain);
        }
        let mut image: HashMap<u8, u8> = HashMap::new();
        Ok(self
            .labels
            .iter()
            .zip(&other.labels)
            .all(|(a, b)| *image.entry(*a).or_insert(*b) == *b))
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", blocks.join(" | "))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// The named elements of the partition algebra; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Id,
    /// Transposition of `i` and `j`.
    S(usize, usize),
    /// `i, j` and their bars all in one block.
    P2(usize, usize),
    /// `i` and its bar both singletons.
    P1(usize),
    /// The idempotent with strands `1..i-1` and singletons elsewhere.
    E(usize),
}

impl Generator {
    fn check(&self, n: usize) -> Result<()> {
        let ok = |i: usize| (1..=n).contains(&i);
        let valid = match *self {
            Generator::Id => true,
            Generator::S(i, j) | Generator::P2(i, j) => ok(i) && ok(j) && i != j,
            Generator::P1(i) | Generator::E(i) => ok(i),
        };
        if valid {
            Ok(())
        } else {
            Err(Error::MalformedDiagram(format!("{self:?} is not defined for n = {n}")))
        }
    }

    pub fn diagram(&self, n: usize) -> Result<Diagram> {
        self.check(n)?;
        // Start from identity strands and override.
        let mut raw: Vec<usize> = (0..n).chain(0..n).collect();
        match *self {
            Generator::Id => {}
            Generator::S(i, j) => {
                raw[n + j - 1] = i - 1;
                raw[n + i - 1] = j - 1;
            }
            Generator::P2(i, j) => {
                raw[j - 1] = i - 1;
                raw[n + j - 1] = i - 1;
            }
            Generator::P1(i) => raw[n + i - 1] = n + i - 1,
            Generator::E(i) => {
                for k in i - 1..n {
                    raw[n + k] = n + k;
                }
            }
        }
        Ok(Diagram::from_labels(n, &raw))
    }

    pub fn element(&self, n: usize) -> Result<AlgebraElement> {
        let d = self.diagram(n)?;
        let coeff = match *self {
            Generator::E(i) => Laurent::monomial(1, -((n - i + 1) as i64)),
            _ => Laurent::one(),
        };
        Ok(AlgebraElement::from_term(d, coeff))
    }
}

/// The generators used for module actions, in their fixed order:
/// `s_{i,i+1}` for `i < n`, then `p_{i,i+1}` for `i < n`, then `p_i`.
pub fn module_generators(n: usize) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..n).map(|i| Generator::S(i, i + 1)).collect();
    out.extend((1..n).map(|i| Generator::P2(i, i + 1)));
    out.extend((1..=n).map(Generator::P1));
    out
}

/// A finite linear combination of diagrams with Laurent polynomial
/// coefficients in the parameter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Diagram, Laurent>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn from_term(d: Diagram, coeff: Laurent) -> Self {
        let mut e = AlgebraElement::zero(d.n);
        e.add_term(d, coeff);
        e
    }

    pub fn from_diagram(d: Diagram) -> Self {
        AlgebraElement::from_term(d, Laurent::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> Laurent {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: Diagram, coeff: Laurent) {
        assert_eq!(d.n, self.n, "diagram size differs from element size");
        let entry = self.terms.entry(d.clone()).or_default();
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Laurent) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for (d, x) in self.terms() {
            out.add_term(d.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = AlgebraElement::zero(self.n);
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                let (d, loops) = x.multiply(y)?;
                out.add_term(d, a.mul(b).shift(loops as i64));
            }
        }
        Ok(out)
    }

    /// Specializes the parameter to `delta` in `f`.
    pub fn evaluate<F: Field>(&self, f: &F, delta: &F::Elem) -> Result<Vec<(Diagram, F::Elem)>> {
        let mut out = Vec::new();
        for (d, c) in self.terms() {
            let v = c.evaluate(f, delta).ok_or(Error::DeltaNotInvertible)?;
            if !f.is_zero(&v) {
                out.push((d.clone(), v));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(d, c)| {
                if c.terms().count() > 1 {
                    format!("({c}) * {d}")
                } else {
                    format!("{c} * {d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("\n + "))
    }
}

/// Restricted-growth strings of length `n`: all set partitions of `n` points.
pub fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, max: u8, n: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for l in 0..=max {
            prefix.push(l);
            go(prefix, max.max(l + 1), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

fn build_it(n: usize, top: &[u8], assigned: &[u8]) -> Diagram {
    let k = top.iter().max().map_or(0, |&m| m as usize + 1);
    let mut raw: Vec<usize> = top.iter().map(|&l| l as usize).collect();
    raw.extend(assigned.iter().map(|&l| l as usize));
    raw.extend((assigned.len()..n).map(|j| k + j));
    Diagram::from_labels(n, &raw)
}

fn arrangements(k: usize, t: usize, ordered: bool) -> Vec<Vec<u8>> {
    fn go(k: usize, t: usize, ordered: bool, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        let start = if ordered { 0 } else { cur.last().map_or(0, |&l| l as usize + 1) };
        for l in start..k {
            if !cur.contains(&(l as u8)) {
                cur.push(l as u8);
                go(k, t, ordered, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, t, ordered, &mut Vec::new(), &mut out);
    out
}

/// `I(n, t)`: diagrams with exactly `t` propagating blocks whose bottom
/// points `t+1..n` are singletons. Sorted canonically.
pub fn enumerate_it(n: usize, t: usize) -> Vec<Diagram> {
    it_with(n, t, true)
}

/// The members of `I(n, t)` whose propagating blocks, ranked by least top
/// point, meet the bottom row at `1, 2, .., t` in that order. These represent
/// the orbits of `S_t` permuting the first `t` bottom points.
pub fn normalized_it(n: usize, t: usize) -> Vec<Diagram> {
    it_with(n, t, false)
}

fn it_with(n: usize, t: usize, ordered: bool) -> Vec<Diagram> {
    let mut out: Vec<Diagram> = set_partitions(n)
        .into_iter()
        .flat_map(|top| {
            let k = top.iter().max().map_or(0, |&m| m as usize + 1);
            arrangements(k, t, ordered).into_iter().map(move |a| build_it(n, &top, &a))
        })
        .collect();
    out.sort();
    out
}

/// `I(n, t)` under refinement, with its Möbius function.
#[derive(Clone, Debug)]
pub struct RefinementPoset {
    n: usize,
    t: usize,
    members: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    /// `below[j]` lists all `i` with `members[i] ≺ members[j]`.
    below: Vec<Vec<usize>>,
}

impl RefinementPoset {
    pub fn new(n: usize, t: usize) -> Self {
        let members = enumerate_it(n, t);
        let index = members.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let below = members
            .iter()
            .map(|y| {
                (0..members.len())
                    .filter(|&i| members[i] != *y && members[i].refines(y).expect("same n"))
                    .collect()
            })
            .collect();
        RefinementPoset { n, t, members, index, below }
    }

    pub fn members(&self) -> &[Diagram] {
        &self.members
    }

    fn position(&self, d: &Diagram) -> Result<usize> {
        if d.n != self.n {
            return Err(Error::IncomparableDomain);
        }
        self.index.get(d).copied().ok_or(Error::IncomparableDomain)
    }

    /// `x ≺ y`: `y` is a proper coarsening of `x` inside `I(n, t)`.
    pub fn less(&self, x: &Diagram, y: &Diagram) -> Result<bool> {
        let (i, j) = (self.position(x)?, self.position(y)?);
        Ok(self.below[j].contains(&i))
    }

    pub fn minimal_elements(&self) -> Vec<Diagram> {
        (0..self.members.len())
            .filter(|&j| self.below[j].is_empty())
            .map(|j| self.members[j].clone())
            .collect()
    }

    /// `μ(x, z)` for every `z` with `x ⪯ z`, keyed by index.
    fn mobius_from(&self, x: usize) -> HashMap<usize, i64> {
        let mut above: Vec<usize> =
            (0..self.members.len()).filter(|&j| j == x || self.below[j].contains(&x)).collect();
        // Finer diagrams have more blocks; process them first.
        above.sort_by_key(|&j| std::cmp::Reverse(self.members[j].num_blocks()));
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &above {
            let value = if z == x {
                1
            } else {
                -self.below[z].iter().filter_map(|w| mu.get(w)).sum::<i64>()
            };
            mu.insert(z, value);
        }
        mu
    }

    pub fn mobius(&self, x: &Diagram, y: &Diagram) -> Result<i64> {
        let (i, j) = (self.position(x)?, self.position(y)?);
        Ok(self.mobius_from(i).get(&j).copied().unwrap_or(0))
    }

    /// One element `sum_x μ(y, x) x` per minimal `y`.
    pub fn psi_basis(&self) -> Vec<AlgebraElement> {
        (0..self.members.len())
            .filter(|&j| self.below[j].is_empty())
            .map(|y| {
                let mut e = AlgebraElement::zero(self.n);
                let mut mu: Vec<(usize, i64)> = self.mobius_from(y).into_iter().collect();
                mu.sort_unstable();
                for (x, m) in mu {
                    e.add_term(self.members[x].clone(), Laurent::monomial(m, 0));
                }
                e
            })
            .collect()
    }

    pub fn t(&self) -> usize {
        self.t
    }
}

pub fn minimal_elements(n: usize, t: usize) -> Vec<Diagram> {
    RefinementPoset::new(n, t).minimal_elements()
}

pub fn psi_basis(n: usize, t: usize) -> Vec<AlgebraElement> {
    RefinementPoset::new(n, t).psi_basis()
}

impl FromStr for Generator {
    type Err = Error;
    /// `id`, `s1,2`, `p1,2`, `p3`, `e2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        let nums = |rest: &str| -> Result<Vec<usize>> {
            rest.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        if s == "id" {
            return Ok(Generator::Id);
        }
        let (head, rest) = s.split_at(1);
        let idx = nums(rest)?;
        match (head, idx.as_slice()) {
            ("s", [i, j]) => Ok(Generator::S(*i, *j)),
            ("p", [i, j]) => Ok(Generator::P2(*i, *j)),
            ("p", [i]) => Ok(Generator::P1(*i)),
            ("e", [i]) => Ok(Generator::E(*i)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn d(text: &str, n: usize) -> Diagram {
        Diagram::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let x = d("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5);
        assert_eq!(x.blocks(), vec![vec![1, 3, -3, -4], vec![2, -1], vec![4], vec![5, -2, -5]]);
        assert_eq!(d("1 -1 | 2 -2", 2), Diagram::identity(2));
        assert!(matches!(Diagram::parse("1 | 1 -1", 1), Err(Error::MalformedDiagram(_))));
        assert!(Diagram::parse("1 -1", 2).is_err());
        assert!(Diagram::parse("1 -1 | 3 -2 | 2", 2).is_err());
    }

    #[test]
    fn canonical_form_ignores_presentation() {
        assert_eq!(d("-3 3 | 1 | -2 2 -1", 3), d("1 | 2 -1 -2 | 3 -3", 3));
        assert_eq!(d("1 -1 | 2 -2", 2).to_string(), "1 -1 | 2 -2");
    }

    #[test]
    fn three_propagating_product() {
        let x = d("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5);
        let y = d("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5);
        let (z, loops) = x.multiply(&y).unwrap();
        assert_eq!(loops, 1);
        assert_eq!(z, d("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5));
    }

    #[test]
    fn multiply_examples() {
        for n in 1..=4 {
            let id = Diagram::identity(n);
            for x in enumerate_it(n, 1).iter().take(10) {
                assert_eq!(id.multiply(x).unwrap(), (x.clone(), 0));
            }
            for i in 1..n {
                let p = Generator::P2(i, i + 1).diagram(n).unwrap();
                assert_eq!(p.multiply(&p).unwrap(), (p.clone(), 0));
            }
            let dn = Generator::E(n).diagram(n).unwrap();
            assert_eq!(dn.multiply(&dn).unwrap(), (dn.clone(), 1));
        }
        assert!(matches!(
            Diagram::identity(2).multiply(&Diagram::identity(3)),
            Err(Error::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn generator_pictures() {
        assert_eq!(Generator::S(1, 2).diagram(2).unwrap(), d("1 -2 | 2 -1", 2));
        assert_eq!(Generator::P1(1).diagram(2).unwrap(), d("1 | -1 | 2 -2", 2));
        assert_eq!(Generator::P2(1, 2).diagram(2).unwrap(), d("1 2 -1 -2", 2));
        assert_eq!(Generator::E(4).diagram(7).unwrap().propagating_count(), 3);
        assert!(Generator::S(1, 1).diagram(2).is_err());
        assert_eq!("s1,2".parse::<Generator>().unwrap(), Generator::S(1, 2));
        assert_eq!("p3".parse::<Generator>().unwrap(), Generator::P1(3));
    }

    #[test]
    fn generator_relations() {
        for n in 1..=5 {
            let el = |g: Generator| g.element(n).unwrap();
            let sq = |g: Generator| el(g).mul(&el(g)).unwrap();
            let id = el(Generator::Id);
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        assert_eq!(sq(Generator::S(i, j)), id);
                        assert_eq!(sq(Generator::P2(i, j)), el(Generator::P2(i, j)));
                    }
                }
                assert_eq!(sq(Generator::P1(i)), el(Generator::P1(i)).scale(&Laurent::monomial(1, 1)));
                assert_eq!(sq(Generator::E(i)), el(Generator::E(i)));
            }
        }
    }

    #[test]
    fn idempotent_evaluates_with_invertible_delta() {
        let f = PrimeField::new(5).unwrap();
        let e = Generator::E(2).element(3).unwrap();
        let sq = e.mul(&e).unwrap();
        assert_eq!(sq.evaluate(&f, &2).unwrap(), e.evaluate(&f, &2).unwrap());
        assert_eq!(e.evaluate(&f, &0), Err(Error::DeltaNotInvertible));
        assert_eq!(e.evaluate(&Rationals, &Rationals.from_int(2)).unwrap().len(), 1);
    }

    #[test]
    fn corner_sandwich_has_corner_singletons() {
        let n = 3;
        let e = Generator::E(n).element(n).unwrap();
        for labels in set_partitions(2 * n) {
            let x = AlgebraElement::from_diagram(Diagram::from_labels(n, &labels));
            let y = e.mul(&x).unwrap().mul(&e).unwrap();
            for (dg, _) in y.terms() {
                let blocks = dg.blocks();
                assert!(blocks.contains(&vec![n as i64]));
                assert!(blocks.contains(&vec![-(n as i64)]));
            }
        }
    }

    #[test]
    fn propagating_examples() {
        assert_eq!(Diagram::identity(4).propagating_count(), 4);
        assert_eq!(d("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5).propagating_count(), 3);
        for n in 1..=5 {
            assert_eq!(Generator::E(n).diagram(n).unwrap().propagating_count(), n - 1);
        }
    }

    fn bell(m: usize) -> usize {
        // Bell triangle.
        let mut row = vec![1usize];
        for _ in 0..m {
            let mut next = vec![*row.last().unwrap()];
            for x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn diagram_counts() {
        assert_eq!([bell(4), bell(6), bell(8)], [15, 203, 4140]);
        for n in 2..=4 {
            assert_eq!(set_partitions(2 * n).len(), bell(2 * n));
        }
    }

    #[test]
    fn it_sizes() {
        assert_eq!(enumerate_it(2, 1).len(), 3);
        assert_eq!(enumerate_it(3, 1).len(), 10);
        assert_eq!(enumerate_it(2, 0).len(), 2);
        for n in 0..=5 {
            for t in 0..=n {
                let all = enumerate_it(n, t);
                for x in &all {
                    assert_eq!(x.propagating_count(), t);
                    for j in t..n {
                        let l = x.bottom_labels()[j];
                        assert_eq!(x.labels().iter().filter(|&&m| m == l).count(), 1);
                    }
                }
                let unique: HashSet<_> = all.iter().collect();
                assert_eq!(unique.len(), all.len());
                let fact: usize = (1..=t).product();
                assert_eq!(normalized_it(n, t).len() * fact, all.len());
            }
        }
    }

    #[test]
    fn minimal_and_mobius() {
        assert_eq!(minimal_elements(3, 1).len(), 3);
        assert_eq!(minimal_elements(4, 2).len(), 12);
        for n in 0..=4 {
            for t in 0..=n {
                let falling: usize = (n - t + 1..=n).product();
                assert_eq!(minimal_elements(n, t).len(), falling);
            }
        }
        let poset = RefinementPoset::new(3, 1);
        let m = poset.members();
        for x in m {
            assert_eq!(poset.mobius(x, x).unwrap(), 1);
            for y in m {
                if poset.less(x, y).unwrap() {
                    let interval: i64 = m
                        .iter()
                        .filter(|z| (*z == x || poset.less(x, z).unwrap()) && (*z == y || poset.less(z, y).unwrap()))
                        .map(|z| poset.mobius(x, z).unwrap())
                        .sum();
                    assert_eq!(interval, 0);
                    let covers = !m.iter().any(|z| poset.less(x, z).unwrap() && poset.less(z, y).unwrap());
                    if covers {
                        assert_eq!(poset.mobius(x, y).unwrap(), -1);
                    }
                }
            }
        }
        assert!(poset.mobius(&Diagram::identity(2), &m[0]).is_err());
    }

    #[test]
    fn psi_basis_has_one_minimal_term() {
        for (n, t) in [(3, 1), (4, 2), (3, 0), (4, 1)] {
            let mins: HashSet<Diagram> = minimal_elements(n, t).into_iter().collect();
            let basis = psi_basis(n, t);
            assert_eq!(basis.len(), mins.len());
            for psi in &basis {
                assert_eq!(psi.terms().filter(|(x, _)| mins.contains(*x)).count(), 1);
            }
        }
    }

    fn arb_diagram(n: usize) -> impl Strategy<Value = Diagram> {
        proptest::collection::vec(0..2 * n as u8, 2 * n).prop_map(move |raw| Diagram::from_labels(n, &raw))
    }

    fn arb_triple() -> impl Strategy<Value = (Diagram, Diagram, Diagram)> {
        (2usize..=5).prop_flat_map(|n| (arb_diagram(n), arb_diagram(n), arb_diagram(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn associative((x, y, z) in arb_triple()) {
            let e = |d: &Diagram| AlgebraElement::from_diagram(d.clone());
            let left = e(&x).mul(&e(&y)).unwrap().mul(&e(&z)).unwrap();
            let right = e(&x).mul(&e(&y).mul(&e(&z)).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn bilinear((x, y, z) in arb_triple()) {
            let e = |d: &Diagram| AlgebraElement::from_diagram(d.clone());
            let lhs = e(&x).add(&e(&y)).unwrap().mul(&e(&z)).unwrap();
            let rhs = e(&x).mul(&e(&z)).unwrap().add(&e(&y).mul(&e(&z)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn propagation_never_grows((x, y, _z) in arb_triple()) {
            let (p, _) = x.multiply(&y).unwrap();
            prop_assert!(p.propagating_count() <= x.propagating_count().min(y.propagating_count()));
        }

        #[test]
        fn text_and_json_round_trip(x in (1usize..=5).prop_flat_map(arb_diagram)) {
            prop_assert_eq!(Diagram::parse(&x.to_string(), x.n()).unwrap(), x.clone());
            let json = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), x);
        }

        #[test]
        fn flip_reverses_products((x, y, _z) in arb_triple()) {
            let (p, k) = x.multiply(&y).unwrap();
            let (q, l) = y.flip().multiply(&x.flip()).unwrap();
            prop_assert_eq!((p.flip(), k), (q, l));
        }
    }
}
