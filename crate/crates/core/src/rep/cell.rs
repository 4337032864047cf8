//! Cell modules of the partition algebra as explicit matrix modules.
//!
//! `Δ_λ(n) = V(n, t) ⊗_{S_t} S^λ` with `t = |λ|`. A basis is given by the
//! orbit representatives of `I(n, t)` under `S_t` (see
//! [`normalized_it`]) tensored with the polytabloid basis of `S^λ`.

use std::collections::HashMap;
use std::sync::Arc;

use super::field::Field;
use super::linalg::{zeros, Echelon, Mat};
use super::module::MatrixModule;
use super::specht::{integral_specht, reduce_matrix, IntegralSpecht};
use crate::diagram::{module_generators, normalized_it, psi_basis, Diagram, Generator};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Where a diagram of `I(n, t)` sits in `V(n, t) ⊗ S^λ`: the orbit
/// representative and the permutation `π` with `x = rep · diag(π)`.
fn normalize(x: &Diagram, t: usize) -> (Diagram, Vec<usize>) {
    let n = x.n();
    let top = x.top_labels();
    let bottom = x.bottom_labels();
    // Propagating blocks ranked by least top point.
    let mut ranked: Vec<u8> = Vec::with_capacity(t);
    for &l in top {
        if !ranked.contains(&l) && bottom[..t].contains(&l) {
            ranked.push(l);
        }
    }
    debug_assert_eq!(ranked.len(), t);
    let pi: Vec<usize> = ranked
        .iter()
        .map(|l| bottom[..t].iter().position(|b| b == l).expect("propagating"))
        .collect();
    let mut raw: Vec<u8> = top.to_vec();
    let fresh = top.len() as u8 + 1;
    raw.extend(ranked.iter().copied());
    raw.extend((t..n).map(|j| fresh + j as u8));
    (Diagram::from_labels(n, &raw), pi)
}

fn inverse_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Builder for `Δ_λ(n)` over a field with a chosen parameter.
pub struct CellModule<F: Field> {
    field: F,
    delta: F::Elem,
    n: usize,
    label: Partition,
    reps: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    specht: Arc<IntegralSpecht>,
    perm_cache: HashMap<Vec<usize>, Mat<F::Elem>>,
}

impl<F: Field> CellModule<F> {
    pub fn new(label: &Partition, n: usize, field: &F, delta: &F::Elem) -> Result<Self> {
        let t = label.size();
        if t > n {
            return Err(Error::LabelTooLarge { label: label.to_string(), n });
        }
        let reps = normalized_it(n, t);
        let index = reps.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Ok(CellModule {
            field: field.clone(),
            delta: delta.clone(),
            n,
            label: label.clone(),
            reps,
            index,
            specht: integral_specht(label),
            perm_cache: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.reps.len() * self.specht.dim()
    }

    pub fn orbit_reps(&self) -> &[Diagram] {
        &self.reps
    }

    fn t(&self) -> usize {
        self.label.size()
    }

    /// Matrix of `ρ(w)` on `S^λ`.
    fn perm_matrix(&mut self, w: &[usize]) -> Mat<F::Elem> {
        if let Some(m) = self.perm_cache.get(w) {
            return m.clone();
        }
        let m = reduce_matrix(&self.field, &self.specht.permutation_matrix(w));
        self.perm_cache.insert(w.to_vec(), m.clone());
        m
    }

    /// The vector of `x ⊗ s_j` for `x ∈ I(n, t)` and basis vector `j` of
    /// `S^λ`, scaled by `coeff`, added into `out`.
    fn add_tensor(&mut self, out: &mut [F::Elem], x: &Diagram, j: usize, coeff: &F::Elem) {
        let f = self.field.clone();
        let (rep, pi) = normalize(x, self.t());
        let row = self.index[&rep];
        let rho = self.perm_matrix(&inverse_perm(&pi));
        let ds = self.specht.dim();
        for i in 0..ds {
            let v = rho.get(i, j);
            if !f.is_zero(v) {
                let slot = &mut out[row * ds + i];
                *slot = f.mul_add(coeff, v, slot);
            }
        }
    }

    /// Matrix by which the diagram `x` acts.
    pub fn action_matrix(&mut self, x: &Diagram) -> Result<Mat<F::Elem>> {
        if x.n() != self.n {
            return Err(Error::SizeMismatch(x.n(), self.n));
        }
        let f = self.field.clone();
        let d = self.dim();
        let ds = self.specht.dim();
        let t = self.t();
        let mut m = zeros(&f, d, d);
        for (vi, v) in self.reps.clone().iter().enumerate() {
            let (prod, loops) = x.multiply(v)?;
            if prod.propagating_count() < t {
                continue;
            }
            let coeff = f.pow(&self.delta, loops as i64).expect("nonnegative power");
            if f.is_zero(&coeff) {
                continue;
            }
            for j in 0..ds {
                let mut col = vec![f.zero(); d];
                self.add_tensor(&mut col, &prod, j, &coeff);
                for (r, val) in col.into_iter().enumerate() {
                    if !f.is_zero(&val) {
                        m.set(r, vi * ds + j, val);
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn generator_matrix(&mut self, g: Generator) -> Result<Mat<F::Elem>> {
        let x = g.diagram(self.n)?;
        self.action_matrix(&x)
    }

    pub fn module(&mut self) -> Result<MatrixModule<F>> {
        let gens = module_generators(self.n)
            .into_iter()
            .map(|g| self.generator_matrix(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixModule::new(self.field.clone(), self.dim(), gens).with_label(self.label.clone()))
    }

    /// Gram matrix of the cell form: `⟨v ⊗ s, w ⊗ s'⟩` is read off from
    /// `flip(v) · w`, which is zero unless it keeps all `t` propagating blocks.
    /// As a map `Δ → Δ^T` it is a module homomorphism whose image is the
    /// simple head, when there is one.
    pub fn form(&mut self) -> Mat<F::Elem> {
        let f = self.field.clone();
        let t = self.t();
        let ds = self.specht.dim();
        let d = self.dim();
        let specht_gram = reduce_matrix(&f, &self.specht.gram());
        let mut g = zeros(&f, d, d);
        let reps = self.reps.clone();
        for (vi, v) in reps.iter().enumerate() {
            let flipped = v.flip();
            for (wi, w) in reps.iter().enumerate() {
                let (prod, loops) = flipped.multiply(w).expect("same n");
                if prod.propagating_count() < t {
                    continue;
                }
                let coeff = f.pow(&self.delta, loops as i64).expect("nonnegative power");
                if f.is_zero(&coeff) {
                    continue;
                }
                // prod is diag(π) on the first t points, singletons elsewhere.
                let pi: Vec<usize> = (0..t)
                    .map(|i| {
                        let l = prod.top_labels()[i];
                        prod.bottom_labels()[..t].iter().position(|&b| b == l).expect("propagating")
                    })
                    .collect();
                let rho = self.perm_matrix(&inverse_perm(&pi));
                let block = super::linalg::mul(&f, &specht_gram, &rho);
                for i in 0..ds {
                    for j in 0..ds {
                        let val = f.mul(&coeff, block.get(i, j));
                        g.set(vi * ds + i, wi * ds + j, val);
                    }
                }
            }
        }
        g
    }

    /// Vector of `ψ ⊗ s_j` for an element `ψ` of the span of `I(n, t)`.
    pub fn tensor_vector(&mut self, psi: &[(Diagram, F::Elem)], j: usize) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (x, c) in psi {
            self.add_tensor(&mut out, x, j, c);
        }
        out
    }
}

/// `Δ_λ(n)` with the fixed generator order of [`module_generators`].
pub fn cell_module<F: Field>(label: &Partition, n: usize, field: &F, delta: &F::Elem) -> Result<MatrixModule<F>> {
    CellModule::new(label, n, field, delta)?.module()
}

/// Checks that the vectors of `Δ_μ(n)` killed by every `p_{i,j}` are exactly
/// the span of `ψ ⊗ s` over the Möbius basis `ψ` and basis vectors `s` of
/// `S^μ`.
pub fn psi_annihilator_check<F: Field>(mu: &Partition, n: usize, field: &F, delta: &F::Elem) -> Result<bool> {
    let f = field;
    let mut cell = CellModule::new(mu, n, f, delta)?;
    let d = cell.dim();
    let t = mu.size();
    let mut stacked: Vec<Vec<F::Elem>> = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            stacked.extend(cell.generator_matrix(Generator::P2(i, j))?.to_rows());
        }
    }
    let kernel = if stacked.is_empty() {
        (0..d).map(|i| {
            let mut v = vec![f.zero(); d];
            v[i] = f.one();
            v
        }).collect()
    } else {
        super::linalg::nullspace(f, &Mat::from_rows(stacked, d))
    };
    let mut span = Echelon::new(f.clone(), d);
    for psi in psi_basis(n, t) {
        let terms = psi.evaluate(f, delta)?;
        for j in 0..integral_specht(mu).dim() {
            span.insert(&cell.tensor_vector(&terms, j));
        }
    }
    let mut kernel_space = Echelon::new(f.clone(), d);
    for v in &kernel {
        kernel_space.insert(v);
    }
    let inside = span.rows().iter().all(|v| kernel_space.contains(v));
    Ok(inside && span.len() == kernel_space.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_it, set_partitions};
    use crate::partition::partitions_up_to;
    use crate::rep::field::{PrimeField, Rationals};
    use crate::rep::linalg::{identity, mul, scale};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn stirling2(n: usize, k: usize) -> usize {
        if n == 0 && k == 0 {
            return 1;
        }
        if n == 0 || k == 0 {
            return 0;
        }
        k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
    }

    #[test]
    fn dimensions() {
        let f = PrimeField::new(5).unwrap();
        let dim = |l: &str, n| CellModule::new(&part(l), n, &f, &2).unwrap().dim();
        assert_eq!(dim("-", 4), 15);
        assert_eq!(dim("1", 2), 3);
        for a in partitions_up_to(5, None).iter() {
            let t = a.size();
            assert_eq!(dim(&a.to_string(), t), a.num_standard_tableaux() as usize);
            for n in t..=5 {
                let expected: usize = (t..=n).map(|k| stirling2(n, k) * binom(k, t)).sum::<usize>()
                    * a.num_standard_tableaux() as usize;
                assert_eq!(dim(&a.to_string(), n), expected);
            }
        }
        assert!(matches!(CellModule::new(&part("3"), 2, &f, &2), Err(Error::LabelTooLarge { .. })));
    }

    #[test]
    fn normalize_reconstructs() {
        for n in 1..=4 {
            for t in 0..=n {
                for x in enumerate_it(n, t) {
                    let (rep, pi) = normalize(&x, t);
                    let mut images: Vec<usize> = pi.clone();
                    images.extend(t..n);
                    let (back, loops) = rep.multiply(&Diagram::permutation(&images)).unwrap();
                    assert_eq!((back, loops), (x, 0));
                }
            }
        }
    }

    /// The action is a representation: ρ(x) ρ(y) = δ^k ρ(xy).
    fn check_homomorphism<F: Field>(f: &F, delta: &F::Elem, label: &str, n: usize, pairs: usize, seed: u64) {
        let mut cell = CellModule::new(&part(label), n, f, delta).unwrap();
        let all: Vec<Vec<u8>> = set_partitions(2 * n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let x = Diagram::from_labels(n, &all[rng.gen_range(0..all.len())]);
            let y = Diagram::from_labels(n, &all[rng.gen_range(0..all.len())]);
            let (xy, loops) = x.multiply(&y).unwrap();
            let lhs = mul(f, &cell.action_matrix(&x).unwrap(), &cell.action_matrix(&y).unwrap());
            let rhs = scale(f, &cell.action_matrix(&xy).unwrap(), &f.pow(delta, loops as i64).unwrap());
            assert_eq!(lhs, rhs, "{label} n={n} x={x} y={y}");
        }
    }

    #[test]
    fn action_is_a_representation() {
        let f = PrimeField::new(7).unwrap();
        for a in partitions_up_to(3, None).iter() {
            check_homomorphism(&f, &3, &a.to_string(), 3, 150, 1);
        }
        for l in ["2,1", "1,1", "2"] {
            check_homomorphism(&f, &5, l, 4, 60, 2);
        }
        check_homomorphism(&Rationals, &Rationals.from_int(3), "2,1", 3, 40, 3);
    }

    #[test]
    fn generator_relations_hold() {
        let f = PrimeField::new(5).unwrap();
        for a in partitions_up_to(3, None).iter() {
            let m = cell_module(a, 3, &f, &2).unwrap();
            let g = m.generators();
            let id = identity(&f, m.dim());
            let (s, p2, p1) = (&g[0..2], &g[2..4], &g[4..7]);
            for x in s {
                assert_eq!(mul(&f, x, x), id);
            }
            for x in p2 {
                assert_eq!(mul(&f, x, x), *x);
            }
            for x in p1 {
                assert_eq!(mul(&f, x, x), scale(&f, x, &2));
            }
            let l = mul(&f, &mul(&f, &s[0], &s[1]), &s[0]);
            let r = mul(&f, &mul(&f, &s[1], &s[0]), &s[1]);
            assert_eq!(l, r);
        }
    }

    #[test]
    fn semisimple_dimension_identity() {
        let q = Rationals;
        let half = q.inv(&q.from_int(2)).unwrap();
        for (n, bell) in [(2, 15), (3, 203)] {
            let total: usize = partitions_up_to(n, None)
                .iter()
                .map(|a| CellModule::new(a, n, &q, &half).unwrap().dim().pow(2))
                .sum();
            assert_eq!(total, bell);
        }
    }

    #[test]
    fn form_is_an_invariant_map() {
        let f = PrimeField::new(3).unwrap();
        for delta in [0u32, 1, 2] {
            for a in partitions_up_to(3, None).iter() {
                let mut cell = CellModule::new(a, 3, &f, &delta).unwrap();
                let g = cell.form();
                assert_eq!(g, g.transpose());
                for x in cell.module().unwrap().generators() {
                    assert_eq!(mul(&f, &g, x), mul(&f, &x.transpose(), &g));
                }
            }
        }
        // With the parameter zero, Δ_∅ has no head.
        let mut empty = CellModule::new(&part("-"), 2, &f, &0).unwrap();
        assert!(crate::rep::linalg::is_zero_mat(&f, &empty.form()));
        let mut sign = CellModule::new(&part("1,1,1"), 3, &f, &2).unwrap();
        assert!(crate::rep::linalg::is_zero_mat(&f, &sign.form()));
    }

    #[test]
    fn psi_annihilator_examples() {
        let f = PrimeField::new(3).unwrap();
        assert!(psi_annihilator_check(&part("-"), 3, &f, &2).unwrap());
        assert!(psi_annihilator_check(&part("1"), 3, &f, &1).unwrap());
        assert!(psi_annihilator_check(&part("2,1"), 3, &f, &2).unwrap());
    }
}
