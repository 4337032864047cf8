//! Randomized composition series over a finite field.
//!
//! Each step picks a random algebra element `a`, an eigenvalue `λ` of `a` with
//! the smallest eigenspace, and spins kernel vectors of `a - λ`. A proper
//! submodule splits the module. When the kernel is one dimensional and both
//! it and the kernel of the transpose spin to everything, the module is
//! simple (Norton's criterion).

use rand::Rng;

use super::field::Field;
use super::linalg::{identity, mul, nullspace, rank, scale, sub, zeros, Echelon, Mat};
use super::module::MatrixModule;
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 64;

/// All composition factors of `m`, each certified simple with a one
/// dimensional endomorphism ring. Order follows a composition series from
/// the bottom up.
pub fn composition_factors<F: Field, R: Rng + ?Sized>(
    m: &MatrixModule<F>,
    rng: &mut R,
    budget: usize,
) -> Result<Vec<MatrixModule<F>>> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    // Depth-first on (sub, quotient) keeps the series order.
    while let Some(cur) = stack.pop() {
        if cur.dim() == 0 {
            continue;
        }
        match find_split(&cur, rng, budget)? {
            Some(space) => {
                let (s, q) = cur.split(&space);
                stack.push(q);
                stack.push(s);
            }
            None => {
                if cur.hom_dim(&cur)? != 1 {
                    return Err(Error::ChopBudgetExceeded(budget));
                }
                out.push(cur);
            }
        }
    }
    Ok(out)
}

/// A proper nonzero submodule, or `None` once `m` is certified simple.
pub fn find_split<F: Field, R: Rng + ?Sized>(m: &MatrixModule<F>, rng: &mut R, budget: usize) -> Result<Option<Echelon<F>>> {
    let f = m.field();
    let d = m.dim();
    if d == 1 {
        return Ok(None);
    }
    let scalars = f.elements().ok_or_else(|| Error::UnsupportedCase("chopping needs a finite field".into()))?;
    let dual = m.transposed();
    for _ in 0..budget {
        let a = random_element(m, rng);
        let mut best: Option<(usize, Mat<F::Elem>)> = None;
        for s in &scalars {
            let b = sub(f, &a, &scale(f, &identity(f, d), s));
            let nullity = d - rank(f, &b);
            if nullity > 0 && best.as_ref().is_none_or(|(k, _)| nullity < *k) {
                best = Some((nullity, b));
            }
        }
        let Some((nullity, b)) = best else { continue };
        let kernel = nullspace(f, &b);
        let mut tries: Vec<Vec<F::Elem>> = kernel.clone();
        if nullity > 1 {
            let mut mix = vec![f.zero(); d];
            for v in &kernel {
                let c = f.random(rng);
                for (x, y) in mix.iter_mut().zip(v) {
                    *x = f.mul_add(&c, y, x);
                }
            }
            if mix.iter().any(|x| !f.is_zero(x)) {
                tries.push(mix);
            }
        }
        for v in &tries {
            let s = m.spin(std::slice::from_ref(v));
            if s.len() < d {
                return Ok(Some(s));
            }
        }
        if nullity == 1 {
            let w = nullspace(f, &b.transpose()).remove(0);
            let s = dual.spin(&[w]);
            if s.len() < d {
                return Ok(Some(annihilator(f, &s, d)));
            }
            return Ok(None);
        }
    }
    Err(Error::ChopBudgetExceeded(budget))
}

/// `{v : ⟨w, v⟩ = 0 for all w ∈ space}`; invariant when `space` is invariant
/// under the transposed action.
fn annihilator<F: Field>(f: &F, space: &Echelon<F>, d: usize) -> Echelon<F> {
    let rows = Mat::from_rows(space.rows().to_vec(), d);
    let mut out = Echelon::new(f.clone(), d);
    for v in nullspace(f, &rows) {
        out.insert(&v);
    }
    out
}

/// A short random linear combination of words of length at most four in the
/// generators.
fn random_element<F: Field, R: Rng + ?Sized>(m: &MatrixModule<F>, rng: &mut R) -> Mat<F::Elem> {
    let f = m.field();
    let d = m.dim();
    let gens = m.generators();
    let mut acc = zeros(f, d, d);
    if gens.is_empty() {
        return acc;
    }
    let terms = rng.gen_range(2..=4);
    for _ in 0..terms {
        let len = rng.gen_range(1..=4);
        let mut word = gens[rng.gen_range(0..gens.len())].clone();
        for _ in 1..len {
            word = mul(f, &word, &gens[rng.gen_range(0..gens.len())]);
        }
        let c = f.random(rng);
        for r in 0..d {
            for col in 0..d {
                let v = f.mul_add(&c, word.get(r, col), acc.get(r, col));
                acc.set(r, col, v);
            }
        }
    }
    acc
}
