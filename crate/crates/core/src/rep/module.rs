//! Modules given by one matrix per algebra generator, submodules, quotients
//! and homomorphism spaces.

use super::field::Field;
use super::linalg::{self, axpy, is_zero_mat, mul, mul_vec, nullspace, scale, zeros, Echelon, Mat};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A left module: generator `g` acts on column vectors by `gens[g]`.
#[derive(Clone, Debug)]
pub struct MatrixModule<F: Field> {
    field: F,
    dim: usize,
    gens: Vec<Mat<F::Elem>>,
    label: Option<Partition>,
}

impl<F: Field> MatrixModule<F> {
    pub fn new(field: F, dim: usize, gens: Vec<Mat<F::Elem>>) -> Self {
        for g in &gens {
            assert_eq!((g.rows(), g.cols()), (dim, dim), "generator matrices must be {dim}x{dim}");
        }
        MatrixModule { field, dim, gens, label: None }
    }

    pub fn with_label(mut self, label: Partition) -> Self {
        self.label = Some(label);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Mat<F::Elem>] {
        &self.gens
    }

    pub fn label(&self) -> Option<&Partition> {
        self.label.as_ref()
    }

    /// The module with every generator transposed. For generators fixed by
    /// the algebra's anti-involution this is the contravariant dual.
    pub fn transposed(&self) -> Self {
        MatrixModule {
            field: self.field.clone(),
            dim: self.dim,
            gens: self.gens.iter().map(|g| g.transpose()).collect(),
            label: self.label.clone(),
        }
    }

    /// Smallest submodule containing `seeds`.
    pub fn spin(&self, seeds: &[Vec<F::Elem>]) -> Echelon<F> {
        linalg::spin(&self.field, &self.gens, seeds, self.dim)
    }

    /// The submodule spanned by `space` (which must be invariant) and the
    /// quotient by it. Quotient coordinates are the non-pivot coordinates.
    pub fn split(&self, space: &Echelon<F>) -> (MatrixModule<F>, MatrixModule<F>) {
        let f = &self.field;
        let k = space.len();
        let sub_gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = zeros(f, k, k);
                for (j, row) in space.rows().iter().enumerate() {
                    let (coeffs, residue) = space.reduce(&mul_vec(f, g, row));
                    debug_assert!(residue.iter().all(|x| f.is_zero(x)), "subspace is not invariant");
                    for (i, c) in coeffs.into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        let free: Vec<usize> = (0..self.dim).filter(|c| !space.pivots().contains(c)).collect();
        let q = free.len();
        let quot_gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = zeros(f, q, q);
                for (j, &c) in free.iter().enumerate() {
                    let (_, residue) = space.reduce(&g.column(c));
                    for (i, &r) in free.iter().enumerate() {
                        m.set(i, j, residue[r].clone());
                    }
                }
                m
            })
            .collect();
        (MatrixModule::new(f.clone(), k, sub_gens), MatrixModule::new(f.clone(), q, quot_gens))
    }

    /// Image of a module map `x: N -> self` given as a matrix, as a submodule.
    pub fn image_of(&self, x: &Mat<F::Elem>) -> MatrixModule<F> {
        let mut space = Echelon::new(self.field.clone(), self.dim);
        for c in 0..x.cols() {
            space.insert(&x.column(c));
        }
        self.split(&space).0
    }

    pub fn hom_dim(&self, target: &MatrixModule<F>) -> Result<usize> {
        Ok(Presentation::new(self).hom_space(target)?.dim())
    }

    pub fn hom_basis(&self, target: &MatrixModule<F>) -> Result<Vec<Mat<F::Elem>>> {
        let p = Presentation::new(self);
        Ok(p.hom_space(target)?.basis())
    }

    pub fn is_invariant(&self, space: &Echelon<F>) -> bool {
        space
            .rows()
            .iter()
            .all(|row| self.gens.iter().all(|g| space.contains(&mul_vec(&self.field, g, row))))
    }
}

#[derive(Clone, Debug)]
enum Step<E> {
    /// A new basis vector chosen freely (a generator of the module).
    Seed,
    /// `gen * rows[from] = sum coeffs * rows[..] + pivot * rows[new]`.
    Grow { from: usize, gen: usize, coeffs: Vec<(usize, E)>, pivot_inv: E },
    /// `gen * rows[from] = sum coeffs * rows[..]`.
    Relation { from: usize, gen: usize, coeffs: Vec<(usize, E)> },
}

/// A record of spinning a module from seeds: enough to solve for every
/// homomorphism out of it into any other module with the same generators.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    field: F,
    dim: usize,
    ngens: usize,
    space: Echelon<F>,
    steps: Vec<Step<F::Elem>>,
}

impl<F: Field> Presentation<F> {
    pub fn new(m: &MatrixModule<F>) -> Self {
        let f = &m.field;
        let mut space = Echelon::new(f.clone(), m.dim);
        let mut steps = Vec::new();
        let mut next_unit = 0;
        let mut processed = 0;
        let sparse = |coeffs: Vec<F::Elem>| -> Vec<(usize, F::Elem)> {
            coeffs.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()
        };
        while space.len() < m.dim || processed < space.len() {
            if processed == space.len() {
                // Closed under the generators: add a seed outside the span.
                while space.contains(&unit(f, m.dim, next_unit)) {
                    next_unit += 1;
                }
                space.insert(&unit(f, m.dim, next_unit));
                steps.push(Step::Seed);
                continue;
            }
            let row = space.rows()[processed].clone();
            for (g, mat) in m.gens.iter().enumerate() {
                let (coeffs, residue) = space.reduce(&mul_vec(f, mat, &row));
                match space.insert_residue(residue) {
                    Some(pivot_inv) => steps.push(Step::Grow { from: processed, gen: g, coeffs: sparse(coeffs), pivot_inv }),
                    None => steps.push(Step::Relation { from: processed, gen: g, coeffs: sparse(coeffs) }),
                }
            }
            processed += 1;
        }
        Presentation { field: f.clone(), dim: m.dim, ngens: m.gens.len(), space, steps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Solves for all module maps into `target`.
    pub fn hom_space(&self, target: &MatrixModule<F>) -> Result<HomSpace<F>> {
        if target.gens.len() != self.ngens {
            return Err(Error::GeneratorMismatch);
        }
        let f = &self.field;
        let n = target.dim;
        // images[i]: n x k matrix; column c is the image of row i under the
        // c-th free parameter direction.
        let mut images: Vec<Mat<F::Elem>> = Vec::with_capacity(self.dim);
        let mut k = 0;
        for step in &self.steps {
            match step {
                Step::Seed => {
                    for img in images.iter_mut() {
                        *img = pad_columns(f, img, n);
                    }
                    let mut fresh = zeros(f, n, k + n);
                    for i in 0..n {
                        fresh.set(i, k + i, f.one());
                    }
                    images.push(fresh);
                    k += n;
                }
                Step::Grow { from, gen, coeffs, pivot_inv } => {
                    let mut img = mul(f, &target.gens[*gen], &images[*from]);
                    subtract_combination(f, &mut img, coeffs, &images);
                    images.push(scale(f, &img, pivot_inv));
                }
                Step::Relation { from, gen, coeffs } => {
                    if k == 0 {
                        continue;
                    }
                    let mut c = mul(f, &target.gens[*gen], &images[*from]);
                    subtract_combination(f, &mut c, coeffs, &images);
                    if is_zero_mat(f, &c) {
                        continue;
                    }
                    let kernel = nullspace(f, &c);
                    let basis = Mat::from_columns(&kernel, k, f.zero());
                    for img in images.iter_mut() {
                        *img = mul(f, img, &basis);
                    }
                    k = kernel.len();
                }
            }
        }
        Ok(HomSpace { field: f.clone(), source: self.space.clone(), target_dim: n, images, k })
    }
}

fn unit<F: Field>(f: &F, dim: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); dim];
    v[i] = f.one();
    v
}

fn pad_columns<F: Field>(f: &F, m: &Mat<F::Elem>, extra: usize) -> Mat<F::Elem> {
    let mut out = zeros(f, m.rows(), m.cols() + extra);
    for r in 0..m.rows() {
        out.row_mut(r)[..m.cols()].clone_from_slice(m.row(r));
    }
    out
}

fn subtract_combination<F: Field>(f: &F, acc: &mut Mat<F::Elem>, coeffs: &[(usize, F::Elem)], images: &[Mat<F::Elem>]) {
    for (j, c) in coeffs {
        let neg = f.neg(c);
        for r in 0..acc.rows() {
            axpy(f, acc.row_mut(r), &neg, images[*j].row(r));
        }
    }
}

/// The solution space of a homomorphism problem.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    field: F,
    source: Echelon<F>,
    target_dim: usize,
    images: Vec<Mat<F::Elem>>,
    k: usize,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.k
    }

    /// Basis of the homomorphisms as `target_dim x source_dim` matrices.
    pub fn basis(&self) -> Vec<Mat<F::Elem>> {
        let f = &self.field;
        let d = self.source.ambient_dim();
        if self.k == 0 {
            return Vec::new();
        }
        // X * E^T = Y where E holds the spun rows and Y their images.
        let e_t = self.source.to_mat().transpose();
        let e_t_inv = linalg::inverse(f, &e_t).expect("spun rows form a basis");
        (0..self.k)
            .map(|c| {
                let y_cols: Vec<Vec<F::Elem>> = self.images.iter().map(|img| img.column(c)).collect();
                let y = Mat::from_columns(&y_cols, self.target_dim, f.zero());
                let x = mul(f, &y, &e_t_inv);
                debug_assert_eq!(x.cols(), d);
                x
            })
            .collect()
    }
}
