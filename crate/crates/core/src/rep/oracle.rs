//! Decomposition matrices computed directly from matrix modules.
//!
//! Each standard module (a cell module, or a Specht module for the symmetric
//! group) comes with its invariant form. The image of the form is the simple
//! head. Over a finite field a standard module is chopped into composition
//! factors, and each factor is named by the unique label whose standard
//! module maps onto it. Over the rationals there is no finite search for
//! eigenvalues, so simple submodules are peeled off the bottom instead.

use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cell::CellModule;
use super::field::{Field, FieldSpec, FieldVisitor};
use super::linalg::{rank, Echelon, Mat};
use super::meataxe::{composition_factors, DEFAULT_BUDGET};
use super::module::{MatrixModule, Presentation};
use super::specht::{integral_specht, reduce_matrix, specht_module};
use crate::error::{Error, Result};
use crate::labeled::{FieldTag, LabeledMatrix};
use crate::partition::{partitions_of, partitions_up_to, Partition};

pub const DEFAULT_BOUND: usize = 200;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    /// Largest standard module dimension accepted.
    pub bound: usize,
    /// Chop attempts per module.
    pub budget: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { seed: 0, bound: DEFAULT_BOUND, budget: DEFAULT_BUDGET, jobs: None }
    }
}

struct Standard<F: Field> {
    label: Partition,
    module: MatrixModule<F>,
    head: Option<MatrixModule<F>>,
    presentation: OnceLock<Presentation<F>>,
    head_presentation: OnceLock<Presentation<F>>,
}

impl<F: Field> Standard<F> {
    fn presentation(&self) -> &Presentation<F> {
        self.presentation.get_or_init(|| Presentation::new(&self.module))
    }

    fn head_presentation(&self) -> Option<&Presentation<F>> {
        let head = self.head.as_ref()?;
        Some(self.head_presentation.get_or_init(|| Presentation::new(head)))
    }
}

/// The standard modules of one algebra over one field, with their heads.
pub struct OracleContext<F: Field> {
    field: F,
    standards: Vec<Standard<F>>,
}

impl<F: Field> OracleContext<F> {
    /// `items` are `(label, module, form)` with the form a module map from
    /// the module to its transpose.
    pub fn new(field: F, items: Vec<(Partition, MatrixModule<F>, Mat<F::Elem>)>) -> Self {
        let standards = items
            .into_iter()
            .map(|(label, module, form)| {
                let head = (rank(&field, &form) > 0).then(|| module.transposed().image_of(&form));
                Standard { label, module, head, presentation: OnceLock::new(), head_presentation: OnceLock::new() }
            })
            .collect();
        OracleContext { field, standards }
    }

    /// Cell modules of the partition algebra on `n` points.
    pub fn partition_algebra(n: usize, field: &F, delta: &F::Elem, bound: usize) -> Result<Self> {
        let labels: Vec<Partition> = partitions_up_to(n, None).iter().cloned().collect();
        let mut items = Vec::with_capacity(labels.len());
        for label in labels {
            let mut cell = CellModule::new(&label, n, field, delta)?;
            if cell.dim() > bound {
                return Err(Error::DeskScaleExceeded { dim: cell.dim(), bound });
            }
            let module = cell.module()?;
            let form = cell.form();
            items.push((label, module, form));
        }
        Ok(OracleContext::new(field.clone(), items))
    }

    /// Specht modules of the symmetric group on `m` letters.
    pub fn symmetric_group(m: usize, field: &F, bound: usize) -> Result<Self> {
        let mut items = Vec::new();
        for label in partitions_of(m) {
            let module = specht_module(&label, field);
            if module.dim() > bound {
                return Err(Error::DeskScaleExceeded { dim: module.dim(), bound });
            }
            let form = reduce_matrix(field, &integral_specht(&label).gram());
            items.push((label, module, form));
        }
        Ok(OracleContext::new(field.clone(), items))
    }

    pub fn labels(&self) -> Vec<Partition> {
        self.standards.iter().map(|s| s.label.clone()).collect()
    }

    /// Labels whose standard module has a simple head, in label order.
    pub fn head_labels(&self) -> Vec<Partition> {
        self.standards.iter().filter(|s| s.head.is_some()).map(|s| s.label.clone()).collect()
    }

    pub fn standard(&self, label: &Partition) -> Option<&MatrixModule<F>> {
        self.find(label).map(|s| &s.module)
    }

    pub fn head(&self, label: &Partition) -> Option<&MatrixModule<F>> {
        self.find(label)?.head.as_ref()
    }

    fn find(&self, label: &Partition) -> Option<&Standard<F>> {
        self.standards.iter().find(|s| &s.label == label)
    }

    /// The label of a simple module: the unique head of matching dimension
    /// whose standard module maps onto it.
    pub fn identify(&self, simple: &MatrixModule<F>) -> Result<Partition> {
        let candidates: Vec<&Standard<F>> = self
            .standards
            .iter()
            .filter(|s| s.head.as_ref().is_some_and(|h| h.dim() == simple.dim()))
            .collect();
        let mut found = Vec::new();
        for s in &candidates {
            if s.presentation().hom_space(simple)?.dim() > 0 {
                found.push(s.label.clone());
            }
        }
        if found.len() == 1 {
            return Ok(found.remove(0));
        }
        Err(Error::IdentificationFailed {
            dim: simple.dim(),
            candidates: candidates.iter().map(|s| s.label.to_string()).collect(),
        })
    }

    /// Composition factors of the standard module at `index`, by label.
    pub fn factor_labels(&self, index: usize, rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<Partition>> {
        let module = &self.standards[index].module;
        if self.field.characteristic() == 0 {
            return self.peel(module);
        }
        composition_factors(module, rng, budget)?.iter().map(|f| self.identify(f)).collect()
    }

    /// Removes simple submodules one at a time, naming each by the head that
    /// embeds in what is left.
    pub fn peel(&self, module: &MatrixModule<F>) -> Result<Vec<Partition>> {
        let mut rest = module.clone();
        let mut out = Vec::new();
        'outer: while rest.dim() > 0 {
            for s in &self.standards {
                let Some(pres) = s.head_presentation() else { continue };
                if pres.dim() > rest.dim() {
                    continue;
                }
                let homs = pres.hom_space(&rest)?;
                if homs.dim() == 0 {
                    continue;
                }
                let phi = homs.basis().remove(0);
                let mut image = Echelon::new(self.field.clone(), rest.dim());
                for c in 0..phi.cols() {
                    image.insert(&phi.column(c));
                }
                debug_assert_eq!(image.len(), pres.dim());
                rest = rest.split(&image).1;
                out.push(s.label.clone());
                continue 'outer;
            }
            return Err(Error::IdentificationFailed { dim: rest.dim(), candidates: self.head_labels().iter().map(|l| l.to_string()).collect() });
        }
        Ok(out)
    }

    /// Rows are all labels, columns the labels with a head.
    pub fn matrix(&self, n: usize, tag: FieldTag, delta: &str, cfg: &OracleConfig) -> Result<LabeledMatrix> {
        let rows = self.labels();
        let cols = self.head_labels();
        let run = || -> Result<Vec<Vec<Partition>>> {
            (0..self.standards.len())
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                    rng.set_stream(i as u64);
                    self.factor_labels(i, &mut rng, cfg.budget)
                })
                .collect()
        };
        let factors = match cfg.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::UnsupportedCase(e.to_string()))?
                .install(run)?,
            None => run()?,
        };
        let mut m = LabeledMatrix::zeros(n, tag, delta, rows, cols);
        for (i, labels) in factors.iter().enumerate() {
            for l in labels {
                let j = m.col_index(l).expect("factors are heads");
                m.entries[i][j] += 1;
            }
        }
        Ok(m)
    }
}

struct OracleRun<'a> {
    n: usize,
    spec: &'a FieldSpec,
    cfg: &'a OracleConfig,
}

impl FieldVisitor for OracleRun<'_> {
    type Output = Result<LabeledMatrix>;
    fn visit<F: Field>(self, field: F, delta: F::Elem) -> Result<LabeledMatrix> {
        let ctx = OracleContext::partition_algebra(self.n, &field, &delta, self.cfg.bound)?;
        ctx.matrix(self.n, field_tag(self.spec), &self.spec.delta.to_string(), self.cfg)
    }
}

pub fn field_tag(spec: &FieldSpec) -> FieldTag {
    let (p, ext) = spec.describe();
    FieldTag { p, ext }
}

/// `[Δ_μ(n) : L_λ(n)]` for all labels, by brute force.
pub fn decomposition_matrix_oracle(n: usize, spec: &FieldSpec, cfg: &OracleConfig) -> Result<LabeledMatrix> {
    spec.visit(OracleRun { n, spec, cfg })
}

/// `[S^μ : D^λ]` for the symmetric group on `m` letters over `F_p`.
pub fn symmetric_group_oracle(m: usize, p: usize, cfg: &OracleConfig) -> Result<LabeledMatrix> {
    let field = super::field::PrimeField::new(p)?;
    let ctx = OracleContext::symmetric_group(m, &field, cfg.bound)?;
    ctx.matrix(m, FieldTag::prime(p), "", cfg)
}

/// Name of a simple `P_n` module over the field of `spec`.
pub fn identify_factor<F: Field>(simple: &MatrixModule<F>, n: usize, field: &F, delta: &F::Elem) -> Result<Partition> {
    OracleContext::partition_algebra(n, field, delta, usize::MAX)?.identify(simple)
}
