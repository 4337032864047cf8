//! Exact fields: the rationals, prime fields and quadratic extensions of
//! prime fields.

use std::fmt;
use std::hash::Hash;

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn characteristic(&self) -> usize;
    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a * b + c`
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(&self.mul(a, b), c)
    }

    fn pow(&self, a: &Self::Elem, k: i64) -> Option<Self::Elem> {
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            sq = self.mul(&sq, &sq);
            e >>= 1;
        }
        Some(acc)
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: usize) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as usize {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p: p as u64 })
    }

    pub fn modulus(&self) -> usize {
        self.p as usize
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p - *b as u64) % self.p) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn mul_add(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        ((*a as u64 * *b as u64 + *c as u64) % self.p) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        ((self.p - *a as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let mut e = self.p - 2;
        let (mut acc, mut sq) = (1u64, *a as u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq % self.p;
            }
            sq = sq * sq % self.p;
            e >>= 1;
        }
        Some(acc as u32)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> usize {
        self.p as usize
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p as u32).collect())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p as u32)
    }
    fn render(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// `F_p[x]/(x^2 + c1 x + c0)` with the lexicographically least irreducible
/// monic quadratic. Elements are `[a0, a1]` meaning `a0 + a1 x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    base: PrimeField,
    c1: u32,
    c0: u32,
}

impl QuadraticField {
    pub fn new(p: usize) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if p == 2 {
            return Err(Error::InvalidField("characteristic 2 is not supported".into()));
        }
        let has_root = |c1: u32, c0: u32| {
            (0..p as u32).any(|r| {
                let v = base.add(&base.mul(&r, &r), &base.add(&base.mul(&c1, &r), &c0));
                v == 0
            })
        };
        let (c1, c0) = (0..p as u32)
            .flat_map(|c1| (0..p as u32).map(move |c0| (c1, c0)))
            .find(|&(c1, c0)| !has_root(c1, c0))
            .expect("an irreducible quadratic exists over every prime field");
        Ok(QuadraticField { base, c1, c0 })
    }

    /// The class of `x`, which lies outside the prime field.
    pub fn generator(&self) -> [u32; 2] {
        [0, 1]
    }

    /// Coefficients `(c1, c0)` of the modulus `x^2 + c1 x + c0`.
    pub fn modulus(&self) -> (u32, u32) {
        (self.c1, self.c0)
    }

    fn norm(&self, a: &[u32; 2]) -> u32 {
        let f = &self.base;
        let t = f.mul(&f.mul(&self.c1, &a[0]), &a[1]);
        let s = f.add(&f.mul(&a[0], &a[0]), &f.mul(&self.c0, &f.mul(&a[1], &a[1])));
        f.sub(&s, &t)
    }
}

impl Field for QuadraticField {
    type Elem = [u32; 2];

    fn zero(&self) -> [u32; 2] {
        [0, 0]
    }
    fn one(&self) -> [u32; 2] {
        [1, 0]
    }
    fn from_int(&self, v: i64) -> [u32; 2] {
        [self.base.from_int(v), 0]
    }
    fn add(&self, a: &[u32; 2], b: &[u32; 2]) -> [u32; 2] {
        [self.base.add(&a[0], &b[0]), self.base.add(&a[1], &b[1])]
    }
    fn sub(&self, a: &[u32; 2], b: &[u32; 2]) -> [u32; 2] {
        [self.base.sub(&a[0], &b[0]), self.base.sub(&a[1], &b[1])]
    }
    fn mul(&self, a: &[u32; 2], b: &[u32; 2]) -> [u32; 2] {
        let f = &self.base;
        let lo = f.mul(&a[0], &b[0]);
        let mid = f.add(&f.mul(&a[0], &b[1]), &f.mul(&a[1], &b[0]));
        let hi = f.mul(&a[1], &b[1]);
        // x^2 = -c1 x - c0
        [f.sub(&lo, &f.mul(&hi, &self.c0)), f.sub(&mid, &f.mul(&hi, &self.c1))]
    }
    fn neg(&self, a: &[u32; 2]) -> [u32; 2] {
        [self.base.neg(&a[0]), self.base.neg(&a[1])]
    }
    fn inv(&self, a: &[u32; 2]) -> Option<[u32; 2]> {
        let f = &self.base;
        let n_inv = f.inv(&self.norm(a))?;
        let conj = [f.sub(&a[0], &f.mul(&self.c1, &a[1])), f.neg(&a[1])];
        Some([f.mul(&conj[0], &n_inv), f.mul(&conj[1], &n_inv)])
    }
    fn is_zero(&self, a: &[u32; 2]) -> bool {
        *a == [0, 0]
    }
    fn characteristic(&self) -> usize {
        self.base.modulus()
    }
    fn elements(&self) -> Option<Vec<[u32; 2]>> {
        let p = self.base.modulus() as u32;
        Some((0..p).flat_map(|a1| (0..p).map(move |a0| [a0, a1])).collect())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> [u32; 2] {
        [self.base.random(rng), self.base.random(rng)]
    }
    fn render(&self, a: &[u32; 2]) -> String {
        match (a[0], a[1]) {
            (c, 0) => c.to_string(),
            (0, 1) => "x".into(),
            (0, d) => format!("{d}x"),
            (c, 1) => format!("{c}+x"),
            (c, d) => format!("{c}+{d}x"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> usize {
        0
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_int(rng.gen_range(-9..=9))
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Which field an oracle run uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    Prime(usize),
    Quadratic(usize),
}

/// The value of the parameter inside the chosen field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeltaValue {
    Int(i64),
    /// `num / den` in characteristic 0.
    Ratio(i64, i64),
    /// The class of `x` in a quadratic extension.
    Generator,
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaValue::Int(v) => write!(f, "{v}"),
            DeltaValue::Ratio(a, b) => write!(f, "{a}/{b}"),
            DeltaValue::Generator => write!(f, "x"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub delta: DeltaValue,
}

/// Generic code run on whichever concrete field a [`FieldSpec`] selects.
pub trait FieldVisitor {
    type Output;
    fn visit<F: Field>(self, field: F, delta: F::Elem) -> Self::Output;
}

impl FieldSpec {
    pub fn new(kind: FieldKind, delta: DeltaValue) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidField(msg.to_string()));
        match (kind, delta) {
            (FieldKind::Prime(p) | FieldKind::Quadratic(p), _) if !is_prime(p) || p < 3 => {
                return bad("p must be an odd prime");
            }
            (FieldKind::Rationals, DeltaValue::Generator) => return bad("x needs a quadratic extension"),
            (FieldKind::Prime(_) | FieldKind::Quadratic(_), DeltaValue::Ratio(..)) => {
                return bad("fractions are only meaningful over the rationals")
            }
            (FieldKind::Rationals, DeltaValue::Ratio(_, 0)) => return bad("zero denominator"),
            _ => {}
        }
        Ok(FieldSpec { kind, delta })
    }

    pub fn prime(p: usize, delta: i64) -> Result<Self> {
        FieldSpec::new(FieldKind::Prime(p), DeltaValue::Int(delta))
    }

    pub fn rationals(delta: i64) -> Self {
        FieldSpec { kind: FieldKind::Rationals, delta: DeltaValue::Int(delta) }
    }

    pub fn characteristic(&self) -> usize {
        match self.kind {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) | FieldKind::Quadratic(p) => p,
        }
    }

    /// `(p, degree)` with `p = 0` for the rationals.
    pub fn describe(&self) -> (usize, usize) {
        match self.kind {
            FieldKind::Rationals => (0, 1),
            FieldKind::Prime(p) => (p, 1),
            FieldKind::Quadratic(p) => (p, 2),
        }
    }

    pub fn visit<V: FieldVisitor>(&self, visitor: V) -> V::Output {
        match (self.kind, self.delta) {
            (FieldKind::Rationals, d) => {
                let delta = match d {
                    DeltaValue::Int(v) => BigRational::from_integer(v.into()),
                    DeltaValue::Ratio(a, b) => BigRational::new(a.into(), b.into()),
                    DeltaValue::Generator => unreachable!("rejected by FieldSpec::new"),
                };
                visitor.visit(Rationals, delta)
            }
            (FieldKind::Prime(p), d) => {
                let field = PrimeField::new(p).expect("validated prime");
                let delta = match d {
                    DeltaValue::Int(v) => field.from_int(v),
                    _ => unreachable!("rejected by FieldSpec::new"),
                };
                visitor.visit(field, delta)
            }
            (FieldKind::Quadratic(p), d) => {
                let field = QuadraticField::new(p).expect("validated prime");
                let delta = match d {
                    DeltaValue::Int(v) => field.from_int(v),
                    DeltaValue::Generator => field.generator(),
                    DeltaValue::Ratio(..) => unreachable!("rejected by FieldSpec::new"),
                };
                visitor.visit(field, delta)
            }
        }
    }

    /// Whether the parameter is zero in the field.
    pub fn delta_is_zero(&self) -> bool {
        match self.delta {
            DeltaValue::Int(v) => match self.kind {
                FieldKind::Rationals => v == 0,
                FieldKind::Prime(p) | FieldKind::Quadratic(p) => v.rem_euclid(p as i64) == 0,
            },
            DeltaValue::Ratio(a, _) => a == 0,
            DeltaValue::Generator => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q, delta = {}", self.delta),
            FieldKind::Prime(p) => write!(f, "F_{p}, delta = {}", self.delta),
            FieldKind::Quadratic(p) => write!(f, "F_{}, delta = {}", p * p, self.delta),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn axioms<F: Field>(f: &F) {
        let elems = f.elements().unwrap();
        for a in &elems {
            assert_eq!(f.add(a, &f.neg(a)), f.zero());
            assert_eq!(f.sub(a, a), f.zero());
            if !f.is_zero(a) {
                assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
            } else {
                assert!(f.inv(a).is_none());
            }
            for b in &elems {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in elems.iter().step_by(3) {
                    let lhs = f.mul(a, &f.add(b, c));
                    let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                    assert_eq!(lhs, rhs);
                    assert_eq!(f.mul_add(a, b, c), f.add(&f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn prime_field_axioms() {
        for p in [3, 5, 7] {
            axioms(&PrimeField::new(p).unwrap());
        }
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn quadratic_field_axioms() {
        for p in [3, 5, 7] {
            let f = QuadraticField::new(p).unwrap();
            axioms(&f);
            assert_eq!(f.elements().unwrap().len(), p * p);
            let x = f.generator();
            // x lies outside F_p, so its order does not divide p - 1.
            assert_ne!(f.pow(&x, p as i64 - 1).unwrap(), f.one());
            assert_eq!(f.pow(&x, (p * p) as i64 - 1).unwrap(), f.one());
        }
        assert_eq!(QuadraticField::new(3).unwrap().modulus(), (0, 1));
    }

    #[test]
    fn rational_arithmetic() {
        let q = Rationals;
        let half = q.inv(&q.from_int(2)).unwrap();
        assert_eq!(q.add(&half, &half), q.one());
        assert_eq!(q.render(&half), "1/2");
        assert_eq!(q.pow(&q.from_int(2), -3).unwrap(), q.inv(&q.from_int(8)).unwrap());
    }

    #[test]
    fn random_is_seeded() {
        let f = PrimeField::new(5).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..10).map(|_| f.random(&mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draw(3), draw(3));
    }

    #[test]
    fn spec_validation() {
        assert!(FieldSpec::prime(4, 1).is_err());
        assert!(FieldSpec::new(FieldKind::Rationals, DeltaValue::Generator).is_err());
        assert!(FieldSpec::new(FieldKind::Quadratic(3), DeltaValue::Generator).is_ok());
        assert!(FieldSpec::prime(5, 10).unwrap().delta_is_zero());
    }
}
