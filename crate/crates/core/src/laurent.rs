//! Laurent polynomials in the parameter with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::rep::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    /// exponent -> nonzero coefficient
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `delta^k`.
    pub fn shift(&self, k: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, c: i64) -> Laurent {
        let mut out = Laurent::zero();
        for (e, x) in self.terms() {
            out.add_term(e, x * c);
        }
        out
    }

    /// Value at `delta`; `None` if a negative power meets a non-invertible
    /// `delta`.
    pub fn evaluate<F: Field>(&self, f: &F, delta: &F::Elem) -> Option<F::Elem> {
        let mut acc = f.zero();
        for (e, c) in self.terms() {
            let term = f.mul(&f.from_int(c), &f.pow(delta, e)?);
            acc = f.add(&acc, &term);
        }
        Some(acc)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, &c)| match (c, e) {
                (c, 0) => c.to_string(),
                (1, e) => format!("δ^{e}"),
                (-1, e) => format!("-δ^{e}"),
                (c, e) => format!("{c}δ^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::field::PrimeField;

    #[test]
    fn arithmetic() {
        let a = Laurent::monomial(2, -1).add(&Laurent::one());
        let b = Laurent::monomial(1, 1);
        assert_eq!(a.mul(&b), Laurent::monomial(2, 0).add(&Laurent::monomial(1, 1)));
        assert!(a.add(&a.scale(-1)).is_zero());
    }

    #[test]
    fn evaluation() {
        let f = PrimeField::new(5).unwrap();
        let a = Laurent::monomial(1, -1);
        assert_eq!(a.evaluate(&f, &2), Some(3));
        assert_eq!(a.evaluate(&f, &0), None);
        assert_eq!(Laurent::monomial(1, 1).to_string(), "δ^1");
    }
}
