//! Sparse polynomials in the four coordinates x1..x4, with exact
//! coefficients. Substituting truncated series for the variables yields a
//! truncated series with the conservative bookkeeping of [`crate::series`].

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::{rat_int, Rat};
use crate::series::TruncatedSeries;

pub const NVARS: usize = 4;

/// Exponents of one monomial, indexed by variable (x1, x2, x3, x4).
pub type Exponents = [u32; NVARS];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Exponents, Rat>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn monomial(exponents: Exponents, coeff: Rat) -> Self {
        let mut p = SparsePoly::zero();
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// Convenience: integer-coefficient monomial.
    pub fn imonomial(exponents: Exponents, coeff: i64) -> Self {
        SparsePoly::monomial(exponents, rat_int(coeff))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, Rat)>) -> Self {
        let mut p = SparsePoly::zero();
        for (e, c) in terms {
            p.accumulate(e, c);
        }
        p
    }

    fn accumulate(&mut self, exponents: Exponents, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &Exponents) -> Rat {
        self.terms.get(exponents).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.accumulate(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.accumulate(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SparsePoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb) {
                    *x += y;
                }
                out.accumulate(e, ca * cb);
            }
        }
        out
    }

    /// Total degrees appearing in the support, ascending.
    pub fn total_degrees(&self) -> Vec<u32> {
        let mut degrees: Vec<u32> = self
            .terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
    }

    /// The sum of the terms with total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == degree)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at four truncated series: `p(s_1(t), ..., s_4(t))`. The
    /// result truncation is the minimum over the evaluated monomials, each
    /// following the product rule; the zero polynomial evaluates to an
    /// exact zero.
    pub fn substitute(&self, coords: &[TruncatedSeries; NVARS]) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(u32::MAX);
        for (exponents, coeff) in &self.terms {
            let mut term = TruncatedSeries::one();
            for (series, &power) in coords.iter().zip(exponents) {
                if power > 0 {
                    term = term.mul(&series.pow(power));
                }
            }
            acc = acc.add(&term.scalar_mul(coeff));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic_cancels_exactly() {
        let p = SparsePoly::imonomial([1, 0, 0, 0], 2).add(&SparsePoly::imonomial([0, 1, 0, 0], 3));
        let q = SparsePoly::imonomial([1, 0, 0, 0], -2);
        let sum = p.add(&q);
        assert_eq!(sum.coefficient(&[1, 0, 0, 0]), rat(0, 1));
        assert_eq!(sum.coefficient(&[0, 1, 0, 0]), rat(3, 1));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn product_of_binomials() {
        let p = SparsePoly::imonomial([1, 0, 0, 0], 1).add(&SparsePoly::imonomial([0, 1, 0, 0], 1));
        let sq = p.mul(&p);
        assert_eq!(sq.coefficient(&[2, 0, 0, 0]), rat(1, 1));
        assert_eq!(sq.coefficient(&[1, 1, 0, 0]), rat(2, 1));
        assert_eq!(sq.coefficient(&[0, 2, 0, 0]), rat(1, 1));
        assert_eq!(sq.total_degrees(), vec![2]);
    }

    #[test]
    fn substitution_of_a_single_variable() {
        use crate::rational::rat_int;
        let p = SparsePoly::imonomial([0, 1, 0, 0], 1);
        let t = TruncatedSeries::monomial(rat_int(1), 1, 16);
        let coords = [
            TruncatedSeries::zero(16),
            t.clone(),
            t.clone(),
            t.clone(),
        ];
        let s = p.substitute(&coords);
        assert_eq!(s.valuation(), Ok(1));
        assert_eq!(s.known_coeff(1), Some(rat_int(1)));
    }

    #[test]
    fn substitution_collects_like_terms() {
        use crate::rational::rat_int;
        // x2^2 + x2*x3 + x4^2 on (., t, t, t) gives 3 t^2
        let p = SparsePoly::imonomial([0, 2, 0, 0], 1)
            .add(&SparsePoly::imonomial([0, 1, 1, 0], 1))
            .add(&SparsePoly::imonomial([0, 0, 0, 2], 1));
        let t = TruncatedSeries::monomial(rat_int(1), 1, 16);
        let coords = [TruncatedSeries::zero(16), t.clone(), t.clone(), t];
        let s = p.substitute(&coords);
        assert_eq!(s.known_coeff(2), Some(rat_int(3)));
        assert_eq!(s.terms().count(), 1);
    }
}
