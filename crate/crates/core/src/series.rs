//! Truncated formal power series in one variable over exact rationals.
//!
//! A series represents a coset modulo `t^T`: coefficients are known exactly
//! below the truncation order `T` and unknown from `T` on. Arithmetic keeps
//! that promise conservative:
//!
//! * addition truncates to `min(T_a, T_b)`;
//! * multiplication truncates to `min(T_a + v_b, T_b + v_a)`, where `v` is
//!   the smallest exponent that could carry a nonzero coefficient (the
//!   smallest stored exponent, or `T` itself when nothing is stored).
//!
//! A series with no stored terms is indistinguishable from zero up to its
//! truncation; asking for its valuation is an error carrying `T`, which
//! tells the caller to retry with more known terms rather than silently
//! returning a wrong order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(
        "series vanishes up to its truncation order {trunc}; \
         raise the truncation to expose the valuation"
    )]
    TruncationExceeded { trunc: u32 },
}

/// Exact coefficients below `trunc`, nothing stored at or above it, and no
/// zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<u32, Rat>,
    trunc: u32,
}

impl TruncatedSeries {
    pub fn zero(trunc: u32) -> Self {
        assert!(trunc >= 1, "truncation order must be at least 1");
        TruncatedSeries {
            terms: BTreeMap::new(),
            trunc,
        }
    }

    /// The constant series 1, exact to every order.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, Rat::from_integer(1.into()));
        TruncatedSeries {
            terms,
            trunc: u32::MAX,
        }
    }

    /// `coeff * t^exponent` known modulo `t^trunc`.
    pub fn monomial(coeff: Rat, exponent: u32, trunc: u32) -> Self {
        let mut s = Self::zero(trunc);
        if exponent < trunc && !coeff.is_zero() {
            s.terms.insert(exponent, coeff);
        }
        s
    }

    /// Build from (exponent, coefficient) pairs. Zero coefficients and
    /// terms at or beyond the truncation are dropped; repeated exponents
    /// accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Rat)>, trunc: u32) -> Self {
        let mut s = Self::zero(trunc);
        for (e, c) in terms {
            if e >= trunc || c.is_zero() {
                continue;
            }
            let entry = s.terms.entry(e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                s.terms.remove(&e);
            }
        }
        s
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    /// Stored (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^exponent` if it is within the known range.
    pub fn known_coeff(&self, exponent: u32) -> Option<Rat> {
        (exponent < self.trunc)
            .then(|| self.terms.get(&exponent).cloned().unwrap_or_else(Rat::zero))
    }

    /// Smallest exponent with a nonzero coefficient. Errors when the series
    /// vanishes up to its truncation, reporting the truncation order.
    pub fn valuation(&self) -> Result<u32, SeriesError> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(SeriesError::TruncationExceeded { trunc: self.trunc })
    }

    /// Smallest exponent that could carry a nonzero coefficient: the exact
    /// valuation when a term is stored, otherwise the truncation order.
    pub fn valuation_floor(&self) -> u32 {
        self.terms.keys().next().copied().unwrap_or(self.trunc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut terms = BTreeMap::new();
        for (&e, c) in self.terms.iter().chain(&other.terms) {
            if e >= trunc {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c: &mut Rat| !c.is_zero());
        TruncatedSeries { terms, trunc }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, scalar: &Rat) -> Self {
        if scalar.is_zero() {
            return Self::zero(self.trunc);
        }
        TruncatedSeries {
            terms: self.terms.iter().map(|(&e, c)| (e, c * scalar)).collect(),
            trunc: self.trunc,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = (self.trunc.saturating_add(other.valuation_floor()))
            .min(other.trunc.saturating_add(self.valuation_floor()));
        let mut terms: BTreeMap<u32, Rat> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                let e = ea.saturating_add(eb);
                if e >= trunc {
                    break; // exponents ascend, the rest of this row is out
                }
                let entry = terms.entry(e).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c: &mut Rat| !c.is_zero());
        TruncatedSeries { terms, trunc }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exponent {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when both series agree on every coefficient below the smaller
    /// of the two truncations.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let trunc = self.trunc.min(other.trunc);
        let below = |s: &Self| {
            s.terms
                .iter()
                .filter(move |(&e, _)| e < trunc)
                .map(|(&e, c)| (e, c.clone()))
                .collect::<BTreeMap<u32, Rat>>()
        };
        below(self) == below(other)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                write!(f, "{c}")?;
            } else if c >= &Rat::zero() {
                write!(f, " + {c}")?;
            } else {
                write!(f, " - {}", -c)?;
            }
            match e {
                0 => {}
                1 => write!(f, "*t")?,
                _ => write!(f, "*t^{e}")?,
            }
        }
        if self.trunc == u32::MAX {
            if self.terms.is_empty() {
                write!(f, "0")?;
            }
            Ok(())
        } else {
            if !self.terms.is_empty() {
                write!(f, " + ")?;
            }
            write!(f, "O(t^{})", self.trunc)
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}
