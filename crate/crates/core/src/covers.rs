//! Multiple-cover contribution formulas and the instanton-number inversion.
//!
//! The degree-n genus-g cover coefficient of a rigid rational curve is
//! `1/n^3` at genus 0 and `|B_{2g}| n^{2g-3} / (2g (2g-2)!)` at genus
//! `g >= 1`; the genus-0 case is a separate branch because `(2g-2)!` is
//! undefined there. On top of that coefficient:
//!
//! * a smoothly embedded contractable curve with multiplicities `k_1..k_l`
//!   contributes `sum_{n|d} k_{d/n} c_g(n)` in degree `d`
//!   ([`embedded_contribution`]);
//! * a one-nodal rational curve contributes `sum_{n|d} 1/n^3` at genus 0
//!   ([`nodal_contribution`]); the genus-g analogue
//!   `sum_{n|d} (c_g(n) + delta_{1,g}/n)` is conjectural and must be
//!   labeled as such in any report ([`nodal_contribution_conjectural`]);
//! * a generic contractable chain contributes `c_g(d)` when every component
//!   degree equals `d` and zero otherwise ([`chain_contribution`]).
//!
//! Gromov-Witten tables and instanton tables on a single curve ray are
//! related degreewise by `N_d = sum_{m|d} n_{d/m} / m^3`; [`forward_gw`]
//! evaluates that divisor sum and [`invert_instanton`] solves it
//! recursively, flagging non-integral entries.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

use crate::bernoulli::bernoulli;
use crate::rational::{rat_int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoversError {
    #[error("table is missing degree {0}; degrees must be dense 1..=D")]
    MissingDegree(u64),
    #[error("multiplicity vector has {0} entries; the length is at most 6")]
    TooManyMultiplicities(usize),
    #[error("multiplicity vector must have at least one entry")]
    EmptyMultiplicities,
    #[error("degree 0 is not allowed; degrees start at 1")]
    DegreeZero,
}

/// Divisors of `d` in ascending order.
pub fn divisors(d: u64) -> Vec<u64> {
    assert!(d >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= d {
        if d.is_multiple_of(k) {
            small.push(k);
            if k * k != d {
                large.push(d / k);
            }
        }
        k += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Contribution of a degree-`degree` genus-`genus` cover of a rigid
/// rational curve: `1/n^3` at genus 0, `|B_{2g}| n^{2g-3} / (2g (2g-2)!)`
/// at genus g >= 1.
pub fn cover_coeff(genus: u32, degree: u64) -> Rat {
    assert!(degree >= 1, "cover degree must be positive");
    let n = rat_int(degree as i64);
    if genus == 0 {
        return n.pow(-3);
    }
    let g = genus as u64;
    let mut factorial = BigInt::one();
    for j in 2..=(2 * g - 2) {
        factorial *= BigInt::from(j);
    }
    let numerator = bernoulli(2 * genus).abs() * n.pow(2 * genus as i32 - 3);
    numerator / Rat::from_integer(BigInt::from(2 * g) * factorial)
}

/// Hilbert-scheme multiplicities `k_1..k_l` of the thickened curves; the
/// length `l` is at most 6 and `k_i = 0` for `i > l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    k: Vec<u64>,
}

impl MultiplicityVector {
    pub const MAX_LEN: usize = 6;

    pub fn new(k: Vec<u64>) -> Result<Self, CoversError> {
        if k.is_empty() {
            return Err(CoversError::EmptyMultiplicities);
        }
        if k.len() > Self::MAX_LEN {
            return Err(CoversError::TooManyMultiplicities(k.len()));
        }
        Ok(MultiplicityVector { k })
    }

    pub fn entries(&self) -> &[u64] {
        &self.k
    }

    /// `k_i`, with the convention that entries beyond the stored length
    /// are zero.
    pub fn get(&self, i: u64) -> u64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| i.checked_sub(1))
            .and_then(|i| self.k.get(i).copied())
            .unwrap_or(0)
    }
}

/// Degree-d contribution of an embedded contractable curve with
/// multiplicities `k`: `sum_{n|d} k_{d/n} * c_g(n)`.
pub fn embedded_contribution(genus: u32, degree: u64, k: &MultiplicityVector) -> Rat {
    divisors(degree)
        .into_iter()
        .map(|n| {
            let multiplicity = k.get(degree / n);
            if multiplicity == 0 {
                Rat::zero()
            } else {
                rat_int(multiplicity as i64) * cover_coeff(genus, n)
            }
        })
        .sum()
}

/// Genus-0 degree-d contribution of a one-nodal rational curve:
/// `sum_{n|d} 1/n^3`.
pub fn nodal_contribution(degree: u64) -> Rat {
    divisors(degree)
        .into_iter()
        .map(|n| cover_coeff(0, n))
        .sum()
}

/// Conjectural genus-g analogue for a one-nodal curve:
/// `sum_{n|d} (c_g(n) + delta_{1,g}/n)`. Callers must label the output as
/// conjectural.
pub fn nodal_contribution_conjectural(genus: u32, degree: u64) -> Rat {
    divisors(degree)
        .into_iter()
        .map(|n| {
            let mut term = cover_coeff(genus, n);
            if genus == 1 {
                term += rat_int(n as i64).pow(-1);
            }
            term
        })
        .sum()
}

/// Contribution of a generic contractable chain in the class with component
/// degrees `degrees`: `c_g(d)` when all degrees equal `d`, zero otherwise.
pub fn chain_contribution(genus: u32, degrees: &[u64]) -> Rat {
    assert!(!degrees.is_empty(), "chain needs at least one component");
    let d = degrees[0];
    if degrees.iter().all(|&x| x == d) {
        cover_coeff(genus, d)
    } else {
        Rat::zero()
    }
}

/// Genus-0 Gromov-Witten invariants `N_1..N_D` along a single curve ray,
/// dense by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwTable {
    values: Vec<Rat>,
}

/// Instanton numbers `n_1..n_D` along a single curve ray, dense by
/// construction. Integrality is a per-degree observation, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantonTable {
    values: Vec<Rat>,
}

fn dense_from_entries(
    entries: impl IntoIterator<Item = (u64, Rat)>,
) -> Result<Vec<Rat>, CoversError> {
    let mut map: std::collections::BTreeMap<u64, Rat> = entries.into_iter().collect();
    if map.contains_key(&0) {
        return Err(CoversError::DegreeZero);
    }
    let max = map.keys().next_back().copied().unwrap_or(0);
    let mut values = Vec::with_capacity(max as usize);
    for d in 1..=max {
        match map.remove(&d) {
            Some(v) => values.push(v),
            None => return Err(CoversError::MissingDegree(d)),
        }
    }
    Ok(values)
}

macro_rules! table_impl {
    ($name:ident) => {
        impl $name {
            /// Build from (degree, value) entries; degrees must be exactly
            /// `1..=D` with no gaps.
            pub fn from_entries(
                entries: impl IntoIterator<Item = (u64, Rat)>,
            ) -> Result<Self, CoversError> {
                Ok($name {
                    values: dense_from_entries(entries)?,
                })
            }

            pub fn from_fn(max_degree: u64, f: impl FnMut(u64) -> Rat) -> Self {
                $name {
                    values: (1..=max_degree).map(f).collect(),
                }
            }

            pub fn max_degree(&self) -> u64 {
                self.values.len() as u64
            }

            pub fn get(&self, degree: u64) -> Option<&Rat> {
                degree
                    .checked_sub(1)
                    .and_then(|i| self.values.get(i as usize))
            }

            pub fn entries(&self) -> impl Iterator<Item = (u64, &Rat)> {
                self.values
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i as u64 + 1, v))
            }
        }
    };
}

table_impl!(GwTable);
table_impl!(InstantonTable);

impl InstantonTable {
    pub fn is_integral(&self, degree: u64) -> Option<bool> {
        self.get(degree).map(|v| v.is_integer())
    }

    pub fn all_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn non_integral_degrees(&self) -> Vec<u64> {
        self.entries()
            .filter(|(_, v)| !v.is_integer())
            .map(|(d, _)| d)
            .collect()
    }
}

/// One degree of the forward divisor sum: `N_d = sum_{m|d} n_{d/m} / m^3`.
/// Requires `d <= instantons.max_degree()`.
pub fn gw_from_instantons_at(instantons: &InstantonTable, degree: u64) -> Rat {
    divisors(degree)
        .into_iter()
        .map(|m| {
            let n = instantons
                .get(degree / m)
                .expect("degree within table range");
            n * cover_coeff(0, m)
        })
        .sum()
}

/// Evaluate the forward divisor sum for every degree up to `max_degree`.
pub fn forward_gw(instantons: &InstantonTable, max_degree: u64) -> Result<GwTable, CoversError> {
    if max_degree > instantons.max_degree() {
        return Err(CoversError::MissingDegree(instantons.max_degree() + 1));
    }
    let degrees: Vec<u64> = (1..=max_degree).collect();
    let values = crate::batch::map_slice(&degrees, |&d| gw_from_instantons_at(instantons, d));
    Ok(GwTable { values })
}

/// Solve `N_d = sum_{m|d} n_{d/m} / m^3` for the instanton numbers:
/// `n_d = N_d - sum_{m|d, m>1} n_{d/m} / m^3`, ascending in `d`. This is
/// the unique table with `forward_gw(result, D) == gw`.
pub fn invert_instanton(gw: &GwTable) -> InstantonTable {
    let mut values: Vec<Rat> = Vec::with_capacity(gw.values.len());
    for d in 1..=gw.max_degree() {
        let mut n = gw.get(d).expect("dense table").clone();
        for m in divisors(d) {
            if m > 1 {
                n -= &values[(d / m - 1) as usize] * cover_coeff(0, m);
            }
        }
        values.push(n);
    }
    InstantonTable { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn cover_coeff_examples() {
        assert_eq!(cover_coeff(0, 2), rat(1, 8));
        assert_eq!(cover_coeff(0, 1), rat(1, 1));
        assert_eq!(cover_coeff(1, 1), rat(1, 12));
        assert_eq!(cover_coeff(1, 3), rat(1, 36));
        // genus 2 at degree 1: |B_4| / (4 * 2!)
        assert_eq!(cover_coeff(2, 1), rat(1, 240));
    }

    #[test]
    fn cover_coeff_is_positive_at_degree_one() {
        for genus in 1..=8 {
            assert!(cover_coeff(genus, 1) > Rat::zero(), "genus {genus}");
        }
    }

    #[test]
    fn embedded_contribution_examples() {
        let k = MultiplicityVector::new(vec![4, 1]).unwrap();
        assert_eq!(embedded_contribution(0, 2, &k), rat(3, 2));
        let k1 = MultiplicityVector::new(vec![1]).unwrap();
        assert_eq!(embedded_contribution(0, 3, &k1), rat(1, 27));
        for d in 1..=12 {
            assert_eq!(
                embedded_contribution(0, d, &k1),
                rat(1, (d * d * d) as i64),
                "degree {d}"
            );
        }
    }

    #[test]
    fn embedded_contribution_is_linear_in_k() {
        let a = MultiplicityVector::new(vec![2, 0, 5]).unwrap();
        let b = MultiplicityVector::new(vec![1, 3, 0, 7]).unwrap();
        let sum = MultiplicityVector::new(vec![3, 3, 5, 7]).unwrap();
        for d in 1..=16 {
            assert_eq!(
                embedded_contribution(1, d, &a) + embedded_contribution(1, d, &b),
                embedded_contribution(1, d, &sum)
            );
        }
    }

    #[test]
    fn multiplicity_vector_bounds() {
        assert!(matches!(
            MultiplicityVector::new(vec![]),
            Err(CoversError::EmptyMultiplicities)
        ));
        assert!(matches!(
            MultiplicityVector::new(vec![1; 7]),
            Err(CoversError::TooManyMultiplicities(7))
        ));
        let k = MultiplicityVector::new(vec![1, 2]).unwrap();
        assert_eq!(k.get(0), 0);
        assert_eq!(k.get(2), 2);
        assert_eq!(k.get(3), 0);
    }

    #[test]
    fn nodal_contribution_examples() {
        assert_eq!(nodal_contribution(1), rat(1, 1));
        assert_eq!(nodal_contribution(4), rat(73, 64));
        assert_eq!(
            nodal_contribution(6),
            rat(1, 1) + rat(1, 8) + rat(1, 27) + rat(1, 216)
        );
    }

    #[test]
    fn conjectural_nodal_contribution() {
        for d in 1..=20 {
            assert_eq!(nodal_contribution_conjectural(0, d), nodal_contribution(d));
        }
        assert_eq!(nodal_contribution_conjectural(1, 2), rat(13, 8));
        assert_eq!(nodal_contribution_conjectural(2, 1), rat(1, 240));
    }

    #[test]
    fn chain_contribution_examples() {
        assert_eq!(chain_contribution(0, &[2, 2, 2]), rat(1, 8));
        assert_eq!(chain_contribution(0, &[1, 2]), Rat::zero());
        assert_eq!(chain_contribution(1, &[3, 3]), rat(1, 36));
        assert_eq!(chain_contribution(0, &[5]), cover_coeff(0, 5));
    }

    #[test]
    fn forward_of_all_ones() {
        let ones = InstantonTable::from_fn(4, |_| rat(1, 1));
        let gw = forward_gw(&ones, 4).unwrap();
        let values: Vec<Rat> = gw.entries().map(|(_, v)| v.clone()).collect();
        assert_eq!(values, vec![rat(1, 1), rat(9, 8), rat(28, 27), rat(73, 64)]);
    }

    #[test]
    fn forward_scales_a_single_class() {
        let n = InstantonTable::from_entries(
            (1..=6).map(|d| (d, if d == 1 { rat(5, 1) } else { Rat::zero() })),
        )
        .unwrap();
        let gw = forward_gw(&n, 6).unwrap();
        for (d, value) in gw.entries() {
            assert_eq!(value, &rat(5, (d * d * d) as i64));
        }
    }

    #[test]
    fn forward_of_zero_is_zero() {
        let zero = InstantonTable::from_fn(8, |_| Rat::zero());
        let gw = forward_gw(&zero, 8).unwrap();
        assert!(gw.entries().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn forward_demands_enough_degrees() {
        let ones = InstantonTable::from_fn(3, |_| rat(1, 1));
        assert_eq!(
            forward_gw(&ones, 5),
            Err(CoversError::MissingDegree(4))
        );
    }

    #[test]
    fn inversion_examples() {
        let gw = GwTable::from_entries([(1, rat(1, 1)), (2, rat(9, 8))]).unwrap();
        let n = invert_instanton(&gw);
        assert_eq!(n.get(1), Some(&rat(1, 1)));
        assert_eq!(n.get(2), Some(&rat(1, 1)));
        assert!(n.all_integral());

        let gw = GwTable::from_entries([(1, rat(1, 1)), (2, rat(1, 1))]).unwrap();
        let n = invert_instanton(&gw);
        assert_eq!(n.get(2), Some(&rat(7, 8)));
        assert_eq!(n.is_integral(2), Some(false));
        assert_eq!(n.non_integral_degrees(), vec![2]);
        assert!(!n.all_integral());
    }

    #[test]
    fn inverting_the_nodal_table_gives_all_ones() {
        let gw = GwTable::from_fn(32, nodal_contribution);
        let n = invert_instanton(&gw);
        assert!(n.entries().all(|(_, v)| v == &rat(1, 1)));
    }

    #[test]
    fn dense_table_construction_rejects_gaps() {
        let err = GwTable::from_entries([(1, rat(1, 1)), (3, rat(1, 27))]);
        assert_eq!(err, Err(CoversError::MissingDegree(2)));
        let err = GwTable::from_entries([(0, rat(1, 1)), (1, rat(1, 1))]);
        assert_eq!(err, Err(CoversError::DegreeZero));
    }
}
