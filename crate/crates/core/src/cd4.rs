//! The explicit length-two computation: arcs into the four-dimensional
//! partial-resolution space and the multiplicities k1, k2.
//!
//! In the good coordinate system x1..x4, the two curve-carrying
//! discriminant components are
//!
//! ```text
//! D2 = { x1 = 0 }
//! D1 = { (x2^2 + x2*x3 + x4^2)^2
//!        + x1^2 (x1^2 x4^2 - 4 x2 x4^2 - x3 x4^2 - x3 x2^2) = 0 }
//! ```
//!
//! An arc is a map t -> (x1(t), ..., x4(t)) with every coordinate vanishing
//! at t = 0. Smoothness of the threefold forces x2, x3, x4 to vanish to
//! order exactly one; then k2 is the vanishing order of x1, and k1 is the
//! vanishing order of the D1 equation along the arc. Writing c_i for the
//! t-coefficient of x_i, the arc is generic when (c2, c3, c4) misses the
//! conic x2^2 + x2*x3 + x4^2 = 0, and then k1 = 4 (the equation of D1
//! starts in total degree four). Off the generic locus the reported k1 is
//! the raw vanishing order, not a certified multiplicity.
//!
//! The transversality diagnostic restricts the threefold equation factor
//! F(z, t) = ((z - x2)^2 + x1^2 z)(z^2 + x3 z + x4^2) along z = x2(t),
//! which collapses to x1^2 x2 (x2^2 + x2 x3 + x4^2); both routes are
//! evaluated and compared, and the common vanishing order is checked
//! against 2*k2 + 3, with equality exactly in the generic case.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::covers::{embedded_contribution, MultiplicityVector};
use crate::poly::SparsePoly;
use crate::rational::Rat;
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("arc coordinates must share one truncation order")]
    MixedTruncation,
    #[error("x{coordinate} has a nonzero constant term; arc coordinates vanish at t = 0")]
    NonzeroConstantTerm { coordinate: usize },
    #[error("arc is not smooth: x2, x3 and x4 must vanish to order exactly one")]
    NotSmooth,
    #[error(
        "restricting the threefold equation along z = x2(t) disagrees with the expanded \
         product; this is a bug"
    )]
    IdentityMismatch,
}

/// An arc t -> (x1(t), x2(t), x3(t), x4(t)) with a common truncation order
/// and all coordinates vanishing at t = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcMap {
    coords: [TruncatedSeries; 4],
}

impl ArcMap {
    pub fn new(
        x1: TruncatedSeries,
        x2: TruncatedSeries,
        x3: TruncatedSeries,
        x4: TruncatedSeries,
    ) -> Result<Self, ArcError> {
        let coords = [x1, x2, x3, x4];
        let trunc = coords[0].truncation();
        if coords.iter().any(|s| s.truncation() != trunc) {
            return Err(ArcError::MixedTruncation);
        }
        for (i, s) in coords.iter().enumerate() {
            if let Some(c) = s.known_coeff(0) {
                if !c.is_zero() {
                    return Err(ArcError::NonzeroConstantTerm { coordinate: i + 1 });
                }
            }
        }
        Ok(ArcMap { coords })
    }

    pub fn truncation(&self) -> u32 {
        self.coords[0].truncation()
    }

    /// Coordinate series, 1-based: `coord(1)` is x1.
    pub fn coord(&self, i: usize) -> &TruncatedSeries {
        &self.coords[i - 1]
    }

    pub fn coords(&self) -> &[TruncatedSeries; 4] {
        &self.coords
    }
}

/// Defining polynomial of D1:
/// `(x2^2 + x2 x3 + x4^2)^2 + x1^2 (x1^2 x4^2 - 4 x2 x4^2 - x3 x4^2 - x3 x2^2)`.
pub fn d1_poly() -> SparsePoly {
    let conic = conic_poly();
    let bracket = SparsePoly::imonomial([2, 0, 0, 2], 1)
        .add(&SparsePoly::imonomial([0, 1, 0, 2], -4))
        .add(&SparsePoly::imonomial([0, 0, 1, 2], -1))
        .add(&SparsePoly::imonomial([0, 2, 1, 0], -1));
    conic
        .mul(&conic)
        .add(&SparsePoly::imonomial([2, 0, 0, 0], 1).mul(&bracket))
}

/// The conic `x2^2 + x2 x3 + x4^2` cutting out the non-generic directions.
pub fn conic_poly() -> SparsePoly {
    SparsePoly::imonomial([0, 2, 0, 0], 1)
        .add(&SparsePoly::imonomial([0, 1, 1, 0], 1))
        .add(&SparsePoly::imonomial([0, 0, 0, 2], 1))
}

/// Evaluate `p` along the arc.
pub fn substitute(p: &SparsePoly, arc: &ArcMap) -> TruncatedSeries {
    p.substitute(arc.coords())
}

/// Vanishing order of one coordinate when it is decidable: exact order, or
/// a floor when the series vanishes up to its truncation.
fn order_of(series: &TruncatedSeries) -> Result<u32, u32> {
    series.valuation().map_err(|_| series.truncation())
}

/// True iff x2, x3 and x4 all vanish to order exactly one. An undecidable
/// coordinate (zero up to a truncation of 1) raises `TruncationExceeded`.
pub fn smoothness_check(arc: &ArcMap) -> Result<bool, ArcError> {
    for i in 2..=4 {
        match order_of(arc.coord(i)) {
            Ok(order) => {
                if order != 1 {
                    return Ok(false);
                }
            }
            Err(floor) if floor > 1 => return Ok(false),
            Err(floor) => {
                return Err(SeriesError::TruncationExceeded { trunc: floor }.into());
            }
        }
    }
    Ok(true)
}

fn require_smooth(arc: &ArcMap) -> Result<(), ArcError> {
    if smoothness_check(arc)? {
        Ok(())
    } else {
        Err(ArcError::NotSmooth)
    }
}

/// Value of `c2^2 + c2 c3 + c4^2` on the t-coefficients of a smooth arc.
/// Nonzero exactly when the arc is generic.
pub fn conic_value(arc: &ArcMap) -> Result<Rat, ArcError> {
    require_smooth(arc)?;
    let c = |i: usize| arc.coord(i).known_coeff(1).expect("truncation > 1");
    let (c2, c3, c4) = (c(2), c(3), c(4));
    Ok(&c2 * &c2 + c2 * c3 + &c4 * &c4)
}

/// k2: the vanishing order of x1 along a smooth arc.
pub fn compute_k2(arc: &ArcMap) -> Result<u32, ArcError> {
    require_smooth(arc)?;
    Ok(arc.coord(1).valuation()?)
}

/// k1 in the generic case: the vanishing order of the D1 equation along a
/// smooth arc; at least 4 for every smooth arc.
pub fn compute_k1(arc: &ArcMap) -> Result<u32, ArcError> {
    require_smooth(arc)?;
    let order = substitute(&d1_poly(), arc).valuation()?;
    debug_assert!(order >= 4);
    Ok(order)
}

/// A vanishing order that is either known exactly or only bounded below
/// (the series vanished up to the stated order).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationBound {
    Exact(u32),
    AtLeast(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversality {
    /// Vanishing order of `x1^2 x2 (x2^2 + x2 x3 + x4^2)` along the arc.
    pub valuation: ValuationBound,
    /// `2 k2 + 3`; the valuation never falls below this.
    pub required: u32,
    /// True exactly when the valuation equals `required`.
    pub transverse: bool,
}

/// Restrict the threefold equation along z = x2(t) and measure its
/// vanishing order against `2 k2 + 3`. The restriction is computed twice,
/// from the expanded product `x1^2 x2 (x2^2 + x2 x3 + x4^2)` and from the
/// factored form of F(z, t) with z = x2(t) substituted by series
/// arithmetic; any disagreement is reported as [`ArcError::IdentityMismatch`].
pub fn transversality_check(arc: &ArcMap) -> Result<Transversality, ArcError> {
    let k2 = compute_k2(arc)?;
    let required = 2 * k2 + 3;

    let expanded_poly = SparsePoly::imonomial([2, 1, 0, 0], 1).mul(&conic_poly());
    let direct = substitute(&expanded_poly, arc);

    let z = arc.coord(2);
    let (x1, x3, x4) = (arc.coord(1), arc.coord(3), arc.coord(4));
    let shifted = z.sub(arc.coord(2));
    let first_factor = shifted.mul(&shifted).add(&x1.mul(x1).mul(z));
    let second_factor = z.mul(z).add(&x3.mul(z)).add(&x4.mul(x4));
    let factored = first_factor.mul(&second_factor);

    if !direct.agrees_with(&factored) {
        return Err(ArcError::IdentityMismatch);
    }

    match direct.valuation() {
        Ok(order) => {
            debug_assert!(order >= required);
            Ok(Transversality {
                valuation: ValuationBound::Exact(order),
                required,
                transverse: order == required,
            })
        }
        Err(SeriesError::TruncationExceeded { trunc }) if trunc > required => Ok(Transversality {
            valuation: ValuationBound::AtLeast(trunc),
            required,
            transverse: false,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Everything the length-two computation yields for one arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cd4Report {
    pub truncation: u32,
    pub k2: u32,
    /// Exact in the generic case (where it is always 4); otherwise the raw
    /// vanishing order of the D1 equation, possibly only bounded below.
    pub k1: ValuationBound,
    pub conic_value: Rat,
    pub generic: bool,
    pub smooth: bool,
    pub transversality: Transversality,
    pub genus: u32,
    /// Degree -> contribution with multiplicities [k1, k2]; present only in
    /// the generic case where k1 is certified.
    pub contributions: Option<BTreeMap<u64, Rat>>,
    pub caveat: Option<String>,
}

/// Assemble the full report: k2, k1, the conic value and genericity flag,
/// the transversality diagnostic, and (in the generic case) the
/// contribution table for degrees 1..=max_degree at the given genus.
pub fn cd4_report(arc: &ArcMap, genus: u32, max_degree: u64) -> Result<Cd4Report, ArcError> {
    require_smooth(arc)?;
    let k2 = compute_k2(arc)?;
    let conic = conic_value(arc)?;
    let generic = !conic.is_zero();
    let d1_series = substitute(&d1_poly(), arc);
    let k1 = match d1_series.valuation() {
        Ok(order) => ValuationBound::Exact(order),
        Err(SeriesError::TruncationExceeded { trunc }) => ValuationBound::AtLeast(trunc),
    };
    let transversality = transversality_check(arc)?;

    let (contributions, caveat) = if generic {
        let k1_exact = match k1 {
            ValuationBound::Exact(v) => v,
            ValuationBound::AtLeast(_) => unreachable!("generic arcs have exact k1"),
        };
        debug_assert_eq!(k1_exact, 4);
        let k = MultiplicityVector::new(vec![k1_exact as u64, k2 as u64])
            .expect("two multiplicities");
        let table = (1..=max_degree)
            .map(|d| (d, embedded_contribution(genus, d, &k)))
            .collect();
        (Some(table), None)
    } else {
        (
            None,
            Some(
                "non-generic arc: the conic value vanishes, so k1 is reported as the raw \
                 vanishing order of the D1 equation, not a certified multiplicity; \
                 contributions omitted"
                    .to_string(),
            ),
        )
    };

    Ok(Cd4Report {
        truncation: arc.truncation(),
        k2,
        k1,
        conic_value: conic,
        generic,
        smooth: true,
        transversality,
        genus,
        contributions,
        caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn monomial_arc(powers: [u32; 4], trunc: u32) -> ArcMap {
        let [a, b, c, d] = powers;
        ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), a, trunc),
            TruncatedSeries::monomial(rat_int(1), b, trunc),
            TruncatedSeries::monomial(rat_int(1), c, trunc),
            TruncatedSeries::monomial(rat_int(1), d, trunc),
        )
        .unwrap()
    }

    /// x1 = t^k, x2 = t, x3 = -2t, x4 = t: smooth but on the conic.
    fn conic_arc(k: u32, trunc: u32) -> ArcMap {
        ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), k, trunc),
            TruncatedSeries::monomial(rat_int(1), 1, trunc),
            TruncatedSeries::monomial(rat_int(-2), 1, trunc),
            TruncatedSeries::monomial(rat_int(1), 1, trunc),
        )
        .unwrap()
    }

    #[test]
    fn d1_poly_coefficients() {
        let p = d1_poly();
        assert_eq!(p.coefficient(&[0, 4, 0, 0]), rat_int(1));
        assert_eq!(p.coefficient(&[2, 1, 0, 2]), rat_int(-4));
        assert_eq!(p.coefficient(&[4, 0, 0, 2]), rat_int(1));
        assert_eq!(p.coefficient(&[2, 0, 1, 2]), rat_int(-1));
        assert_eq!(p.coefficient(&[2, 2, 1, 0]), rat_int(-1));
        assert_eq!(p.total_degrees(), vec![4, 5, 6]);
        assert_eq!(p.homogeneous_part(4), conic_poly().mul(&conic_poly()));
        // six monomials from the squared conic plus the four bracket terms
        assert_eq!(p.terms().count(), 10);
    }

    #[test]
    fn substitution_example_from_d1() {
        let arc = monomial_arc([2, 1, 1, 1], 16);
        let series = substitute(&d1_poly(), &arc);
        let expected = TruncatedSeries::from_terms(
            [(4, rat_int(9)), (7, rat_int(-6)), (10, rat_int(1))],
            series.truncation(),
        );
        assert_eq!(series, expected);
    }

    #[test]
    fn smoothness_examples() {
        assert!(smoothness_check(&monomial_arc([2, 1, 1, 1], 16)).unwrap());
        assert!(!smoothness_check(&monomial_arc([1, 2, 1, 1], 16)).unwrap());
        let wiggly = ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::from_terms([(1, rat_int(2)), (3, rat_int(1))], 16),
        )
        .unwrap();
        assert!(smoothness_check(&wiggly).unwrap());
        // an all-zero coordinate is decidably not order one
        let flat = ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::zero(16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        )
        .unwrap();
        assert!(!smoothness_check(&flat).unwrap());
    }

    #[test]
    fn arc_construction_rejects_bad_input() {
        let err = ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 12),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        );
        assert_eq!(err.unwrap_err(), ArcError::MixedTruncation);
        let err = ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(3), 0, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        );
        assert_eq!(err.unwrap_err(), ArcError::NonzeroConstantTerm { coordinate: 2 });
    }

    #[test]
    fn k2_examples() {
        assert_eq!(compute_k2(&monomial_arc([2, 1, 1, 1], 16)).unwrap(), 2);
        assert_eq!(compute_k2(&monomial_arc([1, 1, 1, 1], 16)).unwrap(), 1);
        let cubic = ArcMap::new(
            TruncatedSeries::from_terms([(3, rat_int(1)), (4, rat_int(1))], 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(-2), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        )
        .unwrap();
        assert_eq!(compute_k2(&cubic).unwrap(), 3);
        assert_eq!(
            compute_k2(&monomial_arc([1, 2, 1, 1], 16)).unwrap_err(),
            ArcError::NotSmooth
        );
    }

    #[test]
    fn k1_examples() {
        assert_eq!(compute_k1(&monomial_arc([2, 1, 1, 1], 16)).unwrap(), 4);
        // on the conic the quartic part cancels and the order climbs to 6
        assert_eq!(compute_k1(&conic_arc(1, 16)).unwrap(), 6);
    }

    #[test]
    fn conic_value_examples() {
        assert_eq!(conic_value(&monomial_arc([2, 1, 1, 1], 16)).unwrap(), rat_int(3));
        assert_eq!(conic_value(&conic_arc(1, 16)).unwrap(), rat_int(0));
        let arc = ArcMap::new(
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(2), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        )
        .unwrap();
        assert_eq!(conic_value(&arc).unwrap(), rat_int(7));
    }

    #[test]
    fn transversality_examples() {
        let t = transversality_check(&monomial_arc([2, 1, 1, 1], 16)).unwrap();
        assert_eq!(t.valuation, ValuationBound::Exact(7));
        assert_eq!(t.required, 7);
        assert!(t.transverse);

        let t = transversality_check(&monomial_arc([1, 1, 1, 1], 16)).unwrap();
        assert_eq!(t.valuation, ValuationBound::Exact(5));
        assert!(t.transverse);

        // on the conic the restricted equation vanishes identically as far
        // as it is known, so only a floor is reported
        let t = transversality_check(&conic_arc(1, 16)).unwrap();
        match t.valuation {
            ValuationBound::AtLeast(floor) => assert!(floor > t.required),
            ValuationBound::Exact(v) => panic!("unexpected exact valuation {v}"),
        }
        assert!(!t.transverse);
    }

    #[test]
    fn report_for_the_generic_example_arc() {
        let report = cd4_report(&monomial_arc([2, 1, 1, 1], 16), 0, 2).unwrap();
        assert_eq!(report.k2, 2);
        assert_eq!(report.k1, ValuationBound::Exact(4));
        assert!(report.generic);
        assert!(report.smooth);
        assert!(report.caveat.is_none());
        let contributions = report.contributions.unwrap();
        assert_eq!(contributions[&1], rat_int(4));
        assert_eq!(contributions[&2], rat(5, 2));
    }

    #[test]
    fn report_for_a_degree_one_arc() {
        let report = cd4_report(&monomial_arc([1, 1, 1, 1], 16), 0, 1).unwrap();
        assert_eq!(report.k2, 1);
        assert_eq!(report.k1, ValuationBound::Exact(4));
        let contributions = report.contributions.unwrap();
        assert_eq!(contributions.len(), 1);
        assert_eq!(contributions[&1], rat_int(4));
    }

    #[test]
    fn report_for_a_non_generic_arc_suppresses_contributions() {
        let report = cd4_report(&conic_arc(1, 16), 0, 4).unwrap();
        assert!(!report.generic);
        assert_eq!(report.k1, ValuationBound::Exact(6));
        assert!(report.contributions.is_none());
        assert!(report.caveat.is_some());
    }

    #[test]
    fn k2_of_an_unknown_x1_asks_for_more_terms() {
        let arc = ArcMap::new(
            TruncatedSeries::zero(16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
            TruncatedSeries::monomial(rat_int(1), 1, 16),
        )
        .unwrap();
        assert_eq!(
            compute_k2(&arc).unwrap_err(),
            ArcError::Series(SeriesError::TruncationExceeded { trunc: 16 })
        );
    }
}
