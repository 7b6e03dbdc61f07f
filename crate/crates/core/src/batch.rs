//! Batched entry points over independent inputs.
//!
//! With the `parallel` feature (on by default) these fan out with rayon and
//! collect in input order; with the feature off they run the same
//! per-element functions in a plain loop. Either way the output is
//! identical, element for element.

use crate::cd4::{cd4_report, ArcError, ArcMap, Cd4Report};
use crate::cycle_bound::{verify_cycle_bound, CycleBoundCertificate};
use crate::diagram::MarkedDiagram;
use crate::orbits::{length_of, verify_marked_coeff_invariant, InvariantCheck};

#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Length-two reports for a batch of arcs, in input order.
pub fn cd4_reports(
    arcs: &[ArcMap],
    genus: u32,
    max_degree: u64,
) -> Vec<Result<Cd4Report, ArcError>> {
    map_slice(arcs, |arc| cd4_report(arc, genus, max_degree))
}

/// The marked-coefficient invariant check over all six contraction cases,
/// in the canonical order.
pub fn invariant_checks_all() -> Vec<(MarkedDiagram, InvariantCheck)> {
    let cases = MarkedDiagram::contraction_cases();
    map_slice(&cases, |diagram| {
        let check = verify_marked_coeff_invariant(diagram).expect("contraction case");
        (diagram.clone(), check)
    })
}

/// Cycle-bound certificates for all six contraction cases and every order
/// up to each case's length, flattened in canonical order.
pub fn cycle_bound_certificates_all() -> Vec<CycleBoundCertificate> {
    let jobs: Vec<(MarkedDiagram, i64)> = MarkedDiagram::contraction_cases()
        .into_iter()
        .flat_map(|diagram| {
            let length = length_of(&diagram).expect("contraction case");
            (1..=length).map(move |order| (diagram.clone(), order))
        })
        .collect();
    map_slice(&jobs, |(diagram, order)| {
        verify_cycle_bound(diagram, *order).expect("valid case and order")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::series::TruncatedSeries;

    #[test]
    fn batched_reports_match_single_calls() {
        let arcs: Vec<ArcMap> = (1..=4)
            .map(|k| {
                ArcMap::new(
                    TruncatedSeries::monomial(rat_int(1), k, 16),
                    TruncatedSeries::monomial(rat_int(1), 1, 16),
                    TruncatedSeries::monomial(rat_int(1), 1, 16),
                    TruncatedSeries::monomial(rat_int(1), 1, 16),
                )
                .unwrap()
            })
            .collect();
        let batched = cd4_reports(&arcs, 0, 4);
        for (arc, result) in arcs.iter().zip(&batched) {
            assert_eq!(result, &cd4_report(arc, 0, 4));
        }
    }

    #[test]
    fn all_six_invariant_checks_verify() {
        let checks = invariant_checks_all();
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(|(_, check)| check.is_verified()));
    }

    #[test]
    fn all_cycle_bound_certificates_pass() {
        let certificates = cycle_bound_certificates_all();
        // lengths 1 + 2 + 3 + 4 + 6 + 5 orders in total
        assert_eq!(certificates.len(), 21);
        assert!(certificates.iter().all(|c| c.all_pass()));
    }
}
