//! Orbit structure of the discriminant hyperplanes.
//!
//! The hyperplane perpendicular to a root is unchanged by negating the
//! root, so orbits are computed on `{v, -v}` pairs, each represented by its
//! positive member. The acting group is generated by the reflections in
//! the *unmarked* simple roots; those reflections never touch a marked
//! coordinate, so the magnitude of the coefficient at the first marked
//! vertex is constant on every orbit. Orbits with nonzero invariant model
//! the components of the discriminant that carry curves; orbits with
//! invariant zero model the components over which the surfaces are merely
//! singular.
//!
//! For the six contraction cases the nonzero invariant is *complete*: two
//! pairs with the same nonzero marked coefficient always lie in one orbit.
//! [`verify_marked_coeff_invariant`] checks both directions exhaustively.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::diagram::MarkedDiagram;
use crate::roots::{not_a_contraction_case, Root, RootSystem, RootSystemError};

/// One orbit of `{v, -v}` pairs; members are positive representatives in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub marked_coeff: i64,
    pub members: Vec<Root>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Orbits sorted by (marked coefficient, lexicographically smallest member).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbits_with_coeff(&self, value: i64) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter().filter(move |o| o.marked_coeff == value)
    }
}

/// Decompose the `{v, -v}` pairs of `rs` into orbits of the reflections in
/// the unmarked simple roots. When every vertex is marked the group is
/// trivial and every pair is its own orbit.
pub fn orbit_decomposition(rs: &RootSystem) -> OrbitDecomposition {
    let diagram = rs.diagram();
    let invariant_vertex = diagram.first_marked();
    let generators: Vec<usize> = (1..=rs.rank())
        .filter(|v| !diagram.is_marked(*v))
        .collect();

    let mut remaining: BTreeSet<Root> = rs.positive_roots().iter().cloned().collect();
    let mut orbits = Vec::new();
    while let Some(seed) = remaining.iter().next().cloned() {
        let mut members = BTreeSet::new();
        let mut queue = VecDeque::new();
        remaining.remove(&seed);
        members.insert(seed.clone());
        queue.push_back(seed);
        while let Some(v) = queue.pop_front() {
            for &g in &generators {
                let w = rs.reflect_unchecked(&v, g).pair_representative();
                if remaining.remove(&w) {
                    members.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        let members: Vec<Root> = members.into_iter().collect();
        orbits.push(Orbit {
            marked_coeff: members[0].coeff(invariant_vertex).abs(),
            members,
        });
    }
    orbits.sort_by(|a, b| {
        (a.marked_coeff, &a.members[0]).cmp(&(b.marked_coeff, &b.members[0]))
    });
    OrbitDecomposition { orbits }
}

/// Outcome of the exhaustive invariant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantCheck {
    Verified,
    /// Two roots witnessing a failure: either one orbit with two different
    /// marked coefficients, or two orbits sharing a nonzero one.
    Counterexample(Root, Root),
}

impl InvariantCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, InvariantCheck::Verified)
    }
}

/// Check, for one of the six contraction cases, that the magnitude of the
/// marked coefficient is a complete orbit invariant on pairs with nonzero
/// coefficient: constant on each orbit, and any two positive roots with the
/// same nonzero value lie in the same orbit.
pub fn verify_marked_coeff_invariant(
    diagram: &MarkedDiagram,
) -> Result<InvariantCheck, RootSystemError> {
    let vertex = diagram
        .contraction_vertex()
        .ok_or_else(|| not_a_contraction_case(diagram))?;
    let rs = RootSystem::new(diagram.clone());
    let decomposition = orbit_decomposition(&rs);

    // constancy on each orbit
    for orbit in decomposition.orbits() {
        let first = &orbit.members[0];
        for member in &orbit.members[1..] {
            if member.coeff(vertex).abs() != first.coeff(vertex).abs() {
                return Ok(InvariantCheck::Counterexample(first.clone(), member.clone()));
            }
        }
    }

    // completeness: equal nonzero values force equal orbits
    let mut orbit_of: BTreeMap<&Root, usize> = BTreeMap::new();
    for (index, orbit) in decomposition.orbits().iter().enumerate() {
        for member in &orbit.members {
            orbit_of.insert(member, index);
        }
    }
    let positives = rs.positive_roots();
    for (i, a) in positives.iter().enumerate() {
        if a.coeff(vertex) == 0 {
            continue;
        }
        for b in &positives[i + 1..] {
            if b.coeff(vertex).abs() == a.coeff(vertex).abs() && orbit_of[a] != orbit_of[b] {
                return Ok(InvariantCheck::Counterexample(a.clone(), b.clone()));
            }
        }
    }
    Ok(InvariantCheck::Verified)
}

/// Kollar's length: the largest marked coefficient over the positive roots.
/// Defined for the six contraction cases; always lands in 1..=6.
pub fn length_of(diagram: &MarkedDiagram) -> Result<i64, RootSystemError> {
    let vertex = diagram
        .contraction_vertex()
        .ok_or_else(|| not_a_contraction_case(diagram))?;
    let rs = RootSystem::new(diagram.clone());
    let length = rs
        .positive_roots()
        .iter()
        .map(|v| v.coeff(vertex))
        .max()
        .expect("root system is nonempty");
    debug_assert!((1..=6).contains(&length));
    Ok(length)
}

/// Component census of the discriminant locus in the partially resolved
/// deformation space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    pub length: i64,
    /// For each value i in 1..=length, the number of hyperplane pairs lying
    /// over the i-th curve component (one orbit per i).
    pub curve_components: BTreeMap<i64, usize>,
    /// Orbits with marked coefficient zero: components over which the
    /// surfaces are singular but carry no complete curve.
    pub singular_components: usize,
}

/// Count, per marked-coefficient value, the hyperplane pairs over each
/// discriminant component, enforcing that exactly one orbit exists per
/// value in 1..=length.
pub fn discriminant_report(
    diagram: &MarkedDiagram,
) -> Result<DiscriminantReport, RootSystemError> {
    let length = length_of(diagram)?;
    let rs = RootSystem::new(diagram.clone());
    let decomposition = orbit_decomposition(&rs);

    let mut curve_components = BTreeMap::new();
    for value in 1..=length {
        let orbits: Vec<&Orbit> = decomposition.orbits_with_coeff(value).collect();
        if orbits.len() != 1 {
            return Err(RootSystemError::IrreducibilityViolation {
                value,
                found: orbits.len(),
            });
        }
        curve_components.insert(value, orbits[0].size());
    }
    Ok(DiscriminantReport {
        length,
        curve_components,
        singular_components: decomposition.orbits_with_coeff(0).count(),
    })
}
