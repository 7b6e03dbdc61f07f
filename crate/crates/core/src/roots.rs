//! Root systems over the simple-root basis.
//!
//! Roots are integer coefficient vectors over the simple roots `e_1..e_n`.
//! The Cartan matrix of a simply-laced diagram has 2 on the diagonal and -1
//! at adjacent pairs, so the pairing of a root `v = sum a_j e_j` with the
//! coroot of `e_i` is `2 a_i - sum_{j ~ i} a_j`, and the simple reflection
//! is `s_i(v) = v - <v, e_i~> e_i`.
//!
//! Positive roots are generated by breadth-first reflection closure from
//! the simple roots, keeping only all-nonnegative vectors, and are stored
//! in lexicographic order so all downstream output is deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::diagram::MarkedDiagram;

/// Integer coefficient vector over the simple roots. Also labels the
/// discriminant hyperplane perpendicular to it; `v` and `-v` label the
/// same hyperplane.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The i-th simple root `e_i` (1-based) in rank `rank`.
    pub fn simple(index: usize, rank: usize) -> Self {
        assert!(index >= 1 && index <= rank);
        let mut coeffs = vec![0; rank];
        coeffs[index - 1] = 1;
        Root { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `e_vertex` (1-based).
    pub fn coeff(&self, vertex: usize) -> i64 {
        self.coeffs[vertex - 1]
    }

    /// All coefficients nonnegative and at least one nonzero.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0) && self.coeffs.iter().any(|&a| a != 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Canonical representative of the pair `{v, -v}`: the member whose
    /// first nonzero coefficient is positive.
    pub fn pair_representative(&self) -> Root {
        match self.coeffs.iter().find(|&&a| a != 0) {
            Some(&a) if a < 0 => self.negated(),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root{:?}", self.coeffs)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{kind} marked at {marked:?} is not one of the six contraction cases")]
    NotAContractionCase { kind: String, marked: Vec<usize> },
    #[error("order {order} outside 1..={length}")]
    OrderOutOfRange { order: i64, length: i64 },
    #[error(
        "expected exactly one orbit with marked coefficient {value}, found {found}; \
         this indicates a computation bug"
    )]
    IrreducibilityViolation { value: i64, found: usize },
}

pub(crate) fn not_a_contraction_case(diagram: &MarkedDiagram) -> RootSystemError {
    RootSystemError::NotAContractionCase {
        kind: diagram.kind().to_string(),
        marked: diagram.marked().iter().copied().collect(),
    }
}

/// A marked diagram with its Cartan matrix and full set of positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    diagram: MarkedDiagram,
    cartan: Vec<Vec<i64>>,
    positives: Vec<Root>,
}

impl RootSystem {
    /// Build the root system of `diagram`: Cartan matrix plus the positive
    /// roots obtained by reflection closure from the simple roots.
    pub fn new(diagram: MarkedDiagram) -> Self {
        let rank = diagram.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in diagram.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }

        let mut rs = RootSystem {
            diagram,
            cartan,
            positives: Vec::new(),
        };
        rs.positives = rs.close_positive_roots();
        rs
    }

    fn close_positive_roots(&self) -> Vec<Root> {
        let rank = self.rank();
        let mut seen: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 1..=rank {
            let e = Root::simple(i, rank);
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(v) = queue.pop_front() {
            for i in 1..=rank {
                let w = self.reflect_unchecked(&v, i);
                if w.is_positive() && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn diagram(&self) -> &MarkedDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in lexicographic order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positives
    }

    /// Pairing `<v, e_i~>` of `v` with the coroot of the i-th simple root.
    pub fn pairing_with_simple(&self, v: &Root, index: usize) -> i64 {
        v.coeffs()
            .iter()
            .zip(&self.cartan[index - 1])
            .map(|(a, c)| a * c)
            .sum()
    }

    /// Cartan self-pairing `<v, v>`; equals 2 for every root.
    pub fn self_pairing(&self, v: &Root) -> i64 {
        (1..=self.rank())
            .map(|i| v.coeff(i) * self.pairing_with_simple(v, i))
            .sum()
    }

    /// Simple reflection `s_index(v)`.
    pub fn reflect(&self, v: &Root, index: usize) -> Result<Root, RootSystemError> {
        if index < 1 || index > self.rank() {
            return Err(RootSystemError::IndexOutOfRange {
                index,
                rank: self.rank(),
            });
        }
        Ok(self.reflect_unchecked(v, index))
    }

    pub(crate) fn reflect_unchecked(&self, v: &Root, index: usize) -> Root {
        let pairing = self.pairing_with_simple(v, index);
        let mut coeffs = v.coeffs().to_vec();
        coeffs[index - 1] -= pairing;
        Root::new(coeffs)
    }
}
