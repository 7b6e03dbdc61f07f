//! ADE Dynkin diagrams with a marked subdiagram.
//!
//! Vertex numbering follows the Bourbaki convention, hard-coded per kind:
//!
//! * `A(n)`: the chain `1-2-...-n`;
//! * `D(n)`: the chain `1-2-...-(n-2)` with both `n-1` and `n` attached to
//!   `n-2` (so the trivalent vertex of `D4` is `2`);
//! * `E6`/`E7`/`E8`: the chain `1-3-4-...-n` with `2` attached to `4` (so
//!   the trivalent vertex is `4`).
//!
//! A contractable smooth rational curve gives rise to one of exactly six
//! marked diagrams: `A1` at its vertex, `D4`/`E6`/`E7`/`E8` at the trivalent
//! vertex, and `E8` at the vertex adjacent to the trivalent one on the
//! longest branch (vertex `5`). Operations restricted to those six cases
//! reject everything else with [`RootSystemError::NotAContractionCase`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DiagramKind {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DiagramKind {
    pub fn rank(&self) -> usize {
        match *self {
            DiagramKind::A(n) | DiagramKind::D(n) => n,
            DiagramKind::E6 => 6,
            DiagramKind::E7 => 7,
            DiagramKind::E8 => 8,
        }
    }

    /// Canonical (Bourbaki) edge list; pairs are `(min, max)`, 1-based.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            DiagramKind::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            DiagramKind::D(n) => {
                let mut edges: Vec<(usize, usize)> = (1..n - 2).map(|i| (i, i + 1)).collect();
                edges.push((n - 2, n - 1));
                edges.push((n - 2, n));
                edges
            }
            DiagramKind::E6 | DiagramKind::E7 | DiagramKind::E8 => {
                let n = self.rank();
                let mut edges = vec![(1, 3), (2, 4)];
                edges.extend((3..n).map(|i| (i, i + 1)));
                edges.sort_unstable();
                edges
            }
        }
    }

    /// The vertex marked in the contraction case: the single vertex of `A1`,
    /// the trivalent vertex of `D4`/`E6`/`E7`/`E8`. `None` for other kinds.
    pub fn central_vertex(&self) -> Option<usize> {
        match *self {
            DiagramKind::A(1) => Some(1),
            DiagramKind::D(4) => Some(2),
            DiagramKind::E6 | DiagramKind::E7 | DiagramKind::E8 => Some(4),
            _ => None,
        }
    }

    /// The vertex one step from the trivalent vertex along the longest
    /// branch. Only `E8` admits this as a marking.
    pub fn long_branch_adjacent_vertex(&self) -> Option<usize> {
        match *self {
            DiagramKind::E8 => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiagramKind::A(n) => write!(f, "A{n}"),
            DiagramKind::D(n) => write!(f, "D{n}"),
            DiagramKind::E6 => write!(f, "E6"),
            DiagramKind::E7 => write!(f, "E7"),
            DiagramKind::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for DiagramKind {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let unknown = || DiagramError::UnknownKind(s.to_string());
        let (letter, digits) = s.split_at(if s.is_empty() { 0 } else { 1 });
        let n: usize = digits.parse().map_err(|_| unknown())?;
        match letter {
            "A" if n >= 1 => Ok(DiagramKind::A(n)),
            "D" if n >= 4 => Ok(DiagramKind::D(n)),
            "E" if n == 6 => Ok(DiagramKind::E6),
            "E" if n == 7 => Ok(DiagramKind::E7),
            "E" if n == 8 => Ok(DiagramKind::E8),
            _ => Err(unknown()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("unknown diagram kind `{0}` (expected A1, A2, ..., D4, D5, ..., E6, E7, E8)")]
    UnknownKind(String),
    #[error("marked vertex {vertex} out of range 1..={rank}")]
    MarkedOutOfRange { vertex: usize, rank: usize },
    #[error("marked set must be nonempty")]
    EmptyMarked,
}

/// An ADE diagram together with a nonempty set of marked vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    kind: DiagramKind,
    edges: Vec<(usize, usize)>,
    marked: BTreeSet<usize>,
}

impl MarkedDiagram {
    pub fn new(
        kind: DiagramKind,
        marked: impl IntoIterator<Item = usize>,
    ) -> Result<Self, DiagramError> {
        let rank = kind.rank();
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if marked.is_empty() {
            return Err(DiagramError::EmptyMarked);
        }
        if let Some(&v) = marked.iter().find(|&&v| v < 1 || v > rank) {
            return Err(DiagramError::MarkedOutOfRange { vertex: v, rank });
        }
        Ok(MarkedDiagram {
            kind,
            edges: kind.edges(),
            marked,
        })
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    /// Smallest marked vertex; the coefficient at this vertex is the orbit
    /// invariant tracked by [`crate::orbits`].
    pub fn first_marked(&self) -> usize {
        *self.marked.iter().next().expect("marked set is nonempty")
    }

    pub fn is_marked(&self, vertex: usize) -> bool {
        self.marked.contains(&vertex)
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.contains(&key)
    }

    /// Vertices adjacent to `vertex`, ascending.
    pub fn neighbors(&self, vertex: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == vertex {
                    Some(b)
                } else if b == vertex {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// `Some(marked vertex)` when `(kind, marked)` is one of the six
    /// contraction cases, `None` otherwise.
    pub fn contraction_vertex(&self) -> Option<usize> {
        if self.marked.len() != 1 {
            return None;
        }
        let v = self.first_marked();
        let central = self.kind.central_vertex() == Some(v);
        let adjacent = self.kind.long_branch_adjacent_vertex() == Some(v);
        (central || adjacent).then_some(v)
    }

    pub fn is_contraction_case(&self) -> bool {
        self.contraction_vertex().is_some()
    }

    /// The six contraction cases in a fixed order: A1, D4, E6, E7,
    /// E8 at the trivalent vertex, E8 at the adjacent vertex.
    pub fn contraction_cases() -> Vec<MarkedDiagram> {
        [
            (DiagramKind::A(1), 1),
            (DiagramKind::D(4), 2),
            (DiagramKind::E6, 4),
            (DiagramKind::E7, 4),
            (DiagramKind::E8, 4),
            (DiagramKind::E8, 5),
        ]
        .into_iter()
        .map(|(kind, v)| MarkedDiagram::new(kind, [v]).expect("valid case"))
        .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_has_no_edges() {
        let d = MarkedDiagram::new(DiagramKind::A(1), [1]).unwrap();
        assert_eq!(d.rank(), 1);
        assert!(d.edges().is_empty());
    }

    #[test]
    fn d4_is_a_star_with_center_2() {
        let d = MarkedDiagram::new(DiagramKind::D(4), [2]).unwrap();
        assert_eq!(d.edges(), &[(1, 2), (2, 3), (2, 4)]);
        assert_eq!(d.neighbors(2), vec![1, 3, 4]);
        assert!(d.is_contraction_case());
    }

    #[test]
    fn e8_marked_5_is_adjacent_to_the_trivalent_vertex() {
        let d = MarkedDiagram::new(DiagramKind::E8, [5]).unwrap();
        assert_eq!(
            d.edges(),
            &[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        );
        assert!(d.are_adjacent(5, 4));
        assert_eq!(d.neighbors(4), vec![2, 3, 5]);
        assert!(d.is_contraction_case());
    }

    #[test]
    fn canonical_shapes_match_hardcoded_tables() {
        let table: &[(DiagramKind, &[(usize, usize)])] = &[
            (DiagramKind::A(2), &[(1, 2)]),
            (DiagramKind::A(4), &[(1, 2), (2, 3), (3, 4)]),
            (DiagramKind::D(5), &[(1, 2), (2, 3), (3, 4), (3, 5)]),
            (
                DiagramKind::E6,
                &[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)],
            ),
            (
                DiagramKind::E7,
                &[(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7)],
            ),
        ];
        for (kind, expected) in table {
            assert_eq!(kind.edges(), *expected, "{kind}");
        }
    }

    #[test]
    fn every_kind_is_a_tree() {
        for kind in [
            DiagramKind::A(1),
            DiagramKind::A(7),
            DiagramKind::D(4),
            DiagramKind::D(6),
            DiagramKind::E6,
            DiagramKind::E7,
            DiagramKind::E8,
        ] {
            let edges = kind.edges();
            let rank = kind.rank();
            assert_eq!(edges.len(), rank.saturating_sub(1), "{kind}");
            // connectivity by union-find over the edge list
            let mut parent: Vec<usize> = (0..rank).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &(a, b) in &edges {
                let (ra, rb) = (find(&mut parent, a - 1), find(&mut parent, b - 1));
                assert_ne!(ra, rb, "cycle in {kind}");
                parent[ra] = rb;
            }
        }
    }

    #[test]
    fn kind_strings_round_trip() {
        for s in ["A1", "A8", "D4", "D7", "E6", "E7", "E8"] {
            let kind: DiagramKind = s.parse().unwrap();
            assert_eq!(kind.to_string(), s);
        }
        for s in ["", "B2", "E9", "D3", "A0", "F4", "a1", "E"] {
            assert!(s.parse::<DiagramKind>().is_err(), "{s}");
        }
    }

    #[test]
    fn marked_set_is_validated() {
        assert_eq!(
            MarkedDiagram::new(DiagramKind::A(3), []),
            Err(DiagramError::EmptyMarked)
        );
        assert_eq!(
            MarkedDiagram::new(DiagramKind::A(3), [4]),
            Err(DiagramError::MarkedOutOfRange { vertex: 4, rank: 3 })
        );
        assert_eq!(
            MarkedDiagram::new(DiagramKind::D(4), [0]),
            Err(DiagramError::MarkedOutOfRange { vertex: 0, rank: 4 })
        );
    }

    #[test]
    fn contraction_cases_are_exactly_six() {
        let cases = MarkedDiagram::contraction_cases();
        assert_eq!(cases.len(), 6);
        for case in &cases {
            assert!(case.is_contraction_case());
        }
        for (kind, v) in [
            (DiagramKind::A(3), 3),
            (DiagramKind::D(4), 1),
            (DiagramKind::D(5), 3),
            (DiagramKind::E7, 5),
            (DiagramKind::E8, 3),
        ] {
            let d = MarkedDiagram::new(kind, [v]).unwrap();
            assert!(!d.is_contraction_case(), "{kind} marked {v}");
        }
        let multi = MarkedDiagram::new(DiagramKind::D(4), [1, 2]).unwrap();
        assert!(!multi.is_contraction_case());
    }
}
