//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is kept twice: as sorted
//! neighbor lists for iteration and as a bit matrix for constant-time edge
//! queries. Vertices may carry exact rational coordinate labels; these are
//! used by the lattice families and never influence equality or isomorphism.

mod enumerate;
mod graph6;
mod iso;
mod metric;
mod structure;

use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};

pub use enumerate::{all_graphs, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use graph6::{graph6_decode, graph6_encode, read_graph6_lines};
pub use iso::{are_isomorphic, canonical_form, color_refinement, CanonicalForm};
pub use metric::{distance_matrix, DistanceMatrix};

/// A point in the plane with exact rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coord {
    pub x: Rational64,
    pub y: Rational64,
}

impl Coord {
    pub fn new(x: Rational64, y: Rational64) -> Self {
        Coord { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Coord::new(Rational64::from_integer(x), Rational64::from_integer(y))
    }

    /// Point `(x2 / 2, y2 / 2)`; convenient for half-integer lattices.
    pub fn halves(x2: i64, y2: i64) -> Self {
        Coord::new(Rational64::new(x2, 2), Rational64::new(y2, 2))
    }

    /// `[x_num, x_den, y_num, y_den]` in lowest terms.
    pub fn to_parts(&self) -> [i64; 4] {
        [
            *self.x.numer(),
            *self.x.denom(),
            *self.y.numer(),
            *self.y.denom(),
        ]
    }

    /// Squared Euclidean distance.
    pub fn dist2(&self, other: &Coord) -> Rational64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    matrix: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    coords: Vec<Option<Coord>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(v, w) in edges {
            g.add_edge(v, w)?;
        }
        g.finish();
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            matrix: vec![0; words * n],
            neighbors: vec![Vec::new(); n],
            coords: vec![None; n],
        }
    }

    pub(crate) fn add_edge(&mut self, v: usize, w: usize) -> Result<()> {
        let n = self.n;
        for x in [v, w] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if v == w {
            return Err(Error::SelfLoop(v));
        }
        if !self.has_edge(v, w) {
            self.matrix[v * self.words + w / 64] |= 1 << (w % 64);
            self.matrix[w * self.words + v / 64] |= 1 << (v % 64);
            self.neighbors[v].push(w);
            self.neighbors[w].push(v);
        }
        Ok(())
    }

    pub(crate) fn finish(&mut self) {
        for list in &mut self.neighbors {
            list.sort_unstable();
        }
    }

    /// Attaches coordinate labels. `coords` must have one entry per vertex and
    /// the present labels must be pairwise distinct.
    pub fn with_coords(mut self, coords: Vec<Option<Coord>>) -> Result<Self> {
        if coords.len() != self.n {
            return Err(Error::CoordinateCount {
                expected: self.n,
                got: coords.len(),
            });
        }
        let mut seen = std::collections::HashMap::new();
        for (v, c) in coords.iter().enumerate() {
            if let Some(c) = c {
                if let Some(&u) = seen.get(c) {
                    return Err(Error::DuplicateCoordinate(u, v));
                }
                seen.insert(*c, v);
            }
        }
        self.coords = coords;
        Ok(self)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        v < self.n && w < self.n && self.matrix[v * self.words + w / 64] >> (w % 64) & 1 == 1
    }

    /// Edges as `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            self.neighbors[v]
                .iter()
                .copied()
                .filter(move |&w| w > v)
                .map(move |w| (v, w))
        })
    }

    /// Δ(G); zero for the empty and single-vertex graphs.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn coord(&self, v: usize) -> Option<Coord> {
        self.coords[v]
    }

    pub fn coords(&self) -> &[Option<Coord>] {
        &self.coords
    }

    pub fn has_coords(&self) -> bool {
        self.coords.iter().any(Option::is_some)
    }

    /// The vertex labeled `c`, if any.
    pub fn vertex_at(&self, c: Coord) -> Option<usize> {
        self.coords.iter().position(|x| *x == Some(c))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (v, w) in self.edges() {
            g.add_edge(perm[v], perm[w])
                .expect("permutation stays in range");
        }
        g.finish();
        let mut coords = vec![None; self.n];
        for v in 0..self.n {
            coords[perm[v]] = self.coords[v];
        }
        g.coords = coords;
        g
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn four_cycle_degrees() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn coordinates_must_be_distinct() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let err = g
            .with_coords(vec![Some(Coord::int(0, 0)), Some(Coord::int(0, 0))])
            .unwrap_err();
        assert_eq!(err, Error::DuplicateCoordinate(0, 1));
    }

    #[test]
    fn coordinates_do_not_affect_equality() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let h = g
            .clone()
            .with_coords(vec![Some(Coord::int(0, 0)), Some(Coord::halves(1, 1))])
            .unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn wide_graph_bitsets() {
        let edges: Vec<_> = (0..99).map(|i| (i, i + 1)).collect();
        let g = Graph::new(100, &edges).unwrap();
        assert!(g.has_edge(63, 64));
        assert!(g.has_edge(99, 98));
        assert!(!g.has_edge(0, 99));
    }
}
