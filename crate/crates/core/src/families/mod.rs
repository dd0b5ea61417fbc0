//! Deterministic generators for the graph families that realize small
//! boundaries, and the two composition operations used to build them.

mod fixtures;
mod lattice;

pub use fixtures::{base_case_fixture, fig2_core, Fig2Core, Fixture};
pub use lattice::{
    d_graph, grid, l_graph, n_graph, t_graph, validate_axis_slice_convex, x_graph, LatticeSpec,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidParameter(message.into())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("a path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!(
            "a cycle needs at least three vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("a complete graph needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::new(n, &edges)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    subdivided_star(&vec![1; k])
}

/// A center (vertex 0) with one path of `arms[i]` edges per entry, arms
/// numbered consecutively. Every arm must be nonempty.
pub fn subdivided_star(arms: &[usize]) -> Result<Graph> {
    if arms.is_empty() || arms.contains(&0) {
        return Err(invalid(format!(
            "arm lengths must be at least 1, got {arms:?}"
        )));
    }
    let mut g = Graph::empty(1);
    for &len in arms {
        g = attach_path(&g, 0, len)?;
    }
    Ok(g)
}

/// Subdivision of `K_{1,4}` with the given arm lengths.
pub fn spider(arms: [usize; 4]) -> Result<Graph> {
    subdivided_star(&arms)
}

/// The tree with four leaves and two degree-3 vertices: centers joined by a
/// path of `bridge` edges, arms `a1`, `a2` on the first center (vertex 0)
/// and `b1`, `b2` on the second.
pub fn double_spider(a1: usize, a2: usize, bridge: usize, b1: usize, b2: usize) -> Result<Graph> {
    if [a1, a2, bridge, b1, b2].contains(&0) {
        return Err(invalid(
            "double spider arm and bridge lengths must be at least 1",
        ));
    }
    let left = subdivided_star(&[a1, a2])?;
    let g = attach_path(&left, 0, bridge)?;
    let right_center = g.order() - 1;
    let g = attach_path(&g, right_center, b1)?;
    attach_path(&g, right_center, b2)
}

/// `K3` on vertices 0, 1, 2 with paths of `p`, `q`, `r` vertices attached.
pub fn tripod(p: usize, q: usize, r: usize) -> Result<Graph> {
    let mut g = complete(3)?;
    for (v, len) in [(0, p), (1, q), (2, r)] {
        g = attach_path(&g, v, len)?;
    }
    Ok(g)
}

/// Two copies of `K_n` joined by an edge between their vertices 0.
pub fn barbell(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("barbell needs n >= 2, got {n}")));
    }
    let k = complete(n)?;
    join_with_edge(&k, 0, &k, 0)
}

/// Appends a path of `length` new vertices (ids `|V|..`) with an edge from
/// `v` to the first of them. Coordinate labels of existing vertices are kept.
pub fn attach_path(g: &Graph, v: usize, length: usize) -> Result<Graph> {
    check_vertex(g, v)?;
    let n = g.order();
    let mut edges: Vec<_> = g.edges().collect();
    let mut prev = v;
    for new in n..n + length {
        edges.push((prev, new));
        prev = new;
    }
    let mut coords = g.coords().to_vec();
    coords.resize(n + length, None);
    Graph::new(n + length, &edges)?.with_coords(coords)
}

/// Disjoint union with `g2` shifted by `|V1|`, plus the edge `v1 - v2'`.
/// Only `g1`'s coordinate labels are kept, since the two label sets may
/// collide.
pub fn join_with_edge(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    check_vertex(g1, v1)?;
    check_vertex(g2, v2)?;
    let off = g1.order();
    let mut edges: Vec<_> = g1.edges().collect();
    edges.extend(g2.edges().map(|(a, b)| (a + off, b + off)));
    edges.push((v1, v2 + off));
    let mut coords = g1.coords().to_vec();
    coords.resize(off + g2.order(), None);
    Graph::new(off + g2.order(), &edges)?.with_coords(coords)
}
