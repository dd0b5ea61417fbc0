//! Lattice-based families: the grid `G`, and the `N`, `X`, `T`, `D`, `L`
//! graphs of Müller, Pór and Sereni, whose CEJZ boundaries have size four.
//!
//! Every generated vertex carries its lattice point as a coordinate label.
//! Vertex ids follow the points sorted by `(y, x)`, integer points first and
//! half-integer points after. Edge rules compare exact squared distances.

use std::collections::HashSet;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::graph::{Coord, Graph};

/// The point sets `V⁰` (integer points of `[0,a]×[0,c]`) and `V¹` (cell
/// centers), plus an optional selection `W` of extra points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub a: usize,
    pub c: usize,
    pub v0: Vec<Coord>,
    pub v1: Vec<Coord>,
    pub subset_w: Option<Vec<Coord>>,
}

impl LatticeSpec {
    pub fn new(a: usize, c: usize) -> Result<Self> {
        check_dims(a, c)?;
        let (ai, ci) = (a as i64, c as i64);
        let v0 = (0..=ci)
            .flat_map(|y| (0..=ai).map(move |x| Coord::int(x, y)))
            .collect();
        let v1 = (0..ci)
            .flat_map(|y| (0..ai).map(move |x| Coord::halves(2 * x + 1, 2 * y + 1)))
            .collect();
        Ok(LatticeSpec {
            a,
            c,
            v0,
            v1,
            subset_w: None,
        })
    }

    /// Attaches `w` after checking it is axis slice convex.
    pub fn with_subset(mut self, w: Vec<Coord>) -> Result<Self> {
        if !validate_axis_slice_convex(&w) {
            return Err(Error::NotAxisSliceConvex);
        }
        self.subset_w = Some(w);
        Ok(self)
    }
}

fn check_dims(a: usize, c: usize) -> Result<()> {
    if a == 0 || c == 0 {
        return Err(Error::InvalidParameter(format!(
            "lattice dimensions must be positive, got {a}x{c}"
        )));
    }
    Ok(())
}

/// Whether any two points on a common horizontal (vertical) line have every
/// point at unit steps between them also present.
pub fn validate_axis_slice_convex(points: &[Coord]) -> bool {
    let set: HashSet<Coord> = points.iter().copied().collect();
    let one = Rational64::from_integer(1);
    for p in points {
        for q in points {
            if p.y == q.y && p.x < q.x {
                let mut x = p.x + one;
                while x <= q.x {
                    if !set.contains(&Coord::new(x, p.y)) {
                        return false;
                    }
                    x += one;
                }
            }
            if p.x == q.x && p.y < q.y {
                let mut y = p.y + one;
                while y <= q.y {
                    if !set.contains(&Coord::new(p.x, y)) {
                        return false;
                    }
                    y += one;
                }
            }
        }
    }
    true
}

fn is_integer_point(p: &Coord) -> bool {
    p.x.is_integer() && p.y.is_integer()
}

/// Sorts points into generator order and joins every pair accepted by `adj`.
fn build(mut points: Vec<Coord>, adj: impl Fn(&Coord, &Coord) -> bool) -> Result<Graph> {
    points.sort_by_key(|p| (!is_integer_point(p), p.y, p.x));
    points.dedup();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if adj(&points[i], &points[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(points.len(), &edges)?.with_coords(points.into_iter().map(Some).collect())
}

fn unit_apart(p: &Coord, q: &Coord) -> bool {
    p.dist2(q) == Rational64::from_integer(1)
}

fn within_unit(p: &Coord, q: &Coord) -> bool {
    p.dist2(q) <= Rational64::from_integer(1)
}

fn vertex_at(g: &Graph, x2: i64, y2: i64) -> usize {
    g.vertex_at(Coord::halves(x2, y2))
        .expect("lattice point present by construction")
}

fn without_edges(g: &Graph, removed: &[(usize, usize)]) -> Result<Graph> {
    let edges: Vec<_> = g
        .edges()
        .filter(|&(v, w)| {
            !removed
                .iter()
                .any(|&(a, b)| (a, b) == (v, w) || (b, a) == (v, w))
        })
        .collect();
    Graph::new(g.order(), &edges)?.with_coords(g.coords().to_vec())
}

/// The grid graph on `V⁰_{a×c}` with unit-distance edges.
pub fn grid(a: usize, c: usize) -> Result<Graph> {
    let spec = LatticeSpec::new(a, c)?;
    build(spec.v0, unit_apart)
}

/// `V⁰ ∪ W` with edges at distance at most one; `W` defaults to all of `V¹`
/// and must be an axis slice convex subset of it.
pub fn n_graph(a: usize, c: usize, w: Option<&[Coord]>) -> Result<Graph> {
    let spec = LatticeSpec::new(a, c)?;
    let centers = match w {
        None => spec.v1.clone(),
        Some(w) => {
            if let Some(p) = w.iter().find(|p| !spec.v1.contains(p)) {
                return Err(Error::InvalidParameter(format!(
                    "{p} is not a cell center of the {a}x{c} lattice"
                )));
            }
            spec.with_subset(w.to_vec())?
                .subset_w
                .expect("subset just set")
        }
    };
    let mut points = LatticeSpec::new(a, c)?.v0;
    points.extend(centers);
    build(points, within_unit)
}

/// `X_{a×c}`. For `a >= 2` the construction follows the direct rules; for
/// `a = 1 < c` it is `X_{c×1}`; `X_{1×1}` is `K4` placed on the unit square.
pub fn x_graph(a: usize, c: usize) -> Result<Graph> {
    check_dims(a, c)?;
    match (a, c) {
        (1, 1) => {
            let points = vec![
                Coord::int(0, 0),
                Coord::int(1, 0),
                Coord::int(0, 1),
                Coord::int(1, 1),
            ];
            build(points, |_, _| true)
        }
        (1, _) => x_graph(c, 1),
        (2, _) => {
            let g = n_graph(1, c, None)?;
            let ci = 2 * c as i64;
            let bottom = (vertex_at(&g, 0, 0), vertex_at(&g, 2, 0));
            let top = (vertex_at(&g, 0, ci), vertex_at(&g, 2, ci));
            without_edges(&g, &[bottom, top])
        }
        _ => {
            let spec = LatticeSpec::new(a - 1, c)?;
            let (inner, ci) = (a as i64 - 1, c as i64);
            let mut points: Vec<Coord> = spec
                .v0
                .into_iter()
                .filter(|p| {
                    let interior_x =
                        p.x > Rational64::from_integer(0) && p.x < Rational64::from_integer(inner);
                    let edge_y =
                        p.y == Rational64::from_integer(0) || p.y == Rational64::from_integer(ci);
                    !(interior_x && edge_y)
                })
                .collect();
            points.extend(spec.v1);
            build(points, within_unit)
        }
    }
}

/// Integer points of `T_{a×c}`: those of `V⁰_{a×(c+1)}` off the line `x = 0`
/// and, except in column `x = a`, off the rows `y = 0` and `y = c + 1`.
fn t_integer_points(a: usize, c: usize) -> Vec<Coord> {
    let (ai, top) = (a as i64, c as i64 + 1);
    (0..=top)
        .flat_map(|y| (1..=ai).map(move |x| (x, y)))
        .filter(|&(x, y)| x == ai || (y != 0 && y != top))
        .map(|(x, y)| Coord::int(x, y))
        .collect()
}

/// `T_{a×c}` restricted to `V¹_{a×(c+1)} ∪ (W ∩ V⁰_{a×(c+1)})`. `W` must be
/// axis slice convex and contain `(a, 0)` and `(a, c+1)`; it defaults to
/// every integer point of `T_{a×c}`.
pub fn t_graph(a: usize, c: usize, w: Option<&[Coord]>) -> Result<Graph> {
    let spec = LatticeSpec::new(a, c + 1)?;
    let allowed = t_integer_points(a, c);
    let integer_points = match w {
        None => allowed,
        Some(w) => {
            if !validate_axis_slice_convex(w) {
                return Err(Error::NotAxisSliceConvex);
            }
            for corner in [Coord::int(a as i64, 0), Coord::int(a as i64, c as i64 + 1)] {
                if !w.contains(&corner) {
                    return Err(Error::InvalidParameter(format!(
                        "W must contain the corner {corner}"
                    )));
                }
            }
            allowed.into_iter().filter(|p| w.contains(p)).collect()
        }
    };
    let mut points = spec.v1;
    points.extend(integer_points);
    build(points, within_unit)
}

/// Two-layer grid: `v_{x,y}` at `(x, y)` and, for interior points only, a
/// second copy `w_{x,y}` drawn at `(x + ¼, y + ¼)`; boundary copies are
/// identified. `with_inner_layer = false` gives `L_{a×c}`.
fn layered(a: usize, c: usize, with_inner_layer: bool) -> Result<Graph> {
    check_dims(a, c)?;
    let (ai, ci) = (a as i64, c as i64);
    let interior = |x: i64, y: i64| 0 < x && x < ai && 0 < y && y < ci;
    let quarter = Rational64::new(1, 4);

    let mut coords: Vec<Coord> = (0..=ci)
        .flat_map(|y| (0..=ai).map(move |x| Coord::int(x, y)))
        .collect();
    let v_id = |x: i64, y: i64| (y * (ai + 1) + x) as usize;
    let mut w_ids = std::collections::HashMap::new();
    if with_inner_layer {
        for y in 1..ci {
            for x in 1..ai {
                w_ids.insert((x, y), coords.len());
                coords.push(Coord::new(
                    Rational64::from_integer(x) + quarter,
                    Rational64::from_integer(y) + quarter,
                ));
            }
        }
    }
    // `None` when the second-layer copy was removed
    let w_id = |x: i64, y: i64| -> Option<usize> {
        if interior(x, y) {
            w_ids.get(&(x, y)).copied()
        } else {
            Some(v_id(x, y))
        }
    };

    let mut edges = Vec::new();
    for y in 0..=ci {
        for x in 0..=ai {
            for (dx, dy) in [(1, 0), (0, 1)] {
                let (x2, y2) = (x + dx, y + dy);
                if x2 > ai || y2 > ci {
                    continue;
                }
                edges.push((v_id(x, y), v_id(x2, y2)));
                if let (Some(p), Some(q)) = (w_id(x, y), w_id(x2, y2)) {
                    edges.push((p, q));
                }
            }
            if let Some(p) = w_id(x, y) {
                if p != v_id(x, y) {
                    edges.push((v_id(x, y), p));
                }
            }
        }
    }
    for y in 0..ci {
        for x in 0..ai {
            if let Some(p) = w_id(x, y + 1) {
                edges.push((v_id(x + 1, y), p));
            }
        }
    }
    Graph::new(coords.len(), &edges)?.with_coords(coords.into_iter().map(Some).collect())
}

/// `D_{a×c}`.
pub fn d_graph(a: usize, c: usize) -> Result<Graph> {
    layered(a, c, true)
}

/// `L_{a×c}`: `D_{a×c}` without its interior second-layer vertices.
pub fn l_graph(a: usize, c: usize) -> Result<Graph> {
    layered(a, c, false)
}
