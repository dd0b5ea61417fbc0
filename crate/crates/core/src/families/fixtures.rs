//! The non-tree core graphs with four Steinerberger boundary vertices and the
//! nine small witness fixtures used to show that larger lattice graphs have
//! at least five.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use super::lattice::{d_graph, grid, n_graph, t_graph, x_graph};
use crate::error::{Error, Result};
use crate::graph::{Coord, Graph};

/// A core graph whose β = 1 boundary vertices may carry attached paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fig2Core {
    /// Four-cycle plus a center joined to every cycle vertex.
    N11,
    C4,
    K4,
    /// `N11` minus one rim edge.
    T11,
    /// Four-cycle plus one chord.
    D11,
    /// Two triangles joined through a path of `c - 1` middle vertices;
    /// `X1c(1)` is `K4`.
    X1c(usize),
    /// `X1c(c)` with one edge of the left triangle removed, so the first
    /// middle vertex carries two pendant vertices.
    X1cOpen(usize),
}

impl Fig2Core {
    /// Every core in recognition order; the `c`-families are listed for
    /// `c = 1..=max_c`.
    pub fn all(max_c: usize) -> Vec<Fig2Core> {
        let mut cores = vec![
            Fig2Core::N11,
            Fig2Core::C4,
            Fig2Core::K4,
            Fig2Core::T11,
            Fig2Core::D11,
        ];
        cores.extend((1..=max_c).map(Fig2Core::X1c));
        cores.extend((1..=max_c).map(Fig2Core::X1cOpen));
        cores
    }

    pub fn name(&self) -> &'static str {
        match self {
            Fig2Core::N11 => "N11",
            Fig2Core::C4 => "C4",
            Fig2Core::K4 => "K4",
            Fig2Core::T11 => "T11",
            Fig2Core::D11 => "D11",
            Fig2Core::X1c(_) => "X1c",
            Fig2Core::X1cOpen(_) => "X1c_open",
        }
    }

    /// The path parameter of the two `c`-families.
    pub fn param(&self) -> Option<usize> {
        match self {
            Fig2Core::X1c(c) | Fig2Core::X1cOpen(c) => Some(*c),
            _ => None,
        }
    }

    /// Builds a core from its name and, for `X1c`/`X1c_open`, its parameter.
    pub fn from_parts(name: &str, c: Option<usize>) -> Result<Fig2Core> {
        let needs_c = |c: Option<usize>| {
            c.filter(|&c| c >= 1)
                .ok_or_else(|| Error::InvalidParameter(format!("{name} needs a parameter c >= 1")))
        };
        let core = match name {
            "N11" => Fig2Core::N11,
            "C4" => Fig2Core::C4,
            "K4" => Fig2Core::K4,
            "T11" => Fig2Core::T11,
            "D11" => Fig2Core::D11,
            "X1c" => Fig2Core::X1c(needs_c(c)?),
            "X1c_open" => Fig2Core::X1cOpen(needs_c(c)?),
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        if core.param().is_none() && c.is_some() {
            return Err(Error::InvalidParameter(format!(
                "{name} takes no parameter"
            )));
        }
        Ok(core)
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Fig2Core::N11 | Fig2Core::T11 => 5,
            Fig2Core::C4 | Fig2Core::K4 | Fig2Core::D11 => 4,
            Fig2Core::X1c(1) | Fig2Core::X1cOpen(1) => 4,
            Fig2Core::X1c(c) | Fig2Core::X1cOpen(c) => c + 3,
        }
    }
}

impl fmt::Display for Fig2Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param() {
            Some(c) => write!(f, "{}({c})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for Fig2Core {
    type Err = Error;

    /// Accepts `N11`, `C4`, `K4`, `T11`, `D11`, `X1c(3)`, `X1c_open(2)`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('(') {
            None => Fig2Core::from_parts(s, None),
            Some((name, rest)) => {
                let c = rest
                    .strip_suffix(')')
                    .and_then(|digits| digits.parse().ok())
                    .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
                Fig2Core::from_parts(name, Some(c))
            }
        }
    }
}

pub fn fig2_core(core: Fig2Core) -> Result<Graph> {
    match core {
        Fig2Core::N11 => n_graph(1, 1, None),
        Fig2Core::C4 => grid(1, 1),
        Fig2Core::K4 => x_graph(1, 1),
        Fig2Core::T11 => t_graph(1, 1, None),
        Fig2Core::D11 => d_graph(1, 1),
        Fig2Core::X1c(c) => {
            if c == 0 {
                return Err(Error::InvalidParameter("X1c needs c >= 1".into()));
            }
            x_graph(1, c)
        }
        Fig2Core::X1cOpen(c) => {
            let g = fig2_core(Fig2Core::X1c(c))?;
            let a = g.vertex_at(Coord::int(0, 0)).expect("corner present");
            let b = g.vertex_at(Coord::int(0, 1)).expect("corner present");
            let edges: Vec<_> = g.edges().filter(|&e| e != (a.min(b), a.max(b))).collect();
            Graph::new(g.order(), &edges)?.with_coords(g.coords().to_vec())
        }
    }
}

/// A fixture graph with its marked vertex `v` and witness `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub graph: Graph,
    pub v: usize,
    pub u: usize,
}

type Point = (i64, i64);

/// Builds a fixture from named points given in doubled coordinates.
fn fixture(points: &[(&str, Point)], edges: &[(&str, &str)], v: &str, u: &str) -> Result<Fixture> {
    scaled_fixture(points, 2, edges, v, u)
}

/// Builds a fixture from named points whose coordinates are `point / scale`.
fn scaled_fixture(
    points: &[(&str, Point)],
    scale: i64,
    edges: &[(&str, &str)],
    v: &str,
    u: &str,
) -> Result<Fixture> {
    let id = |name: &str| {
        points
            .iter()
            .position(|(n, _)| *n == name)
            .expect("fixture names are consistent")
    };
    let pairs: Vec<_> = edges.iter().map(|&(p, q)| (id(p), id(q))).collect();
    let coords = points
        .iter()
        .map(|&(_, (x, y))| {
            Some(Coord::new(
                Rational64::new(x, scale),
                Rational64::new(y, scale),
            ))
        })
        .collect();
    let graph = Graph::new(points.len(), &pairs)?.with_coords(coords)?;
    Ok(Fixture {
        graph,
        v: id(v),
        u: id(u),
    })
}

const GRID_2X1: [(&str, Point); 6] = [
    ("00", (0, 0)),
    ("10", (2, 0)),
    ("20", (4, 0)),
    ("01", (0, 2)),
    ("11", (2, 2)),
    ("21", (4, 2)),
];

const GRID_2X1_EDGES: [(&str, &str); 7] = [
    ("00", "10"),
    ("10", "20"),
    ("01", "11"),
    ("11", "21"),
    ("00", "01"),
    ("10", "11"),
    ("20", "21"),
];

const LEFT_CENTER: [(&str, &str); 4] = [("00", "c0"), ("10", "c0"), ("01", "c0"), ("11", "c0")];
const RIGHT_CENTER: [(&str, &str); 5] = [
    ("10", "c1"),
    ("11", "c1"),
    ("20", "c1"),
    ("21", "c1"),
    ("c0", "c1"),
];

fn with_centers(centers: usize) -> Vec<(&'static str, Point)> {
    let mut points = GRID_2X1.to_vec();
    if centers >= 1 {
        points.push(("c0", (1, 1)));
    }
    if centers >= 2 {
        points.push(("c1", (3, 1)));
    }
    points
}

fn g5_like(with_center: bool) -> Result<Fixture> {
    let mut points = vec![
        ("00", (0, 0)),
        ("02", (0, 2)),
        ("20", (2, 0)),
        ("22", (2, 2)),
        ("4n", (4, -1)),
        ("41", (4, 1)),
        ("43", (4, 3)),
    ];
    let mut edges = vec![
        ("00", "20"),
        ("00", "02"),
        ("02", "22"),
        ("22", "20"),
        ("22", "43"),
        ("22", "41"),
        ("20", "41"),
        ("43", "41"),
        ("20", "4n"),
        ("41", "4n"),
    ];
    if with_center {
        points.push(("11", (1, 1)));
        edges.extend([("11", "00"), ("11", "20"), ("11", "02"), ("11", "22")]);
    }
    fixture(&points, &edges, "22", "4n")
}

/// Fixture `G_i` for `i` in `1..=9`. Coordinates are the drawing positions
/// halved, so the grid-like fixtures sit on the unit lattice.
pub fn base_case_fixture(i: usize) -> Result<Fixture> {
    match i {
        1 => {
            let mut edges = GRID_2X1_EDGES.to_vec();
            edges.extend(LEFT_CENTER);
            edges.extend(RIGHT_CENTER);
            fixture(&with_centers(2), &edges, "10", "21")
        }
        2 => {
            let mut edges = GRID_2X1_EDGES.to_vec();
            edges.extend(LEFT_CENTER);
            fixture(&with_centers(1), &edges, "10", "21")
        }
        3 => fixture(&with_centers(0), &GRID_2X1_EDGES, "10", "21"),
        4 => {
            // a 1x2 strip drawn sideways with its two middle rungs missing
            let points = [
                ("00", (0, 0)),
                ("10", (0, 2)),
                ("20", (0, 4)),
                ("01", (4, 0)),
                ("11", (4, 2)),
                ("21", (4, 4)),
                ("c0", (2, 1)),
                ("c1", (2, 3)),
            ];
            let mut edges = vec![
                ("00", "10"),
                ("20", "10"),
                ("01", "11"),
                ("21", "11"),
                ("10", "11"),
            ];
            edges.extend(LEFT_CENTER);
            edges.extend(RIGHT_CENTER);
            fixture(&points, &edges, "10", "01")
        }
        5 => g5_like(true),
        6 => g5_like(false),
        7 => {
            let points = [
                ("00", (0, 0)),
                ("02", (2, 0)),
                ("04", (4, 0)),
                ("1n", (-1, 2)),
                ("11", (1, 2)),
                ("13", (3, 2)),
                ("15", (5, 2)),
            ];
            let edges = [
                ("00", "02"),
                ("00", "1n"),
                ("00", "11"),
                ("02", "11"),
                ("02", "13"),
                ("02", "04"),
                ("04", "13"),
                ("04", "15"),
                ("13", "15"),
                ("1n", "11"),
                ("11", "13"),
            ];
            fixture(&points, &edges, "13", "00")
        }
        8 => {
            // quadrupled coordinates; "w" is the second-layer copy of the
            // center, drawn a quarter step off it
            let points = [
                ("00", (0, 0)),
                ("10", (4, 0)),
                ("20", (8, 0)),
                ("01", (0, 4)),
                ("11", (4, 4)),
                ("21", (8, 4)),
                ("02", (0, 8)),
                ("12", (4, 8)),
                ("22", (8, 8)),
                ("w", (5, 5)),
            ];
            let edges = [
                ("00", "10"),
                ("20", "10"),
                ("01", "11"),
                ("21", "11"),
                ("00", "01"),
                ("10", "11"),
                ("20", "21"),
                ("11", "w"),
                ("01", "w"),
                ("10", "w"),
                ("12", "w"),
                ("02", "12"),
                ("12", "11"),
                ("02", "01"),
                ("21", "22"),
                ("22", "12"),
                ("22", "w"),
                ("01", "12"),
                ("00", "11"),
                ("10", "21"),
                ("w", "21"),
            ];
            scaled_fixture(&points, 4, &edges, "01", "10")
        }
        9 => {
            let mut edges = GRID_2X1_EDGES.to_vec();
            edges.extend([("00", "11"), ("10", "21")]);
            fixture(&with_centers(0), &edges, "10", "01")
        }
        _ => Err(Error::UnknownFixture(i)),
    }
}
