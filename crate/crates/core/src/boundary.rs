//! Steinerberger and CEJZ boundaries and the boundary stability number.
//!
//! For vertices `v`, `u` of a connected graph,
//! `β(v, u) = Σ_{w ∈ N(v)} [d(v, u) − d(w, u)]` and `β(v) = max_u β(v, u)`.
//! On two or more vertices `v` is a Steinerberger boundary vertex exactly when
//! `β(v) ≥ 1`; the mean-distance form of the definition is kept alongside as
//! [`steinerberger_literal`] so the two can be checked against each other.
//! The single-vertex graph is its own boundary under both notions.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistanceMatrix, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexBoundary {
    pub id: usize,
    #[serde(rename = "ecc")]
    pub eccentricity: u32,
    pub beta: i64,
    /// Every `u` attaining `β(v)`.
    pub beta_witnesses: Vec<usize>,
    /// Every `u` with `d(w, u) <= d(v, u)` for all neighbors `w`.
    #[serde(skip)]
    pub cejz_witnesses: Vec<usize>,
    #[serde(rename = "cejz")]
    pub in_cejz: bool,
    #[serde(rename = "steinerberger")]
    pub in_steinerberger: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryAnalysis {
    #[serde(rename = "n")]
    pub vertex_count: usize,
    pub diameter: u32,
    pub max_degree: usize,
    pub vertices: Vec<VertexBoundary>,
}

impl BoundaryAnalysis {
    /// ∂G, ascending.
    pub fn steinerberger_set(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.in_steinerberger)
            .map(|v| v.id)
            .collect()
    }

    /// (∂G)′, ascending.
    pub fn cejz_set(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.in_cejz)
            .map(|v| v.id)
            .collect()
    }

    pub fn boundary_size(&self) -> usize {
        self.vertices.iter().filter(|v| v.in_steinerberger).count()
    }

    pub fn cejz_size(&self) -> usize {
        self.vertices.iter().filter(|v| v.in_cejz).count()
    }

    pub fn betas(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.beta).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("analysis serializes")
    }
}

pub fn beta_pair(g: &Graph, d: &DistanceMatrix, v: usize, u: usize) -> i64 {
    let dvu = i64::from(d.get(v, u));
    g.neighbors(v)
        .iter()
        .map(|&w| dvu - i64::from(d.get(w, u)))
        .sum()
}

/// `β(v)` together with all maximizing `u`, ascending.
pub fn beta(g: &Graph, d: &DistanceMatrix, v: usize) -> (i64, Vec<usize>) {
    let mut best = i64::MIN;
    let mut witnesses = Vec::new();
    for u in 0..g.order() {
        let b = beta_pair(g, d, v, u);
        if b > best {
            best = b;
            witnesses.clear();
        }
        if b == best {
            witnesses.push(u);
        }
    }
    (best, witnesses)
}

pub fn is_cejz_witness(g: &Graph, d: &DistanceMatrix, v: usize, u: usize) -> bool {
    let dvu = d.get(v, u);
    g.neighbors(v).iter().all(|&w| d.get(w, u) <= dvu)
}

/// Mean-distance form: some `u` has `(1/deg v) Σ_w d(w, u) < d(v, u)`.
/// Evaluated in exact rationals.
pub fn steinerberger_literal(g: &Graph, d: &DistanceMatrix, v: usize) -> bool {
    if g.order() == 1 {
        return true;
    }
    let deg = g.degree(v) as i64;
    if deg == 0 {
        return false;
    }
    (0..g.order()).any(|u| {
        let total: i64 = g.neighbors(v).iter().map(|&w| i64::from(d.get(w, u))).sum();
        Rational64::new(total, deg) < Rational64::from_integer(i64::from(d.get(v, u)))
    })
}

/// ∂G, ascending. Fails on disconnected input.
pub fn steinerberger_boundary(g: &Graph) -> Result<Vec<usize>> {
    let d = distance_matrix(g)?;
    if g.order() == 1 {
        return Ok(vec![0]);
    }
    Ok((0..g.order()).filter(|&v| beta(g, &d, v).0 >= 1).collect())
}

/// (∂G)′, ascending. Fails on disconnected input.
pub fn cejz_boundary(g: &Graph) -> Result<Vec<usize>> {
    let d = distance_matrix(g)?;
    Ok((0..g.order())
        .filter(|&v| (0..g.order()).any(|u| is_cejz_witness(g, &d, v, u)))
        .collect())
}

pub fn full_analysis(g: &Graph) -> Result<BoundaryAnalysis> {
    let d = distance_matrix(g)?;
    Ok(analyze(g, &d, 0))
}

/// Analysis from a precomputed distance matrix.
pub fn analyze_with(g: &Graph, d: &DistanceMatrix) -> BoundaryAnalysis {
    analyze(g, d, 0)
}

/// Analysis with every β shifted by `bias` before membership is decided.
/// Only meaningful as a deliberately broken implementation for negative
/// controls in the verification harness.
#[doc(hidden)]
pub fn analyze_biased(g: &Graph, d: &DistanceMatrix, bias: i64) -> BoundaryAnalysis {
    analyze(g, d, bias)
}

fn analyze(g: &Graph, d: &DistanceMatrix, bias: i64) -> BoundaryAnalysis {
    let n = g.order();
    let vertices = (0..n)
        .map(|v| {
            let (b, beta_witnesses) = beta(g, d, v);
            let b = b + bias;
            let cejz_witnesses: Vec<usize> =
                (0..n).filter(|&u| is_cejz_witness(g, d, v, u)).collect();
            VertexBoundary {
                id: v,
                eccentricity: d.eccentricity(v),
                beta: b,
                beta_witnesses,
                in_cejz: !cejz_witnesses.is_empty(),
                cejz_witnesses,
                in_steinerberger: n == 1 || b >= 1,
            }
        })
        .collect();
    BoundaryAnalysis {
        vertex_count: n,
        diameter: d.diameter(),
        max_degree: g.max_degree(),
        vertices,
    }
}

/// Both sides of `|∂G| >= |V| / (2 Δ diam G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoperimetricCheck {
    pub boundary_size: usize,
    pub bound: Rational64,
    pub holds: bool,
}

pub fn isoperimetric_check(a: &BoundaryAnalysis) -> Result<IsoperimetricCheck> {
    if a.vertex_count < 2 {
        return Err(Error::TooFewVertices);
    }
    let bound = Rational64::new(
        a.vertex_count as i64,
        2 * a.max_degree as i64 * i64::from(a.diameter),
    );
    let boundary_size = a.boundary_size();
    Ok(IsoperimetricCheck {
        boundary_size,
        bound,
        holds: Rational64::from_integer(boundary_size as i64) >= bound,
    })
}

/// A degree-2 vertex is a boundary vertex exactly when it lies on a cycle.
/// Returns the cycle test; the caller may compare it with β.
pub fn degree2_boundary_criterion(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    if g.degree(v) != 2 {
        return Err(Error::NotDegreeTwo {
            vertex: v,
            degree: g.degree(v),
        });
    }
    Ok(g.has_cycle_through(v))
}
