//! Structural recognition of graphs with at most four Steinerberger boundary
//! vertices.
//!
//! Recognition never looks at boundary membership: trees are read off their
//! leaves and branch vertices, tripods off their unique triangle, and the
//! remaining non-tree shapes are found by regenerating every core with every
//! distribution of the spare vertices over its β = 1 sites and testing
//! isomorphism. The directly computed `|∂G|` is reported alongside so the two
//! can be cross-checked.

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::{json, Value};

use crate::boundary::{cejz_boundary, full_analysis};
use crate::error::{Error, Result};
use crate::families::{
    attach_path, double_spider, fig2_core, path, spider, subdivided_star, tripod, Fig2Core,
};
use crate::graph::{are_isomorphic, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FourLeafShape {
    /// Subdivided `K_{1,4}`; arms sorted in non-increasing order.
    Spider([usize; 4]),
    /// Two degree-3 vertices joined by a path of `bridge` edges. Each side's
    /// arms are sorted non-increasing and the larger side comes first.
    DoubleSpider {
        left: [usize; 2],
        bridge: usize,
        right: [usize; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    SingleVertex,
    Path {
        vertices: usize,
    },
    /// Arms sorted non-increasing.
    ThreeLeafTree {
        arms: [usize; 3],
    },
    /// Arm lengths at the triangle vertices, in ascending vertex-id order.
    Tripod {
        arms: [usize; 3],
    },
    FourLeafTree(FourLeafShape),
    /// Path lengths at the core's β = 1 vertices, in ascending core-id order.
    Fig2Core {
        core: Fig2Core,
        paths: Vec<usize>,
    },
    Unclassified,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::SingleVertex => "SingleVertex",
            Family::Path { .. } => "Path",
            Family::ThreeLeafTree { .. } => "ThreeLeafTree",
            Family::Tripod { .. } => "Tripod",
            Family::FourLeafTree(_) => "FourLeafTree",
            Family::Fig2Core { .. } => "Fig2Core",
            Family::Unclassified => "Unclassified",
        }
    }

    /// The boundary size every member of the family has.
    pub fn implied_boundary_size(&self) -> Option<usize> {
        match self {
            Family::SingleVertex => Some(1),
            Family::Path { .. } => Some(2),
            Family::ThreeLeafTree { .. } | Family::Tripod { .. } => Some(3),
            Family::FourLeafTree(_) | Family::Fig2Core { .. } => Some(4),
            Family::Unclassified => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDescriptor {
    pub family: Family,
    /// `|∂G|` computed directly.
    pub boundary_size: usize,
}

impl FamilyDescriptor {
    pub fn tag(&self) -> &'static str {
        self.family.tag()
    }

    pub fn params(&self) -> Value {
        match &self.family {
            Family::SingleVertex => json!({}),
            Family::Path { vertices } => json!({ "vertices": vertices }),
            Family::ThreeLeafTree { arms } | Family::Tripod { arms } => json!({ "arms": arms }),
            Family::FourLeafTree(FourLeafShape::Spider(arms)) => {
                json!({ "shape": "spider", "arms": arms })
            }
            Family::FourLeafTree(FourLeafShape::DoubleSpider {
                left,
                bridge,
                right,
            }) => json!({
                "shape": "double_spider",
                "left": left,
                "bridge": bridge,
                "right": right,
            }),
            Family::Fig2Core { core, paths } => json!({
                "core": core.name(),
                "c": core.param(),
                "paths": paths,
            }),
            Family::Unclassified => json!({ "boundary_size": self.boundary_size }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }
}

impl Serialize for FamilyDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FamilyDescriptor", 3)?;
        s.serialize_field("tag", self.tag())?;
        s.serialize_field("params", &self.params())?;
        s.serialize_field("boundary_size", &self.boundary_size)?;
        s.end()
    }
}

/// Recognizes `g` and reports its directly computed `|∂G|`.
pub fn classify(g: &Graph) -> Result<FamilyDescriptor> {
    let boundary_size = full_analysis(g)?.boundary_size();
    Ok(FamilyDescriptor {
        family: recognize(g)?,
        boundary_size,
    })
}

/// Structural recognition only. `g` must be connected.
pub fn recognize(g: &Graph) -> Result<Family> {
    g.require_connected()?;
    let n = g.order();
    if n == 1 {
        return Ok(Family::SingleVertex);
    }
    if g.is_tree() {
        return Ok(recognize_tree(g));
    }
    if let Some(arms) = tripod_arms(g) {
        return Ok(Family::Tripod { arms });
    }
    recognize_core(g)
}

/// Follows the path leaving `from` through `to` until a vertex whose degree
/// is not 2. Returns the number of edges walked and the end vertex.
fn walk(g: &Graph, from: usize, to: usize) -> (usize, usize) {
    let (mut prev, mut cur, mut len) = (from, to, 1);
    while g.degree(cur) == 2 {
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
        match next {
            Some(next) => {
                prev = cur;
                cur = next;
                len += 1;
            }
            None => break,
        }
    }
    (len, cur)
}

fn sorted_desc<const K: usize>(mut arms: [usize; K]) -> [usize; K] {
    arms.sort_unstable_by(|a, b| b.cmp(a));
    arms
}

fn recognize_tree(g: &Graph) -> Family {
    let n = g.order();
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    match g.leaves().len() {
        2 => Family::Path { vertices: n },
        3 => {
            let center = branch[0];
            let arms: Vec<usize> = g
                .neighbors(center)
                .iter()
                .map(|&w| walk(g, center, w).0)
                .collect();
            Family::ThreeLeafTree {
                arms: sorted_desc([arms[0], arms[1], arms[2]]),
            }
        }
        4 if branch.len() == 1 => {
            let center = branch[0];
            let arms: Vec<usize> = g
                .neighbors(center)
                .iter()
                .map(|&w| walk(g, center, w).0)
                .collect();
            Family::FourLeafTree(FourLeafShape::Spider(sorted_desc([
                arms[0], arms[1], arms[2], arms[3],
            ])))
        }
        4 => {
            let (x, y) = (branch[0], branch[1]);
            let mut bridge = 0;
            let mut side = |center: usize| {
                let mut arms = Vec::new();
                for &w in g.neighbors(center) {
                    let (len, end) = walk(g, center, w);
                    if g.degree(end) == 1 {
                        arms.push(len);
                    } else {
                        bridge = len;
                    }
                }
                sorted_desc([arms[0], arms[1]])
            };
            let (a, b) = (side(x), side(y));
            let (left, right) = if a >= b { (a, b) } else { (b, a) };
            Family::FourLeafTree(FourLeafShape::DoubleSpider {
                left,
                bridge,
                right,
            })
        }
        _ => Family::Unclassified,
    }
}

/// Arm lengths if `g` is a triangle with at most one path hanging off each
/// of its vertices.
fn tripod_arms(g: &Graph) -> Option<[usize; 3]> {
    if g.size() != g.order() {
        return None;
    }
    let core = g.two_core();
    if core.len() != 3 {
        return None;
    }
    let mut arms = [0; 3];
    for (i, &t) in core.iter().enumerate() {
        let off: Vec<usize> = g
            .neighbors(t)
            .iter()
            .copied()
            .filter(|w| !core.contains(w))
            .collect();
        match off.as_slice() {
            [] => {}
            [w] => {
                let (len, end) = walk(g, t, *w);
                if g.degree(end) != 1 {
                    return None;
                }
                arms[i] = len;
            }
            _ => return None,
        }
    }
    Some(arms)
}

/// The β = 1 vertices of a core, ascending: the sites where paths may hang.
pub fn attachment_sites(core: Fig2Core) -> Result<Vec<usize>> {
    let analysis = full_analysis(&fig2_core(core)?)?;
    Ok(analysis
        .vertices
        .iter()
        .filter(|v| v.in_steinerberger && v.beta == 1)
        .map(|v| v.id)
        .collect())
}

/// `core` with a path of `paths[i]` vertices hung at its `i`-th site.
pub fn core_with_paths(core: Fig2Core, paths: &[usize]) -> Result<Graph> {
    let sites = attachment_sites(core)?;
    if sites.len() != paths.len() {
        return Err(Error::InvalidParameter(format!(
            "{core} has {} attachment sites, got {} path lengths",
            sites.len(),
            paths.len()
        )));
    }
    let mut g = fig2_core(core)?;
    for (&site, &len) in sites.iter().zip(paths) {
        g = attach_path(&g, site, len)?;
    }
    Ok(g)
}

/// Ways to write `total` as `parts` non-negative summands, lexicographically
/// largest first.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn recognize_core(g: &Graph) -> Result<Family> {
    let n = g.order();
    // every core with paths hung at its β = 1 sites has maximum degree <= 4
    if g.max_degree() > 4 {
        return Ok(Family::Unclassified);
    }
    for core in Fig2Core::all(n.saturating_sub(3).max(1)) {
        let k = core.vertex_count();
        if k > n {
            continue;
        }
        let base = fig2_core(core)?;
        if g.size() != base.size() + (n - k) {
            continue;
        }
        let sites = attachment_sites(core)?;
        for paths in compositions(n - k, sites.len()) {
            if are_isomorphic(&core_with_paths(core, &paths)?, g) {
                return Ok(Family::Fig2Core { core, paths });
            }
        }
    }
    Ok(Family::Unclassified)
}

/// Rebuilds the canonical member of a recognized family.
pub fn regenerate(family: &Family) -> Result<Graph> {
    match family {
        Family::SingleVertex => path(1),
        Family::Path { vertices } => path(*vertices),
        Family::ThreeLeafTree { arms } => subdivided_star(arms),
        Family::Tripod { arms } => tripod(arms[0], arms[1], arms[2]),
        Family::FourLeafTree(FourLeafShape::Spider(arms)) => spider(*arms),
        Family::FourLeafTree(FourLeafShape::DoubleSpider {
            left,
            bridge,
            right,
        }) => double_spider(left[0], left[1], *bridge, right[0], right[1]),
        Family::Fig2Core { core, paths } => core_with_paths(*core, paths),
        Family::Unclassified => Err(Error::InvalidParameter(
            "an unclassified graph has no family instance to regenerate".into(),
        )),
    }
}

/// Whether recognition and the direct boundary computation agree: a
/// recognized family has exactly its implied boundary size and regenerates
/// to an isomorphic graph; an unrecognized graph has `|∂G| >= 5`.
pub fn cross_validate(g: &Graph) -> Result<bool> {
    let d = classify(g)?;
    agrees(g, &d.family, d.boundary_size)
}

/// The agreement test behind [`cross_validate`], for a family recognized in
/// `g` and a boundary size obtained elsewhere.
pub fn agrees(g: &Graph, family: &Family, boundary_size: usize) -> Result<bool> {
    Ok(match family.implied_boundary_size() {
        Some(size) => size == boundary_size && are_isomorphic(&regenerate(family)?, g),
        None => boundary_size >= 5,
    })
}

/// `|(∂G)′|`.
pub fn cejz_size(g: &Graph) -> Result<usize> {
    Ok(cejz_boundary(g)?.len())
}
