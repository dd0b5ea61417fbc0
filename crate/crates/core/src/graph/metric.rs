use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

const UNREACHED: u32 = u32::MAX;

/// Breadth-first search from every vertex. Fails on disconnected input,
/// naming a pair of mutually unreachable vertices.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.order();
    let mut d = vec![UNREACHED; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let next = row[v] + 1;
            for &w in g.neighbors(v) {
                if row[w] == UNREACHED {
                    row[w] = next;
                    queue.push_back(w);
                }
            }
        }
        if let Some(t) = row.iter().position(|&x| x == UNREACHED) {
            return Err(Error::Disconnected(s, t));
        }
    }
    Ok(DistanceMatrix { n, d })
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, v: usize, w: usize) -> u32 {
        self.d[v * self.n + w]
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.eccentricity(v)).collect()
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    /// Vertices whose eccentricity equals the diameter.
    pub fn peripheral_vertices(&self) -> Vec<usize> {
        let ecc = self.eccentricities();
        let diam = ecc.iter().copied().max().unwrap_or(0);
        (0..self.n).filter(|&v| ecc[v] == diam).collect()
    }
}
