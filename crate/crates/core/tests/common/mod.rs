//! Shared strategies and brute-force oracles for the integration tests.
//! The oracles deliberately avoid the library's own algorithms.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::VecDeque;

use graph_boundary::Graph;
use proptest::prelude::*;

/// Random connected graph on `1..=max_n` vertices: a random spanning tree
/// (each vertex hangs off an earlier one) plus a random set of extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            parents,
            proptest::collection::vec(any::<u8>(), pairs),
        )
            .prop_map(|(n, parents, extra)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        // about one pair in four, so distances stay interesting
                        if extra[k] < 64 {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                edges.sort_unstable();
                edges.dedup();
                Graph::new(n, &edges).expect("valid edges")
            })
    })
}

/// Random permutation of `0..n`.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Adjacency matrix from the public neighbor lists.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            adj[v][w] = true;
        }
    }
    adj
}

/// All-pairs distances by Floyd–Warshall; `u32::MAX` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let adj = adjacency(g);
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for w in 0..n {
            if adj[v][w] {
                d[v][w] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = u32::MAX;
            }
        }
    }
    d
}

/// β(v) straight from the definition: max over u of Σ_{w ~ v} d(v,u) − d(w,u).
pub fn beta_oracle(g: &Graph, v: usize) -> i64 {
    let d = floyd_warshall(g);
    (0..g.order())
        .map(|u| {
            g.neighbors(v)
                .iter()
                .map(|&w| d[v][u] as i64 - d[w][u] as i64)
                .sum::<i64>()
        })
        .max()
        .expect("nonempty graph")
}

/// Steinerberger boundary from the mean-distance form of the definition,
/// compared by cross-multiplication; the lone vertex of `K1` is boundary.
pub fn steinerberger_oracle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    let d = floyd_warshall(g);
    (0..n)
        .filter(|&v| {
            let deg = g.degree(v) as i64;
            (0..n).any(|u| {
                let sum: i64 = g.neighbors(v).iter().map(|&w| d[w][u] as i64).sum();
                sum < deg * d[v][u] as i64
            })
        })
        .collect()
}

/// CEJZ boundary straight from the definition.
pub fn cejz_oracle(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let d = floyd_warshall(g);
    (0..n)
        .filter(|&v| (0..n).any(|u| g.neighbors(v).iter().all(|&w| d[w][u] <= d[v][u])))
        .collect()
}

/// Number of connected components by BFS.
pub fn component_count(adj: &[Vec<bool>], removed: Option<usize>) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                if adj[v][w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

/// Canonical adjacency bitmask by trying every permutation (n ≤ 6).
pub fn brute_canonical(adj: &[Vec<bool>]) -> u64 {
    let n = adj.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]][perm[j]] {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism classes of all graphs on `n` vertices by scanning every edge
/// bitmask: `(all, connected)` counts.
pub fn brute_force_class_counts(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut all = std::collections::BTreeSet::new();
    let mut connected = std::collections::BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        let code = brute_canonical(&adj);
        all.insert(code);
        if n > 0 && component_count(&adj, None) == 1 {
            connected.insert(code);
        }
    }
    (all.len(), connected.len())
}
