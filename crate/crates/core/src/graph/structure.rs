use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0, None).iter().all(|&r| r)
    }

    /// Components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(None)
    }

    fn components_avoiding(&self, skip: Option<usize>) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX || Some(s) == skip {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            stack.push(s);
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in self.neighbors(v) {
                    if comp[w] == usize::MAX && Some(w) != skip {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn reach(&self, s: usize, skip: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] && Some(w) != skip {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.n <= 1 {
            return Ok(());
        }
        match self.reach(0, None).iter().position(|&r| !r) {
            Some(t) => Err(Error::Disconnected(0, t)),
            None => Ok(()),
        }
    }

    /// Articulation points via iterative low-link DFS, sorted ascending.
    pub fn cut_vertices(&self) -> Result<Vec<usize>> {
        self.require_connected()?;
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut parent = vec![usize::MAX; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let v = top.0;
                if top.1 < self.degree(v) {
                    let w = self.neighbors(v)[top.1];
                    top.1 += 1;
                    if disc[w] == usize::MAX {
                        parent[w] = v;
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, 0));
                    } else if w != parent[v] {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Whether some cycle of length at least three passes through `v`.
    ///
    /// Equivalent to two neighbors of `v` lying in one component of `G - v`.
    pub fn has_cycle_through(&self, v: usize) -> bool {
        let mut label = vec![usize::MAX; self.n];
        for (i, &a) in self.neighbors(v).iter().enumerate() {
            if label[a] != usize::MAX {
                return true;
            }
            label[a] = i;
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if y != v && label[y] == usize::MAX {
                        label[y] = i;
                        stack.push(y);
                    }
                }
            }
        }
        false
    }

    /// Connected with exactly `n - 1` edges. The single vertex is a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in ascending order of
    /// the original ids. Coordinate labels follow their vertices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for &v in &keep {
            for &w in self.neighbors(v) {
                if w > v && index[w] != usize::MAX {
                    g.add_edge(index[v], index[w])?;
                }
            }
        }
        g.finish();
        g.coords = keep.iter().map(|&v| self.coords[v]).collect();
        Ok(g)
    }

    /// Vertices left after repeatedly deleting vertices of degree at most one.
    pub fn two_core(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if removed[v] {
                continue;
            }
            removed[v] = true;
            for &w in self.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] <= 1 {
                        stack.push(w);
                    }
                }
            }
        }
        (0..self.n).filter(|&v| !removed[v]).collect()
    }

    /// Whether `G - v` is disconnected. Brute-force companion to
    /// [`Graph::cut_vertices`].
    pub fn separates(&self, v: usize) -> bool {
        if self.n <= 2 {
            return false;
        }
        self.components_avoiding(Some(v)).len() > 1
    }
}
