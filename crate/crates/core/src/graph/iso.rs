//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both routines start from color refinement: vertices are colored by degree
//! and recolored by the multiset of neighbor colors until the partition is
//! stable. Colors are assigned by sorting signatures, so isomorphic graphs
//! receive identical colorings and any isomorphism must preserve colors.

use std::cmp::Ordering;

use super::Graph;

/// Stable coloring from iterated degree refinement. Color ids are canonical:
/// isomorphic graphs get the same multiset of (vertex color) values.
pub fn color_refinement(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| uniq.binary_search(s).expect("signature present") as u32)
            .collect();
        let next_classes = uniq.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// True iff an adjacency-preserving bijection exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let cg = color_refinement(g);
    let ch = color_refinement(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }

    let order = search_order(g, &cg);
    let mut state = Matcher {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0)
}

/// Rarest color first, then breadth-first so each vertex after the first in
/// its component has an already-placed neighbor.
fn search_order(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.order();
    let mut freq = std::collections::HashMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&v| (freq[&colors[v]], colors[v], v));
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in seeds {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| !placed[w])
                .collect();
            next.sort_by_key(|&w| (freq[&colors[w]], colors[w], w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [u32],
    ch: &'a [u32],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.order() {
            if self.used[w] || self.ch[w] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(v, u) == self.h.has_edge(w, self.map[u]));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }
}

/// Isomorphism-invariant code of a graph on at most 64 vertices: the
/// lexicographically largest column-wise upper-triangle adjacency string over
/// all vertex orderings that list refinement color classes contiguously.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    columns: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }
}

/// Canonical code plus a relabeling `perm` (vertex `v` goes to `perm[v]`)
/// under which the graph's adjacency spells out that code.
pub fn canonical_form(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    assert!(n <= 64, "canonical_form supports at most 64 vertices");
    let colors = color_refinement(g);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (colors[v], v));
    let cells: Vec<u32> = by_color.iter().map(|&v| colors[v]).collect();

    let mut search = CanonSearch {
        g,
        colors: &colors,
        cells: &cells,
        placed: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    let (columns, order) = search.best.expect("at least one ordering exists");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (CanonicalForm { n, columns }, perm)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colors: &'a [u32],
    cells: &'a [u32],
    placed: Vec<usize>,
    columns: Vec<u64>,
    used: Vec<bool>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, i: usize) {
        let n = self.g.order();
        if i == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.columns.as_slice() > b.as_slice(),
            };
            if better {
                self.best = Some((self.columns.clone(), self.placed.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.cells[i] {
                continue;
            }
            let col = self.placed.iter().fold(0u64, |acc, &u| {
                (acc << 1) | u64::from(self.g.has_edge(u, v))
            });
            self.columns.push(col);
            let keep = match &self.best {
                None => true,
                Some((b, _)) => self.columns.as_slice().cmp(&b[..=i]) != Ordering::Less,
            };
            if keep {
                self.used[v] = true;
                self.placed.push(v);
                self.run(i + 1);
                self.placed.pop();
                self.used[v] = false;
            }
            self.columns.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c4 = cycle(4);
        let relabeled = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&c4, &relabeled));
        assert_eq!(canonical_form(&c4).0, canonical_form(&relabeled).0);
    }

    #[test]
    fn k4_is_not_c4() {
        assert!(!are_isomorphic(&complete(4), &cycle(4)));
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles));
        assert_ne!(
            canonical_form(&cycle(6)).0,
            canonical_form(&two_triangles).0
        );
    }

    #[test]
    fn canonical_permutation_reproduces_code() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let (form, perm) = canonical_form(&g);
        let h = g.permute(&perm);
        let (form2, _) = canonical_form(&h);
        assert_eq!(form, form2);
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn refinement_separates_path_positions() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = color_refinement(&p4);
        assert_eq!(c[0], c[3]);
        assert_eq!(c[1], c[2]);
        assert_ne!(c[0], c[1]);
    }
}
