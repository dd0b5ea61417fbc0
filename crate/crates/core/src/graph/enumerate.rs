//! One representative per isomorphism class of small graphs.
//!
//! Every graph on `n` vertices arises from some graph on `n - 1` vertices by
//! adding a vertex with an arbitrary neighborhood, so the classes on `n`
//! vertices are the canonical forms of those extensions.

use std::collections::BTreeMap;

use super::{canonical_form, Graph};
use crate::error::{Error, Result};

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 7;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedOrder {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(())
}

/// All graphs on `n` vertices up to isomorphism, connected or not, each in
/// its canonical labeling. Sorted by edge count, then canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut classes: BTreeMap<_, Graph> = BTreeMap::new();
        for base in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut g = Graph::empty(k);
                for (v, w) in base.edges() {
                    g.add_edge(v, w)?;
                }
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        g.add_edge(v, k - 1)?;
                    }
                }
                g.finish();
                let (form, perm) = canonical_form(&g);
                classes
                    .entry((g.size(), form))
                    .or_insert_with(|| g.permute(&perm));
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// Connected graphs on `n` vertices up to isomorphism, in a fixed order.
pub fn enumerate_connected(n: usize) -> Result<std::vec::IntoIter<Graph>> {
    let graphs: Vec<Graph> = all_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect();
    Ok(graphs.into_iter())
}
