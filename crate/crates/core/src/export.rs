//! Graphviz DOT output and the coordinate sidecar for generated graphs.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::boundary::BoundaryAnalysis;
use crate::graph::Graph;

/// Undirected DOT graph. With an analysis, each vertex carries its β as an
/// external label and boundary vertices are filled red. Coordinate labels
/// become pinned positions.
pub fn to_dot(g: &Graph, analysis: Option<&BoundaryAnalysis>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let mut attrs = vec![format!("label=\"{v}\"")];
        if let Some(a) = analysis {
            let info = &a.vertices[v];
            attrs.push(format!("xlabel=\"{}\"", info.beta));
            let fill = if info.in_steinerberger {
                "red"
            } else {
                "lightblue"
            };
            attrs.push(format!("style=filled, fillcolor={fill}"));
        }
        if let Some(c) = g.coord(v) {
            let x = *c.x.numer() as f64 / *c.x.denom() as f64;
            let y = *c.y.numer() as f64 / *c.y.denom() as f64;
            attrs.push(format!("pos=\"{x},{y}!\""));
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).expect("writing to a String");
    }
    for (v, w) in g.edges() {
        writeln!(out, "  {v} -- {w};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

/// `{"coords": [[x_num, x_den, y_num, y_den] | null, ...]}` in vertex order.
pub fn coords_json(g: &Graph) -> String {
    let coords: Vec<Value> = g
        .coords()
        .iter()
        .map(|c| match c {
            Some(c) => json!(c.to_parts()),
            None => Value::Null,
        })
        .collect();
    json!({ "coords": coords }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::full_analysis;
    use crate::families::{grid, path};

    #[test]
    fn dot_lists_vertices_and_edges() {
        let g = path(3).unwrap();
        let dot = to_dot(&g, Some(&full_analysis(&g).unwrap()));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 [label=\"1\", xlabel=\"0\", style=filled, fillcolor=lightblue]"));
        assert!(dot.contains("xlabel=\"1\", style=filled, fillcolor=red"));
    }

    #[test]
    fn coords_sidecar() {
        let g = grid(1, 1).unwrap();
        assert_eq!(
            coords_json(&g),
            r#"{"coords":[[0,1,0,1],[1,1,0,1],[0,1,1,1],[1,1,1,1]]}"#
        );
        assert_eq!(coords_json(&path(1).unwrap()), r#"{"coords":[null]}"#);
    }
}
