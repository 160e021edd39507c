use std::fmt::Write;

use super::{ClassDecomposition, QuotientGraph};

/// Graphviz rendering with one edge per child occurrence. Matrices are
/// labeled symbolically unless `weights` is false or the graph is unweighted.
pub fn to_dot(g: &QuotientGraph, classes: Option<&ClassDecomposition>, weights: bool) -> String {
    let mut s = String::new();
    s.push_str("digraph quotient {\n  rankdir=TB;\n  node [shape=circle];\n");
    let essential = classes.and_then(ClassDecomposition::essential_vertices);
    for v in 0..g.vertex_count() {
        if essential.is_some_and(|e| e.contains(&v)) {
            continue;
        }
        writeln!(s, "  \"{0}\" [label=\"{0}\"];", g.label(v)).unwrap();
    }
    if let Some(e) = essential {
        s.push_str("  subgraph cluster_essential {\n    label=\"essential\";\n    style=dotted;\n");
        for &v in e {
            writeln!(s, "    \"{0}\" [label=\"{0}\"];", g.label(v)).unwrap();
        }
        s.push_str("  }\n");
    }
    for e in &g.edges {
        write!(s, "  \"{}\" -> \"{}\"", g.label(e.from), g.label(e.to)).unwrap();
        if weights && g.is_weighted() {
            write!(s, " [label=\"{}\"]", e.matrix.symbolic()).unwrap();
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    s
}
