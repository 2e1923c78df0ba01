//! Graphviz export of a decomposition: one box per node labelled with its bag,
//! base-set vertices starred.

use std::fmt::Write as _;

use htw_core::TreeHDecomposition;

pub fn decomposition_to_dot(d: &TreeHDecomposition) -> String {
    let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
    for (id, node) in d.nodes.iter().enumerate() {
        let label: Vec<String> = node
            .bag
            .iter()
            .map(|v| if d.base_set.contains(v) { format!("{v}*") } else { v.to_string() })
            .collect();
        let _ = writeln!(out, "  n{id} [label=\"{{{}}}\"];", label.join(", "));
    }
    for (id, node) in d.nodes.iter().enumerate() {
        if let Some(parent) = node.parent {
            let _ = writeln!(out, "  n{parent} -> n{id};");
        }
    }
    out.push_str("}\n");
    out
}

/// The DOT document emitted when no decomposition exists.
pub fn rejected_dot(k: usize) -> String {
    format!("digraph decomposition {{\n  label=\"H-treewidth exceeds {k}\";\n}}\n")
}
