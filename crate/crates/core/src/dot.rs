//! Graphviz export of the idempotent lattice.

use std::fmt::Write;

use crate::ideals::IdempotentLattice;

/// A DOT digraph with one node per idempotent, labeled by its sorted gap
/// part, and one edge per covering pair drawn from the smaller element up.
pub fn export_dot(lattice: &IdempotentLattice) -> String {
    let mut out = String::from("digraph idempotents {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, node) in lattice.nodes.iter().enumerate() {
        let label: Vec<String> = node.gap_part().iter().map(|g| g.to_string()).collect();
        let _ = writeln!(out, "  T{i} [label=\"T{i}: {{{}}}\"];", label.join(", "));
    }
    for (a, b) in &lattice.hasse_edges {
        let _ = writeln!(out, "  T{a} -> T{b};");
    }
    out.push_str("}\n");
    out
}
