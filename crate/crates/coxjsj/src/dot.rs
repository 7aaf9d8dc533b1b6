//! Deterministic DOT output for diagrams and decomposition trees.

use coxjsj_core::jsj::GraphOfGroups;
use coxjsj_core::{CoxeterSystem, GeneratorSubset};

fn joined(label: &GeneratorSubset) -> String {
    let names: Vec<&str> = label.iter().map(|g| g.as_str()).collect();
    names.join(",")
}

/// The presentation diagram: one node per generator, one labeled edge per
/// finite order. Infinite pairs draw nothing.
pub fn system_dot(sys: &CoxeterSystem) -> String {
    let mut out = String::from("graph diagram {\n");
    for g in sys.generators() {
        out.push_str(&format!("  \"{}\";\n", g));
    }
    for (s, t, m) in sys.finite_pairs() {
        out.push_str(&format!("  \"{}\" -- \"{}\" [label=\"{}\"];\n", s, t, m));
    }
    out.push_str("}\n");
    out
}

/// A decomposition tree: nodes carry comma-joined vertex labels, edges the
/// comma-joined separator.
pub fn tree_dot(gog: &GraphOfGroups) -> String {
    let mut out = String::from("graph tree {\n");
    for (i, label) in gog.vertex_labels().iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, joined(label)));
    }
    for (i, j, label) in gog.edges() {
        out.push_str(&format!(
            "  v{} -- v{} [label=\"{}\"];\n",
            i,
            j,
            joined(label)
        ));
    }
    out.push_str("}\n");
    out
}
