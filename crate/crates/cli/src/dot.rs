use std::fmt::Write;

use kappatree::tree::StructureTree;
use kappatree::VertexSet;

fn label(tree: &StructureTree, set: VertexSet) -> String {
    let names = tree.graph.set_labels(set).join(", ");
    format!("{{{names}}}")
        .replace('\\', "\\\\")
        .replace('"', "\\\"")
}

/// Separators as white circles, blocks as black boxes, edges labelled by the
/// cut id in the nested system.
pub fn emit_dot(tree: &StructureTree) -> String {
    let mut out = String::from("graph structure_tree {\n");
    for (s, &sep) in tree.separators.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{s} [label=\"{}\", shape=circle, style=filled, fillcolor=white];",
            label(tree, sep)
        );
    }
    for (b, block) in tree.blocks.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{} [label=\"{}\", shape=box, style=filled, fillcolor=black, fontcolor=white];",
            tree.node_of_block(b),
            label(tree, block.vertices)
        );
    }
    for e in &tree.edges {
        let _ = writeln!(
            out,
            "  n{} -- n{} [label=\"{}\"];",
            e.separator,
            tree.node_of_block(e.block),
            e.cut
        );
    }
    out.push_str("}\n");
    out
}
