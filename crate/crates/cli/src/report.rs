//! The JSON report document.
//!
//! Vertex lists are sorted by label and arrays follow the canonical cut
//! order of the library, so the serialized bytes depend only on the input
//! graph. Sections a command does not compute are omitted.

use kappatree::cuts::classify_cut;
use kappatree::decompose::{detect_exceptional, BlockOutcome, DecompositionReport};
use kappatree::tree::StructureTree;
use kappatree::{Analysis, Graph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub kappa: Option<usize>,
    pub trivial: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub separators: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub blocks: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slices: Option<Vec<SliceEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cuts: Option<Vec<CutEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tree: Option<TreeEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warnings: Option<Vec<WarningEntry>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub recursion: Option<Vec<RecursionEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceEntry {
    pub vertices: Vec<String>,
    pub separator: Vec<String>,
}

/// One cut of the full system; `nested` marks membership of the canonical
/// nested system and `class` is the block its tree class defines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutEntry {
    pub id: usize,
    pub vertices: Vec<String>,
    pub boundary: Vec<String>,
    pub mu: usize,
    #[serde(rename = "isA")]
    pub is_a: bool,
    #[serde(rename = "isB")]
    pub is_b: bool,
    pub nested: bool,
    pub class: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEntry {
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    pub kind: NodeKind,
    pub vertices: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Separator,
    Block,
}

/// A tree edge from a separator node to a block node, labelled by the id of
/// its cut in `cuts`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub from: usize,
    pub to: usize,
    pub cut: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarningEntry {
    pub cut: usize,
    pub block: usize,
    pub closed_side: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionEntry {
    pub block: usize,
    pub ideal_edges: Vec<[String; 2]>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<Box<ReportDocument>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Trivial,
    DepthLimit,
    Decomposed,
}

fn labels(g: &Graph, set: VertexSet) -> Vec<String> {
    g.set_labels(set).into_iter().map(str::to_owned).collect()
}

/// κ, Ω and the cut system with crossing numbers. Trivial graphs report
/// only `kappa` and `trivial`.
pub fn analysis_document(a: &Analysis) -> ReportDocument {
    let mut doc = ReportDocument {
        kappa: a.kappa(),
        trivial: a.is_trivial(),
        ..ReportDocument::default()
    };
    let Some(level) = a.level.as_ref() else {
        return doc;
    };
    let g = &a.graph;
    doc.omega = Some(level.omega.members.iter().map(|&w| labels(g, w)).collect());
    doc.mu_min = level.stats.mu_min;
    doc.cuts = Some(cut_entries(a, None));
    doc
}

fn cut_entries(a: &Analysis, tree: Option<&StructureTree>) -> Vec<CutEntry> {
    let (g, level) = (&a.graph, a.level.as_ref().unwrap());
    let sys = &level.system;
    let mut nested_id = vec![None; sys.len()];
    for (i, &p) in level.nested.parent.iter().enumerate() {
        nested_id[p] = Some(i);
    }
    sys.cuts
        .iter()
        .map(|c| {
            let class = class_of(tree, nested_id[c.id]);
            let kind = classify_cut(sys, c.id);
            CutEntry {
                id: c.id,
                vertices: labels(g, c.vertices),
                boundary: labels(g, c.boundary),
                mu: level.stats.mu[c.id],
                is_a: kind.is_a,
                is_b: kind.is_b,
                nested: nested_id[c.id].is_some(),
                class,
            }
        })
        .collect()
}

fn class_of(tree: Option<&StructureTree>, nested: Option<usize>) -> Option<usize> {
    let (tree, id) = (tree?, nested?);
    tree.blocks.iter().position(|b| b.cuts.contains(&id))
}

/// The analysis plus the structure tree, its slices and exceptional-case
/// warnings.
pub fn tree_document(a: &Analysis) -> ReportDocument {
    let g = &a.graph;
    let tree = &a.tree;
    let mut doc = analysis_document(a);
    doc.separators = Some(tree.separators.iter().map(|&s| labels(g, s)).collect());
    doc.blocks = Some(tree.blocks.iter().map(|b| labels(g, b.vertices)).collect());
    let mut nodes: Vec<NodeEntry> = tree
        .separators
        .iter()
        .enumerate()
        .map(|(id, &s)| NodeEntry {
            id,
            kind: NodeKind::Separator,
            vertices: labels(g, s),
        })
        .collect();
    nodes.extend(tree.blocks.iter().enumerate().map(|(b, block)| NodeEntry {
        id: tree.node_of_block(b),
        kind: NodeKind::Block,
        vertices: labels(g, block.vertices),
    }));
    let Some(level) = a.level.as_ref() else {
        doc.slices = Some(Vec::new());
        doc.cuts = Some(Vec::new());
        doc.tree = Some(TreeEntry {
            nodes,
            edges: Vec::new(),
        });
        doc.warnings = Some(Vec::new());
        return doc;
    };
    let parent = &level.nested.parent;
    let mut edges: Vec<EdgeEntry> = tree
        .edges
        .iter()
        .map(|e| EdgeEntry {
            from: e.separator,
            to: tree.node_of_block(e.block),
            cut: parent[e.cut],
        })
        .collect();
    edges.sort_by_key(|e| e.cut);
    doc.tree = Some(TreeEntry { nodes, edges });
    doc.slices = Some(
        level
            .slices
            .iter()
            .map(|s| SliceEntry {
                vertices: labels(g, s.vertices),
                separator: labels(g, s.separator),
            })
            .collect(),
    );
    doc.cuts = Some(cut_entries(a, Some(tree)));
    doc.warnings = Some(
        detect_exceptional(tree, &level.omega)
            .into_iter()
            .map(|w| WarningEntry {
                cut: parent[w.cut],
                block: w.block,
                closed_side: w.closed_side,
            })
            .collect(),
    );
    doc
}

/// The tree document of every level, nested per block.
pub fn decomposition_document(r: &DecompositionReport) -> ReportDocument {
    let mut doc = tree_document(&r.analysis);
    let g = &r.analysis.graph;
    doc.recursion = Some(
        r.blocks
            .iter()
            .map(|b| {
                let xb = &b.block_graph;
                let ideal_edges = xb
                    .ideal_edges
                    .iter()
                    .map(|&(u, v)| {
                        let lift =
                            |x| labels(g, xb.embedding.lift(VertexSet::singleton(x))).remove(0);
                        [lift(u), lift(v)]
                    })
                    .collect();
                let (outcome, report) = match &b.outcome {
                    BlockOutcome::Trivial => (Outcome::Trivial, None),
                    BlockOutcome::DepthLimit => (Outcome::DepthLimit, None),
                    BlockOutcome::Decomposed(child) => (
                        Outcome::Decomposed,
                        Some(Box::new(decomposition_document(child))),
                    ),
                };
                RecursionEntry {
                    block: b.block,
                    ideal_edges,
                    outcome,
                    report,
                }
            })
            .collect(),
    );
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use kappatree::{analyze, fixtures};

    #[test]
    fn trivial_analysis_is_minimal() {
        let doc = analysis_document(&analyze(&fixtures::complete(5)).unwrap());
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"kappa":null,"trivial":true}"#
        );
    }

    #[test]
    fn x5_tree_document() {
        let doc = tree_document(&analyze(&fixtures::x_graph(5)).unwrap());
        assert_eq!(doc.kappa, Some(3));
        assert_eq!(doc.separators.as_ref().unwrap().len(), 3);
        assert_eq!(doc.blocks.as_ref().unwrap().len(), 4);
        let slices = doc.slices.as_ref().unwrap();
        assert_eq!(slices.len(), 1);
        assert_eq!(slices[0].vertices, ["c", "d"]);
        let tree = doc.tree.as_ref().unwrap();
        assert_eq!((tree.nodes.len(), tree.edges.len()), (7, 6));
        // Every tree edge names a nested cut whose class is the edge's block.
        let cuts = doc.cuts.as_ref().unwrap();
        for e in &tree.edges {
            let cut = &cuts[e.cut];
            assert!(cut.nested);
            assert_eq!(cut.class.map(|c| c + 3), Some(e.to));
        }
    }

    #[test]
    fn document_round_trips_through_json() {
        let r = kappatree::decompose::decompose_recursively(&fixtures::ring(), 8).unwrap();
        let doc = decomposition_document(&r);
        let text = serde_json::to_string_pretty(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(doc.recursion.as_ref().unwrap().len(), 5);
    }
}
