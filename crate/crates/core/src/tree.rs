//! Structure trees of nested thin cut systems.
//!
//! Separators become white nodes, classes of the relation `C ~ D` (`C*` is
//! strictly and minimally contained in `D`) become black nodes, and every cut
//! is an edge from its separator to its class. Classes are computed in the
//! slice-free graph, where nestedness is plain inclusion.

use std::collections::BTreeSet;

use crate::cuts::{hat_graph, CutSystem, HatGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A black node: a `~`-class of cuts and its block `⋂ (C ∪ NC)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockNode {
    /// Cut ids of the nested system, ascending.
    pub cuts: Vec<usize>,
    /// Block vertices in the original graph.
    pub vertices: VertexSet,
}

/// A tree edge: cut `cut` runs from `separators[separator]` to
/// `blocks[block]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub cut: usize,
    pub separator: usize,
    pub block: usize,
}

#[derive(Clone, Debug)]
pub struct StructureTree {
    pub graph: Graph,
    pub kappa: Option<usize>,
    pub separators: Vec<VertexSet>,
    pub blocks: Vec<BlockNode>,
    pub edges: Vec<TreeEdge>,
    /// The nested system the tree was built from (empty for a trivial tree).
    pub system: Option<CutSystem>,
    pub hat: Option<HatGraph>,
}

impl StructureTree {
    /// Single black node holding every vertex.
    pub fn trivial(graph: &Graph) -> Self {
        StructureTree {
            graph: graph.clone(),
            kappa: None,
            separators: Vec::new(),
            blocks: vec![BlockNode {
                cuts: Vec::new(),
                vertices: graph.vertices(),
            }],
            edges: Vec::new(),
            system: None,
            hat: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.separators.len() + self.blocks.len()
    }

    /// Node numbering: separators first, then blocks.
    pub fn node_of_block(&self, block: usize) -> usize {
        self.separators.len() + block
    }

    pub fn degree_of_separator(&self, s: usize) -> usize {
        self.edges.iter().filter(|e| e.separator == s).count()
    }

    pub fn degree_of_block(&self, b: usize) -> usize {
        self.edges.iter().filter(|e| e.block == b).count()
    }

    /// Separators adjacent to a block.
    pub fn separators_of_block(&self, b: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.block == b)
            .map(|e| e.separator)
            .collect()
    }

    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.degree_of_block(b) == 1)
            .collect()
    }

    /// Undirected adjacency over node numbers.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for e in &self.edges {
            let b = self.node_of_block(e.block);
            adj[e.separator].push((b, e.cut));
            adj[b].push((e.separator, e.cut));
        }
        adj
    }
}

/// The `~`-classes of a nested, slice-free thin system, each as ascending
/// cut ids, ordered by smallest member.
pub fn equivalence_classes(sys: &CutSystem) -> Result<Vec<Vec<usize>>> {
    let n = sys.len();
    let related: Vec<Vec<bool>> = (0..n)
        .map(|c| {
            (0..n)
                .map(|d| c == d || minimally_contains(sys, c, d))
                .collect()
        })
        .collect();
    let asymmetric = (0..n)
        .flat_map(|c| (0..n).map(move |d| (c, d)))
        .find(|&(c, d)| related[c][d] != related[d][c]);
    if let Some((c, d)) = asymmetric {
        return Err(Error::Invariant(format!(
            "cut relation is not symmetric on ({c}, {d})"
        )));
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for c in 0..n {
        if class_of[c] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&d| related[c][d]).collect();
        for &d in &members {
            if class_of[d] != usize::MAX || (0..n).any(|e| related[d][e] != related[c][e]) {
                return Err(Error::Invariant(format!(
                    "cut relation is not transitive around cut {d}"
                )));
            }
            class_of[d] = classes.len();
        }
        classes.push(members);
    }
    Ok(classes)
}

/// `C* ⊊ D` with no cut strictly between.
fn minimally_contains(sys: &CutSystem, c: usize, d: usize) -> bool {
    let star = sys.cut(c).star;
    let target = sys.cut(d).vertices;
    star.is_proper_subset(target)
        && !sys
            .cuts
            .iter()
            .any(|e| star.is_proper_subset(e.vertices) && e.vertices.is_proper_subset(target))
}

/// `⋂ (C ∪ NC)` over a class, in the system's own graph.
pub fn block_of_class(sys: &CutSystem, class: &[usize]) -> VertexSet {
    class.iter().fold(sys.graph.vertices(), |acc, &c| {
        let cut = sys.cut(c);
        acc.intersection(cut.vertices.union(cut.boundary))
    })
}

/// Builds the structure tree of a nested thin system over `graph`. An empty
/// system gives the trivial tree.
pub fn build_tree(system: &CutSystem) -> Result<StructureTree> {
    if system.is_empty() {
        return Ok(StructureTree::trivial(&system.graph));
    }
    let hat = hat_graph(system)?;
    let classes = equivalence_classes(&hat.system)?;
    let blocks: Vec<BlockNode> = classes
        .iter()
        .map(|class| BlockNode {
            cuts: class.clone(),
            vertices: hat.lift(block_of_class(&hat.system, class)),
        })
        .collect();
    let separators = system.separators.clone();
    let mut class_of = vec![0; system.len()];
    for (b, class) in classes.iter().enumerate() {
        for &c in class {
            class_of[c] = b;
        }
    }
    let edges = system
        .cuts
        .iter()
        .map(|cut| TreeEdge {
            cut: cut.id,
            separator: separators
                .binary_search(&cut.boundary)
                .expect("separator listed"),
            block: class_of[cut.id],
        })
        .collect();
    let tree = StructureTree {
        graph: system.graph.clone(),
        kappa: Some(system.kappa),
        separators,
        blocks,
        edges,
        system: Some(system.clone()),
        hat: Some(hat),
    };
    let report = validate_tree(&tree);
    if !report.passed() {
        return Err(Error::Invariant(format!(
            "structure tree failed validation: {}",
            report.violations.join("; ")
        )));
    }
    Ok(tree)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeReport {
    pub violations: Vec<String>,
}

impl TreeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks tree shape, bipartiteness, block sizes, the leaf property and the
/// rule that a separator and a block are adjacent iff the separator lies in
/// the block.
pub fn validate_tree(tree: &StructureTree) -> TreeReport {
    let mut violations = Vec::new();
    let nodes = tree.node_count();
    if tree.edges.len() + 1 != nodes {
        violations.push(format!("{} edges for {} nodes", tree.edges.len(), nodes));
    }
    for e in &tree.edges {
        if e.separator >= tree.separators.len() || e.block >= tree.blocks.len() {
            violations.push(format!("edge of cut {} has a dangling endpoint", e.cut));
            return TreeReport { violations };
        }
    }
    if !tree_is_connected(tree) {
        violations.push("tree is disconnected".into());
    }
    let pairs: BTreeSet<(usize, usize)> =
        tree.edges.iter().map(|e| (e.separator, e.block)).collect();
    if pairs.len() != tree.edges.len() {
        violations.push("parallel edges between a separator and a block".into());
    }
    if let Some(kappa) = tree.kappa {
        for (b, block) in tree.blocks.iter().enumerate() {
            if block.vertices.len() <= kappa {
                violations.push(format!(
                    "block {b} has only {} vertices",
                    block.vertices.len()
                ));
            }
        }
    }
    for (s, &sep) in tree.separators.iter().enumerate() {
        if tree.degree_of_separator(s) < 2 {
            violations.push(format!("separator {s} is a leaf"));
        }
        for (b, block) in tree.blocks.iter().enumerate() {
            let adjacent = pairs.contains(&(s, b));
            if adjacent != sep.is_subset(block.vertices) {
                violations.push(format!(
                    "separator {s} / block {b}: adjacency {adjacent} but containment {}",
                    !adjacent
                ));
            }
        }
    }
    if let Some(hat) = &tree.hat {
        for b in tree.leaf_blocks() {
            let s = tree.separators_of_block(b)[0];
            let rest = hat
                .embedding
                .restrict(tree.blocks[b].vertices.difference(tree.separators[s]));
            if !hat.system.is_cut(rest) {
                violations.push(format!("leaf block {b} minus its separator is not a cut"));
            }
        }
    }
    TreeReport { violations }
}

fn tree_is_connected(tree: &StructureTree) -> bool {
    let adj = tree.adjacency();
    if adj.is_empty() {
        return false;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(y, _) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Whether the automorphism `perm` (`perm[v]` is the image of `v`) maps the
/// system's cuts onto themselves.
pub fn check_invariance(system: &CutSystem, perm: &[usize]) -> Result<bool> {
    if !system.graph.is_automorphism(perm) {
        return Err(Error::NotAutomorphism);
    }
    Ok(system
        .cuts
        .iter()
        .all(|c| system.is_cut(Graph::map_set(perm, c.vertices))))
}
