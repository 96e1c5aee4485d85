//! Block graphs and the recursive decomposition across increasing `κ`.

use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph, VertexSet};
use crate::inseparable::OmegaFamily;
use crate::par;
use crate::pipeline::{analyze, Analysis};
use crate::tree::StructureTree;

/// `X_B`: the subgraph induced on a block plus ideal edges inside every
/// separator adjacent to it.
#[derive(Clone, Debug)]
pub struct BlockGraph {
    /// Block vertices in the parent graph.
    pub block: VertexSet,
    pub graph: Graph,
    pub embedding: Embedding,
    /// Separator pairs that are not edges of the parent, in `graph` indices.
    pub ideal_edges: Vec<(usize, usize)>,
}

impl BlockGraph {
    pub fn is_ideal(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.ideal_edges.binary_search(&key).is_ok()
    }
}

pub fn block_graph(tree: &StructureTree, block: usize) -> BlockGraph {
    let g = &tree.graph;
    let vertices = tree.blocks[block].vertices;
    let mut pairs = Vec::new();
    for s in tree.separators_of_block(block) {
        let members: Vec<usize> = tree.separators[s].iter().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                pairs.push((u, v));
            }
        }
    }
    let (graph, embedding) = g.induced_with_edges(vertices, pairs.iter().copied());
    let mut ideal_edges: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(u, v)| !g.adjacent(u, v))
        .map(|(u, v)| {
            let child = |x| embedding.restrict(VertexSet::singleton(x)).first().unwrap();
            let (a, b) = (child(u), child(v));
            (a.min(b), a.max(b))
        })
        .collect();
    ideal_edges.sort_unstable();
    ideal_edges.dedup();
    BlockGraph {
        block: vertices,
        graph,
        embedding,
        ideal_edges,
    }
}

/// A cut `C` whose closed side `C ∪ NC` is itself a small block holding a
/// maximal set, while `NC` also lies in another block. Inseparability in the
/// block graph of `block` may then exceed inseparability in the parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionalWarning {
    pub cut: usize,
    /// The block containing `NC`.
    pub block: usize,
    /// The block equal to `C ∪ NC`.
    pub closed_side: usize,
}

/// Flags every `(B, B', C)` with `NC ⊆ B ≠ B'`, `B' = C ∪ NC` a block
/// containing a member of `omega`, and `2|B'| ≤ 3κ`.
pub fn detect_exceptional(tree: &StructureTree, omega: &OmegaFamily) -> Vec<ExceptionalWarning> {
    let (Some(kappa), Some(hat)) = (tree.kappa, tree.hat.as_ref()) else {
        return Vec::new();
    };
    let mut warnings = Vec::new();
    for cut in &hat.system.cuts {
        let closed = hat.lift(cut.vertices.union(cut.boundary));
        if 2 * closed.len() > 3 * kappa {
            continue;
        }
        let Some(closed_side) = tree.blocks.iter().position(|b| b.vertices == closed) else {
            continue;
        };
        if !omega.members.iter().any(|w| w.is_subset(closed)) {
            continue;
        }
        let boundary = hat.lift(cut.boundary);
        for (b, block) in tree.blocks.iter().enumerate() {
            if b != closed_side && boundary.is_subset(block.vertices) {
                warnings.push(ExceptionalWarning {
                    cut: cut.id,
                    block: b,
                    closed_side,
                });
            }
        }
    }
    warnings
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub depth: usize,
    pub analysis: Analysis,
    pub warnings: Vec<ExceptionalWarning>,
    /// One entry per block of `analysis.tree`, in block order; empty when the
    /// level is trivial.
    pub blocks: Vec<BlockReport>,
}

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub block: usize,
    pub block_graph: BlockGraph,
    pub outcome: BlockOutcome,
}

#[derive(Clone, Debug)]
pub enum BlockOutcome {
    Trivial,
    /// `X_B` is nontrivial but the depth budget is spent.
    DepthLimit,
    Decomposed(Box<DecompositionReport>),
}

impl DecompositionReport {
    pub fn kappa(&self) -> Option<usize> {
        self.analysis.kappa()
    }

    /// Deepest level reached, counting this one as its own depth.
    pub fn max_depth(&self) -> usize {
        self.children()
            .map(DecompositionReport::max_depth)
            .max()
            .unwrap_or(self.depth)
    }

    pub fn children(&self) -> impl Iterator<Item = &DecompositionReport> + '_ {
        self.blocks.iter().filter_map(|b| match &b.outcome {
            BlockOutcome::Decomposed(r) => Some(r.as_ref()),
            _ => None,
        })
    }

    /// Whether `κ` strictly increases from every level to its sublevels.
    pub fn kappa_increases(&self) -> bool {
        self.children().all(|child| {
            matches!((self.kappa(), child.kappa()), (Some(a), Some(b)) if b > a)
                && child.kappa_increases()
        })
    }

    pub fn hit_depth_limit(&self) -> bool {
        self.blocks.iter().any(|b| match &b.outcome {
            BlockOutcome::DepthLimit => true,
            BlockOutcome::Decomposed(r) => r.hit_depth_limit(),
            BlockOutcome::Trivial => false,
        })
    }
}

/// Decomposes `g`, then every nontrivial block graph, down to `max_depth`
/// levels below the top.
pub fn decompose_recursively(g: &Graph, max_depth: usize) -> Result<DecompositionReport> {
    decompose_at(analyze(g)?, 0, max_depth)
}

fn decompose_at(analysis: Analysis, depth: usize, max_depth: usize) -> Result<DecompositionReport> {
    let Some(level) = analysis.level.as_ref() else {
        return Ok(DecompositionReport {
            depth,
            analysis,
            warnings: Vec::new(),
            blocks: Vec::new(),
        });
    };
    let warnings = detect_exceptional(&analysis.tree, &level.omega);
    let ids: Vec<usize> = (0..analysis.tree.blocks.len()).collect();
    let blocks = par::map(&ids, |&b| -> Result<BlockReport> {
        let block_graph = block_graph(&analysis.tree, b);
        if !block_graph.graph.is_connected() {
            return Err(Error::Invariant(format!("block graph {b} is disconnected")));
        }
        let sub = analyze(&block_graph.graph)?;
        let outcome = if sub.is_trivial() {
            BlockOutcome::Trivial
        } else if depth >= max_depth {
            BlockOutcome::DepthLimit
        } else {
            BlockOutcome::Decomposed(Box::new(decompose_at(sub, depth + 1, max_depth)?))
        };
        Ok(BlockReport {
            block: b,
            block_graph,
            outcome,
        })
    });
    Ok(DecompositionReport {
        depth,
        blocks: blocks.into_iter().collect::<Result<_>>()?,
        analysis,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set(labels.iter().copied()).unwrap()
    }

    #[test]
    fn x5_block_graphs_are_k4() {
        let g = fixtures::x_graph(5);
        let a = analyze(&g).unwrap();
        let b = a
            .tree
            .blocks
            .iter()
            .position(|b| b.vertices == set(&g, &["2", "3", "a", "b"]))
            .unwrap();
        let xb = block_graph(&a.tree, b);
        assert_eq!(xb.graph.vertex_count(), 4);
        assert_eq!(xb.graph.edge_count(), 6);
        assert!(xb.ideal_edges.is_empty());
    }

    #[test]
    fn ring_central_block_graph_is_c4() {
        let g = fixtures::ring();
        let a = analyze(&g).unwrap();
        let centre = a
            .tree
            .blocks
            .iter()
            .position(|b| b.vertices == set(&g, &["x1", "x2", "x3", "x4"]))
            .unwrap();
        let xb = block_graph(&a.tree, centre);
        assert_eq!((xb.graph.vertex_count(), xb.graph.edge_count()), (4, 4));
        assert!(!xb.graph.adjacent(0, 2));
    }

    #[test]
    fn leaf_block_gets_a_clique_on_its_separator() {
        // Every adjacent separator is a clique in the block graph.
        let g = Graph::from_edges(&[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x1"),
            ("y", "x1"),
            ("y", "x2"),
            ("z", "x3"),
            ("z", "x4"),
        ])
        .unwrap();
        let a = analyze(&g).unwrap();
        for (b, block) in a.tree.blocks.iter().enumerate() {
            let xb = block_graph(&a.tree, b);
            for s in a.tree.separators_of_block(b) {
                let sep = xb.embedding.restrict(a.tree.separators[s]);
                let members: Vec<usize> = sep.iter().collect();
                assert!(xb.graph.adjacent(members[0], members[1]));
            }
            assert_eq!(xb.block, block.vertices);
        }
    }

    #[test]
    fn exceptional_warnings() {
        let g = fixtures::x_graph(5);
        let a = analyze(&g).unwrap();
        let omega = &a.level.as_ref().unwrap().omega;
        let warned: Vec<VertexSet> = detect_exceptional(&a.tree, omega)
            .iter()
            .map(|w| a.tree.blocks[w.closed_side].vertices)
            .collect();
        assert_eq!(
            warned,
            vec![
                set(&g, &["1", "2", "a", "b"]),
                set(&g, &["4", "5", "a", "b"])
            ]
        );

        let r = fixtures::ring();
        let a = analyze(&r).unwrap();
        let omega = &a.level.as_ref().unwrap().omega;
        let warnings = detect_exceptional(&a.tree, omega);
        assert_eq!(warnings.len(), 4);
        for w in warnings {
            assert_eq!(a.tree.blocks[w.closed_side].vertices.len(), 3);
        }

        let k = analyze(&fixtures::complete(5)).unwrap();
        assert!(detect_exceptional(
            &k.tree,
            &OmegaFamily {
                k: 0,
                members: vec![]
            }
        )
        .is_empty());
    }

    #[test]
    fn recursion_stops_on_trivial_blocks() {
        for g in [fixtures::x_graph(5), fixtures::ring()] {
            let r = decompose_recursively(&g, 8).unwrap();
            assert!(r
                .blocks
                .iter()
                .all(|b| matches!(b.outcome, BlockOutcome::Trivial)));
            assert_eq!(r.max_depth(), 0);
            assert!(r.kappa_increases());
        }
        let k = decompose_recursively(&fixtures::complete(6), 8).unwrap();
        assert!(k.blocks.is_empty());
    }

    #[test]
    fn depth_limit_is_reported() {
        // Any graph with a nontrivial block graph will do.
        let deep = (0..200u64)
            .map(|seed| fixtures::random_connected(10, 0.3, seed))
            .find(|g| decompose_recursively(g, 8).unwrap().max_depth() >= 1)
            .expect("some random graph recurses");
        let capped = decompose_recursively(&deep, 0).unwrap();
        assert!(capped.hit_depth_limit());
        assert!(!decompose_recursively(&deep, 8).unwrap().hit_depth_limit());
    }
}
