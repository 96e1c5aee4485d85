//! One pass of the decomposition at a single connectivity level.

use crate::cuts::{enumerate_cuts_with, find_slices, CutSystem, Enumeration, Slice};
use crate::error::Result;
use crate::graph::Graph;
use crate::inseparable::{compute_kappa, Kappa, OmegaFamily};
use crate::nesting::{mu_stats, omega_optimal_subsystem, NestedSystem, NestingStats};
use crate::tree::{build_tree, StructureTree};

/// Everything computed at level `κ` for a nontrivial graph.
#[derive(Clone, Debug)]
pub struct Level {
    pub kappa: usize,
    pub omega: OmegaFamily,
    /// All `κ`-cuts separating members of `omega`.
    pub system: CutSystem,
    /// Crossing counts over `system`.
    pub stats: NestingStats,
    /// The canonical nested subsystem `N`.
    pub nested: NestedSystem,
    /// Slices of `N`.
    pub slices: Vec<Slice>,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: Graph,
    /// `None` when the graph is trivial.
    pub level: Option<Level>,
    pub tree: StructureTree,
}

impl Analysis {
    pub fn kappa(&self) -> Option<usize> {
        self.level.as_ref().map(|l| l.kappa)
    }

    pub fn is_trivial(&self) -> bool {
        self.tree.is_trivial()
    }
}

pub fn analyze(g: &Graph) -> Result<Analysis> {
    analyze_with(g, Enumeration::default())
}

/// Runs the whole single-level pipeline. Fails on disconnected input and on
/// internal invariant violations.
pub fn analyze_with(g: &Graph, strategy: Enumeration) -> Result<Analysis> {
    let (kappa, omega) = match compute_kappa(g)? {
        Kappa::Trivial => {
            return Ok(Analysis {
                graph: g.clone(),
                level: None,
                tree: StructureTree::trivial(g),
            })
        }
        Kappa::Level { kappa, omega } => (kappa, omega),
    };
    let system = enumerate_cuts_with(g, kappa, &omega, strategy);
    let stats = mu_stats(&system);
    let nested = omega_optimal_subsystem(&system, &stats);
    let slices = find_slices(&nested.system);
    let tree = build_tree(&nested.system)?;
    Ok(Analysis {
        graph: g.clone(),
        level: Some(Level {
            kappa,
            omega,
            system,
            stats,
            nested,
            slices,
        }),
        tree,
    })
}
