//! Nestedness of thin cuts, crossing counts μ, and the nested subsystems
//! selected by minimal μ.

use crate::cuts::CutSystem;
use crate::par;

/// Whether two cuts of a thin system are nested. For thin cuts this holds
/// exactly when at least one of the four links is empty.
pub fn are_nested(sys: &CutSystem, c: usize, d: usize) -> bool {
    if c == d {
        return true;
    }
    let cd = sys.graph.corners(sys.cut(c).vertices, sys.cut(d).vertices);
    cd.empty_link_count() > 0
}

/// Crossing counts of a thin system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestingStats {
    /// `mu[i]`: number of cuts not nested with cut `i`.
    pub mu: Vec<usize>,
    /// `None` for an empty system.
    pub mu_min: Option<usize>,
    /// Crossing pairs `(i, j)`, `i < j`.
    pub crossing_pairs: Vec<(usize, usize)>,
}

pub fn mu_stats(sys: &CutSystem) -> NestingStats {
    let n = sys.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let nested = par::map(&pairs, |&(i, j)| are_nested(sys, i, j));
    let crossing_pairs: Vec<(usize, usize)> = pairs
        .into_iter()
        .zip(nested)
        .filter(|(_, nested)| !nested)
        .map(|(p, _)| p)
        .collect();
    let mut mu = vec![0; n];
    for &(i, j) in &crossing_pairs {
        mu[i] += 1;
        mu[j] += 1;
    }
    NestingStats {
        mu_min: mu.iter().copied().min(),
        mu,
        crossing_pairs,
    }
}

/// A nested subsystem of a thin system, with a record of where each cut came
/// from.
#[derive(Clone, Debug)]
pub struct NestedSystem {
    pub system: CutSystem,
    /// `parent[i]`: id in the parent system of cut `i` here.
    pub parent: Vec<usize>,
    /// Ω-pairs (indices into the parent's Ω) each cut is μ-optimal for.
    pub provenance: Vec<Vec<(usize, usize)>>,
    /// Ω-pairs no cut of the parent separates.
    pub unseparated_pairs: Vec<(usize, usize)>,
}

impl NestedSystem {
    fn from_parent(
        sys: &CutSystem,
        chosen: &[bool],
        optimal_for: Vec<Vec<(usize, usize)>>,
    ) -> Self {
        let system = sys.subsystem(|c| chosen[c.id]);
        let parent: Vec<usize> = system
            .cuts
            .iter()
            .map(|c| sys.find(c.vertices).expect("subsystem cut in parent"))
            .collect();
        let provenance = parent.iter().map(|&p| optimal_for[p].clone()).collect();
        NestedSystem {
            system,
            parent,
            provenance,
            unseparated_pairs: Vec::new(),
        }
    }

    pub fn is_pairwise_nested(&self) -> bool {
        let n = self.system.len();
        (0..n).all(|i| (i + 1..n).all(|j| are_nested(&self.system, i, j)))
    }
}

/// Cuts whose μ equals the global minimum.
pub fn optimally_nested_subsystem(sys: &CutSystem, stats: &NestingStats) -> NestedSystem {
    let chosen: Vec<bool> = match stats.mu_min {
        Some(min) => stats.mu.iter().map(|&m| m == min).collect(),
        None => Vec::new(),
    };
    NestedSystem::from_parent(sys, &chosen, vec![Vec::new(); sys.len()])
}

/// For every pair of Ω-members separated by some cut, all separating cuts of
/// least μ. Every such pair stays separated in the result.
pub fn omega_optimal_subsystem(sys: &CutSystem, stats: &NestingStats) -> NestedSystem {
    let pairs = sys.omega.pairs();
    let separating = par::map(&pairs, |&(i, j)| sys.separating(i, j));
    let mut chosen = vec![false; sys.len()];
    let mut optimal_for = vec![Vec::new(); sys.len()];
    let mut unseparated = Vec::new();
    for (&pair, cuts) in pairs.iter().zip(&separating) {
        let Some(best) = cuts.iter().map(|&c| stats.mu[c]).min() else {
            unseparated.push(pair);
            continue;
        };
        for &c in cuts.iter().filter(|&&c| stats.mu[c] == best) {
            chosen[c] = true;
            optimal_for[c].push(pair);
        }
    }
    let mut nested = NestedSystem::from_parent(sys, &chosen, optimal_for);
    nested.unseparated_pairs = unseparated;
    nested
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::enumerate_cuts;
    use crate::fixtures;
    use crate::graph::{Graph, VertexSet};
    use crate::inseparable::{compute_kappa, Kappa};

    fn system(g: &Graph) -> CutSystem {
        match compute_kappa(g).unwrap() {
            Kappa::Level { kappa, omega } => enumerate_cuts(g, kappa, &omega),
            Kappa::Trivial => panic!("expected a nontrivial graph"),
        }
    }

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set(labels.iter().copied()).unwrap()
    }

    #[test]
    fn nestedness_examples() {
        let g = fixtures::x_graph(5);
        let sys = system(&g);
        let c4 = sys.find(set(&g, &["1", "2", "3"])).unwrap();
        let d2 = sys.find(set(&g, &["3", "4", "5"])).unwrap();
        assert!(are_nested(&sys, c4, d2));
        assert!(are_nested(&sys, c4, c4));

        let r = fixtures::ring();
        let rs = system(&r);
        let c = rs.find(set(&r, &["x2", "y1", "y2"])).unwrap();
        let d = rs.find(set(&r, &["x3", "y2", "y3"])).unwrap();
        assert!(!are_nested(&rs, c, d));
        assert!(!are_nested(&rs, d, c));
    }

    #[test]
    fn mu_of_x5_is_zero() {
        let sys = system(&fixtures::x_graph(5));
        let stats = mu_stats(&sys);
        assert_eq!(stats.mu, vec![0; 6]);
        assert_eq!(stats.mu_min, Some(0));
        assert_eq!(optimally_nested_subsystem(&sys, &stats).system.len(), 6);
        assert_eq!(omega_optimal_subsystem(&sys, &stats).system.len(), 6);
    }

    #[test]
    fn mu_of_ring() {
        let g = fixtures::ring();
        let sys = system(&g);
        let stats = mu_stats(&sys);
        let diagonals = [set(&g, &["x1", "x3"]), set(&g, &["x2", "x4"])];
        for cut in &sys.cuts {
            let expected = if diagonals.contains(&cut.boundary) {
                2
            } else {
                0
            };
            assert_eq!(
                stats.mu[cut.id],
                expected,
                "{:?}",
                g.set_labels(cut.vertices)
            );
        }
        assert_eq!(stats.crossing_pairs.len(), 4);
        let optimal = optimally_nested_subsystem(&sys, &stats);
        let canonical = omega_optimal_subsystem(&sys, &stats);
        assert_eq!(optimal.system.len(), 8);
        assert_eq!(canonical.system.cuts, optimal.system.cuts);
        assert!(canonical.is_pairwise_nested());
        assert!(canonical.unseparated_pairs.is_empty());
    }

    #[test]
    fn empty_system_has_no_mu_min() {
        let g = fixtures::complete(4);
        let omega = crate::inseparable::maximal_k_inseparable_sets(&g, 2);
        let sys = enumerate_cuts(&g, 2, &omega);
        let stats = mu_stats(&sys);
        assert!(stats.mu.is_empty());
        assert_eq!(stats.mu_min, None);
    }

    #[test]
    fn canonical_system_can_exceed_the_optimal_one() {
        let g = fixtures::surplus_nested();
        let sys = system(&g);
        let stats = mu_stats(&sys);
        assert_eq!((sys.len(), stats.mu_min), (14, Some(0)));
        let optimal = optimally_nested_subsystem(&sys, &stats);
        let canonical = omega_optimal_subsystem(&sys, &stats);
        assert_eq!((optimal.system.len(), canonical.system.len()), (6, 10));
        assert!(canonical.is_pairwise_nested());
        // The extra cuts separate this pair and nothing crossing-free does.
        let a = set(&g, &["v00", "v01", "v02", "v03", "v10"]);
        let b = set(&g, &["v00", "v02", "v04", "v07", "v10"]);
        let index = |s| sys.omega.members.iter().position(|&m| m == s).unwrap();
        let (i, j) = (index(a), index(b));
        assert!(optimal.system.separating(i, j).is_empty());
        assert!(!canonical.system.separating(i, j).is_empty());
    }
}
