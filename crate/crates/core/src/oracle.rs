//! Brute-force reference implementations that quantify over vertex subsets
//! exactly as the definitions do. Exponential in the vertex count, so every
//! entry point checks an [`OracleBudget`] first.
//!
//! Nothing here calls the flow, clique or nestedness code of the fast path;
//! only [`Graph`] set algebra is shared.

use std::collections::BTreeSet;

use crate::cuts::CutSystem;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::inseparable::OmegaFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Largest separator size quantified over.
    pub max_subset_size: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 12,
            max_subset_size: 12,
        }
    }
}

impl OracleBudget {
    pub fn check(&self, g: &Graph, k: usize) -> Result<()> {
        if g.vertex_count() > self.max_vertices || k > self.max_subset_size {
            return Err(Error::OracleBudget {
                vertices: g.vertex_count(),
                budget: self.max_vertices,
            });
        }
        Ok(())
    }
}

fn all_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let n = g.vertex_count();
    (0..1u128 << n).map(VertexSet::from_bits)
}

/// The closed sides `(C ∪ NC, C* ∪ NC)` of every `C ⊆ V` with `|NC| ≤ k`,
/// deduplicated. A set is `k`-inseparable iff it has more than `k` elements
/// and lies inside one side of every pair.
#[derive(Clone, Debug)]
pub struct SeparationTable {
    pub k: usize,
    pub sides: Vec<(VertexSet, VertexSet)>,
}

impl SeparationTable {
    pub fn new(g: &Graph, k: usize, budget: &OracleBudget) -> Result<Self> {
        budget.check(g, k)?;
        let sides: BTreeSet<(VertexSet, VertexSet)> = all_subsets(g)
            .filter_map(|c| {
                let nc = g.boundary(c);
                (nc.len() <= k).then(|| {
                    let a = c.union(nc);
                    let b = g.star_complement(c).union(nc);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        Ok(SeparationTable {
            k,
            sides: sides.into_iter().collect(),
        })
    }

    pub fn inseparable(&self, y: VertexSet) -> bool {
        y.len() > self.k
            && self
                .sides
                .iter()
                .all(|&(a, b)| y.is_subset(a) || y.is_subset(b))
    }

    /// Maximal inseparable sets, canonically ordered. Inseparable sets of
    /// size above `k` are closed under taking subsets of size above `k`, so
    /// growing sorted prefixes reaches all of them.
    pub fn maximal_sets(&self, g: &Graph) -> Vec<VertexSet> {
        let n = g.vertex_count();
        let mut found = Vec::new();
        let mut stack: Vec<VertexSet> = itertools::Itertools::combinations(0..n, self.k + 1)
            .map(|c| c.into_iter().collect::<VertexSet>())
            .filter(|&y| self.inseparable(y))
            .collect();
        while let Some(y) = stack.pop() {
            found.push(y);
            let top = y.iter().last().unwrap();
            for v in top + 1..n {
                let bigger = y.with(v);
                if self.inseparable(bigger) {
                    stack.push(bigger);
                }
            }
        }
        let mut maximal: Vec<VertexSet> = found
            .iter()
            .copied()
            .filter(|&y| (0..n).all(|v| y.contains(v) || !self.inseparable(y.with(v))))
            .collect();
        maximal.sort();
        maximal
    }
}

/// Whether `y` is `k`-inseparable, by quantifying over every `C ⊆ V`.
pub fn oracle_inseparable(
    g: &Graph,
    y: VertexSet,
    k: usize,
    budget: &OracleBudget,
) -> Result<bool> {
    Ok(SeparationTable::new(g, k, budget)?.inseparable(y))
}

pub fn oracle_maximal_sets(g: &Graph, k: usize, budget: &OracleBudget) -> Result<OmegaFamily> {
    let table = SeparationTable::new(g, k, budget)?;
    Ok(OmegaFamily {
        k,
        members: table.maximal_sets(g),
    })
}

/// Whether the cut `c` separates `a` from `b`.
fn separates(g: &Graph, c: VertexSet, a: VertexSet, b: VertexSet) -> bool {
    let nc = g.boundary(c);
    let inside = c.union(nc);
    let outside = g.star_complement(c).union(nc);
    let sides = (a.is_subset(inside) && b.is_subset(outside))
        || (b.is_subset(inside) && a.is_subset(outside));
    sides && !a.is_subset(nc) && !b.is_subset(nc)
}

/// The least `k` for which some `C` with `|NC| = k` has `k`-inseparable sets
/// on both closed sides, with its maximal sets; `None` if there is none.
pub fn oracle_kappa(g: &Graph, budget: &OracleBudget) -> Result<Option<(usize, OmegaFamily)>> {
    budget.check(g, 0)?;
    let n = g.vertex_count();
    for k in 1..n {
        let omega = oracle_maximal_sets(g, k, budget)?;
        if omega.is_empty() {
            return Ok(None);
        }
        let separated = all_subsets(g).any(|c| {
            g.boundary(c).len() == k
                && omega
                    .pairs()
                    .iter()
                    .any(|&(i, j)| separates(g, c, omega.members[i], omega.members[j]))
        });
        if separated {
            return Ok(Some((k, omega)));
        }
    }
    Ok(None)
}

/// Every nonempty connected `C` with `|NC| = κ` and `(C*)* = C` that
/// separates two members of `omega`.
pub fn oracle_cuts(
    g: &Graph,
    kappa: usize,
    omega: &OmegaFamily,
    budget: &OracleBudget,
) -> Result<CutSystem> {
    budget.check(g, kappa)?;
    let pairs = omega.pairs();
    let sets: Vec<VertexSet> = all_subsets(g)
        .filter(|&c| {
            !c.is_empty()
                && g.boundary(c).len() == kappa
                && g.is_connected_set(c)
                && g.star_complement(g.star_complement(c)) == c
                && pairs
                    .iter()
                    .any(|&(i, j)| separates(g, c, omega.members[i], omega.members[j]))
        })
        .collect();
    Ok(CutSystem::from_sets(g.clone(), kappa, omega.clone(), sets))
}

/// Nestedness as "has an isolated corner": a corner holding no cut of `sys`
/// whose two adjacent links are empty.
pub fn oracle_nested(sys: &CutSystem, c: usize, d: usize, budget: &OracleBudget) -> Result<bool> {
    let g = &sys.graph;
    budget.check(g, sys.kappa)?;
    let (c, d) = (sys.cut(c).vertices, sys.cut(d).vertices);
    let (nc, nd) = (g.boundary(c), g.boundary(d));
    let c_sides = [c, g.star_complement(c)];
    let d_sides = [d, g.star_complement(d)];
    Ok(c_sides.iter().any(|&x| {
        d_sides.iter().any(|&y| {
            let corner = x.intersection(y);
            let holds_cut = sys.cuts.iter().any(|e| e.vertices.is_subset(corner));
            !holds_cut && x.is_disjoint(nd) && y.is_disjoint(nc)
        })
    }))
}

/// Maximal `sys`-inseparable sets that avoid every slice: sets lying on
/// exactly one closed side of every cut.
pub fn oracle_blocks(
    sys: &CutSystem,
    slices: &[VertexSet],
    budget: &OracleBudget,
) -> Result<Vec<VertexSet>> {
    let g = &sys.graph;
    budget.check(g, sys.kappa)?;
    let sliced = slices.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    let inseparable = |y: VertexSet| {
        sys.cuts.iter().all(|cut| {
            let inside = y.is_subset(cut.vertices.union(cut.boundary));
            let outside = y.is_subset(cut.star.union(cut.boundary));
            inside != outside
        })
    };
    let candidates: Vec<VertexSet> = all_subsets(g)
        .filter(|&y| !y.is_empty() && y.is_disjoint(sliced) && inseparable(y))
        .collect();
    let mut maximal: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&y| !candidates.iter().any(|&z| y.is_proper_subset(z)))
        .collect();
    maximal.sort();
    Ok(maximal)
}

/// All automorphisms of `g` as permutations (`perm[v]` is the image of `v`),
/// found by backtracking with degree pruning. Stops after `limit`.
pub fn automorphisms(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let degree: Vec<usize> = (0..n).map(|v| g.neighbours(v).len()).collect();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    extend(g, &degree, 0, &mut perm, &mut used, &mut out, limit);
    out
}

fn extend(
    g: &Graph,
    degree: &[usize],
    v: usize,
    perm: &mut Vec<usize>,
    used: &mut VertexSet,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let n = perm.len();
    if v == n {
        out.push(perm.clone());
        return;
    }
    for w in 0..n {
        if used.contains(w) || degree[w] != degree[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.adjacent(u, v) == g.adjacent(perm[u], w));
        if consistent {
            perm[v] = w;
            used.insert(w);
            extend(g, degree, v + 1, perm, used, out, limit);
            used.remove(w);
            perm[v] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set(labels.iter().copied()).unwrap()
    }

    #[test]
    fn inseparability_examples() {
        let g = fixtures::x_graph(5);
        let b = OracleBudget::default();
        assert!(oracle_inseparable(&g, set(&g, &["2", "3", "a", "b"]), 3, &b).unwrap());
        assert!(!oracle_inseparable(&g, set(&g, &["1", "5"]), 3, &b).unwrap());
        assert!(!oracle_inseparable(&g, set(&g, &["1", "2", "a"]), 3, &b).unwrap());
    }

    #[test]
    fn kappa_and_cuts_of_fixtures() {
        let b = OracleBudget::default();
        let g = fixtures::x_graph(5);
        let (kappa, omega) = oracle_kappa(&g, &b).unwrap().unwrap();
        assert_eq!(kappa, 3);
        assert_eq!(omega.len(), 4);
        assert_eq!(oracle_cuts(&g, kappa, &omega, &b).unwrap().len(), 6);

        let r = fixtures::ring();
        let (kappa, omega) = oracle_kappa(&r, &b).unwrap().unwrap();
        assert_eq!(kappa, 2);
        assert_eq!(oracle_cuts(&r, kappa, &omega, &b).unwrap().len(), 12);

        assert_eq!(oracle_kappa(&fixtures::complete(5), &b).unwrap(), None);
    }

    #[test]
    fn nested_examples() {
        let b = OracleBudget::default();
        let g = fixtures::x_graph(5);
        let (kappa, omega) = oracle_kappa(&g, &b).unwrap().unwrap();
        let sys = oracle_cuts(&g, kappa, &omega, &b).unwrap();
        let c = sys.find(set(&g, &["1", "2", "3"])).unwrap();
        let d = sys.find(set(&g, &["5"])).unwrap();
        assert!(oracle_nested(&sys, c, d, &b).unwrap());
        assert!(oracle_nested(&sys, c, c, &b).unwrap());

        let r = fixtures::ring();
        let (kappa, omega) = oracle_kappa(&r, &b).unwrap().unwrap();
        let sys = oracle_cuts(&r, kappa, &omega, &b).unwrap();
        let c = sys.find(set(&r, &["x2", "y1", "y2"])).unwrap();
        let d = sys.find(set(&r, &["x3", "y2", "y3"])).unwrap();
        assert!(!oracle_nested(&sys, c, d, &b).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = fixtures::x_graph(8);
        let small = OracleBudget {
            max_vertices: 10,
            ..OracleBudget::default()
        };
        assert_eq!(
            oracle_inseparable(&g, VertexSet::EMPTY, 1, &small),
            Err(Error::OracleBudget {
                vertices: 12,
                budget: 10
            })
        );
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&fixtures::petersen(), usize::MAX).len(), 120);
        assert_eq!(automorphisms(&fixtures::cycle(6), usize::MAX).len(), 12);
        assert_eq!(automorphisms(&fixtures::cube(), usize::MAX).len(), 48);
        // Ring: the dihedral group of the central square.
        assert_eq!(automorphisms(&fixtures::ring(), usize::MAX).len(), 8);
        // X_5: (a b)(c d) and the path reversal generate a Klein group.
        assert_eq!(automorphisms(&fixtures::x_graph(5), usize::MAX).len(), 4);
    }
}
