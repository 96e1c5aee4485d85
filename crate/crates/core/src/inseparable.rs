//! k-inseparable vertex sets and the connectivity level κ.
//!
//! A set `Y` with at least `k + 1` vertices is k-inseparable when no vertex set
//! `C` with `|N(C)| <= k` has members of `Y` on both sides (`C` and `C*`). Two
//! vertices can be parted by such a `C` exactly when they are non-adjacent and
//! joined by at most `k` internally disjoint paths, so inseparability reduces
//! to pairwise local connectivity, computed here by unit-capacity max-flow.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;

/// Outcome of a disjoint-path query between two distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Linkage {
    /// The endpoints share an edge; no separator avoiding both can part them.
    Adjacent,
    /// Maximum number of internally vertex-disjoint paths.
    Paths(usize),
}

impl Linkage {
    /// Whether no set of at most `k` other vertices separates the endpoints.
    pub fn survives(self, k: usize) -> bool {
        match self {
            Linkage::Adjacent => true,
            Linkage::Paths(p) => p > k,
        }
    }
}

/// Maximum number of internally disjoint `u`–`v` paths, or
/// [`Linkage::Adjacent`].
pub fn disjoint_path_count(g: &Graph, u: usize, v: usize) -> Result<Linkage> {
    if u == v {
        return Err(Error::SameVertex(g.label(u).to_string()));
    }
    if g.adjacent(u, v) {
        return Ok(Linkage::Adjacent);
    }
    Ok(Linkage::Paths(
        VertexFlow::new(g, g.vertices()).max_flow(u, v),
    ))
}

/// Residual network with every vertex split into an in/out pair joined by a
/// unit-capacity arc; graph edges become two infinite-capacity arcs.
struct VertexFlow {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl VertexFlow {
    const INF: u32 = u32::MAX / 2;

    fn new(g: &Graph, within: VertexSet) -> Self {
        let n = g.vertex_count();
        let mut net = VertexFlow {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for v in within {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            if within.contains(u) && within.contains(v) {
                net.arc(2 * u + 1, 2 * v, Self::INF);
                net.arc(2 * v + 1, 2 * u, Self::INF);
            }
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Flow from `s`'s out-node to `t`'s in-node, one BFS augmentation at a
    /// time; each augmentation carries one unit.
    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.adj.len()];
        loop {
            via.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut found = false;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    found = true;
                    break;
                }
                for &e in &self.adj[x] {
                    let y = self.head[e];
                    if self.cap[e] > 0 && y != source && via[y] == usize::MAX {
                        via[y] = e;
                        queue.push_back(y);
                    }
                }
            }
            if !found {
                return flow;
            }
            let mut x = sink;
            while x != source {
                let e = via[x];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                x = self.head[e ^ 1];
            }
            flow += 1;
        }
    }
}

/// Pairwise linkage of every vertex pair, computed once per graph.
#[derive(Clone, Debug)]
pub struct LinkageTable {
    n: usize,
    cells: Vec<Linkage>,
}

impl LinkageTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let found = par::map(&pairs, |&(u, v)| {
            disjoint_path_count(g, u, v).expect("distinct endpoints")
        });
        let mut cells = vec![Linkage::Paths(0); n * n];
        for (&(u, v), l) in pairs.iter().zip(found) {
            cells[u * n + v] = l;
            cells[v * n + u] = l;
        }
        LinkageTable { n, cells }
    }

    pub fn get(&self, u: usize, v: usize) -> Linkage {
        self.cells[u * self.n + v]
    }

    /// For each vertex, the vertices it cannot be parted from at level `k`.
    pub fn linked_at(&self, k: usize) -> Vec<VertexSet> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter(|&v| v != u && self.get(u, v).survives(k))
                    .collect()
            })
            .collect()
    }

    pub fn pair_inseparable(&self, u: usize, v: usize, k: usize) -> bool {
        u == v || self.get(u, v).survives(k)
    }

    pub fn is_k_inseparable_set(&self, set: VertexSet, k: usize) -> bool {
        set.len() > k
            && set.iter().all(|u| {
                set.iter()
                    .filter(|&v| v > u)
                    .all(|v| self.get(u, v).survives(k))
            })
    }
}

/// Whether no set of at most `k` vertices avoiding `u` and `v` separates them.
pub fn pair_inseparable(g: &Graph, u: usize, v: usize, k: usize) -> Result<bool> {
    Ok(disjoint_path_count(g, u, v)?.survives(k))
}

pub fn is_k_inseparable_set(g: &Graph, set: VertexSet, k: usize) -> bool {
    if set.len() <= k {
        return false;
    }
    let members: Vec<usize> = set.iter().collect();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&v| pair_inseparable(g, u, v, k).expect("distinct members"))
    })
}

/// The maximal k-inseparable sets of a graph at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaFamily {
    pub k: usize,
    /// Sorted canonically; no member contains another.
    pub members: Vec<VertexSet>,
}

impl OmegaFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index pairs `(i, j)` with `i < j`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.members.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect()
    }
}

pub fn maximal_k_inseparable_sets(g: &Graph, k: usize) -> OmegaFamily {
    maximal_sets_from_table(&LinkageTable::new(g), k)
}

pub(crate) fn maximal_sets_from_table(table: &LinkageTable, k: usize) -> OmegaFamily {
    let linked = table.linked_at(k);
    let mut cliques = Vec::new();
    let all = VertexSet::full(linked.len());
    bron_kerbosch(
        &linked,
        VertexSet::EMPTY,
        all,
        VertexSet::EMPTY,
        k + 1,
        &mut cliques,
    );
    let members = merge_overlapping(cliques, k);
    OmegaFamily { k, members }
}

/// Maximal cliques of size at least `min_size` in the relation `linked`,
/// with Tomita pivoting.
fn bron_kerbosch(
    linked: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    min_size: usize,
    out: &mut Vec<VertexSet>,
) {
    if r.len() + p.len() < min_size {
        return;
    }
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| linked[u].intersection(p).len())
        .expect("p is nonempty");
    for v in p.difference(linked[pivot]) {
        bron_kerbosch(
            linked,
            r.with(v),
            p.intersection(linked[v]),
            x.intersection(linked[v]),
            min_size,
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Unions sets sharing at least `k + 1` vertices until nothing changes; a
/// union of two k-inseparable sets with such an overlap is k-inseparable.
fn merge_overlapping(mut sets: Vec<VertexSet>, k: usize) -> Vec<VertexSet> {
    loop {
        let mut merged = false;
        'scan: for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i].intersection(sets[j]).len() > k {
                    let joined = sets[i].union(sets[j]);
                    sets.swap_remove(j);
                    sets[i] = joined;
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let snapshot = sets.clone();
    sets.retain(|s| !snapshot.iter().any(|t| s.is_proper_subset(*t)));
    sets.sort();
    sets.dedup();
    sets
}

/// Result of the κ search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kappa {
    /// No level separates two inseparable sets; the structure tree is a single
    /// block.
    Trivial,
    Level {
        kappa: usize,
        omega: OmegaFamily,
    },
}

impl Kappa {
    pub fn value(&self) -> Option<usize> {
        match self {
            Kappa::Trivial => None,
            Kappa::Level { kappa, .. } => Some(*kappa),
        }
    }
}

/// Least `k` at which some connected `C` with `|N(C)| = k` separates two
/// k-inseparable sets.
///
/// Two distinct maximal k-inseparable sets can never lie on one side of every
/// separator of size at most `k` (their union would be inseparable), and any
/// separation at a lower level would already have been found there, so the
/// search stops at the first level with two or more maximal sets.
pub fn compute_kappa(g: &Graph) -> Result<Kappa> {
    g.require_connected()?;
    if g.vertex_count() < 3 {
        return Ok(Kappa::Trivial);
    }
    let table = LinkageTable::new(g);
    Ok(kappa_from_table(&table, g.vertex_count()))
}

pub(crate) fn kappa_from_table(table: &LinkageTable, n: usize) -> Kappa {
    for k in 1..n.saturating_sub(1) {
        let omega = maximal_sets_from_table(table, k);
        if omega.len() >= 2 {
            return Kappa::Level { kappa: k, omega };
        }
        if omega.is_empty() {
            // Every k-inseparable set is (k-1)-inseparable; none above k either.
            break;
        }
    }
    Kappa::Trivial
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set(labels.iter().copied()).unwrap()
    }

    fn v(g: &Graph, l: &str) -> usize {
        g.vertex(l).unwrap()
    }

    /// Exhaustive minimum vertex cut between non-adjacent `u`, `v`; by Menger
    /// this equals the disjoint-path count.
    fn brute_min_cut(g: &Graph, u: usize, w: usize) -> usize {
        let others: Vec<usize> = g.vertices().without(u).without(w).iter().collect();
        for size in 0..=others.len() {
            for cut in itertools::Itertools::combinations(others.iter().copied(), size) {
                let cut: VertexSet = cut.into_iter().collect();
                let rest = g.vertices().difference(cut);
                if !g.component_of(u, rest).contains(w) {
                    return size;
                }
            }
        }
        unreachable!("non-adjacent vertices have a separating set")
    }

    #[test]
    fn disjoint_paths_examples() {
        let k5 = fixtures::complete(5);
        assert_eq!(disjoint_path_count(&k5, 0, 3).unwrap(), Linkage::Adjacent);

        let x5 = fixtures::x_graph(5);
        assert_eq!(brute_min_cut(&x5, v(&x5, "1"), v(&x5, "5")), 3);
        assert_eq!(
            disjoint_path_count(&x5, v(&x5, "1"), v(&x5, "5")).unwrap(),
            Linkage::Paths(3)
        );

        let ring = fixtures::ring();
        assert_eq!(brute_min_cut(&ring, v(&ring, "x1"), v(&ring, "x3")), 2);
        assert_eq!(
            disjoint_path_count(&ring, v(&ring, "x1"), v(&ring, "x3")).unwrap(),
            Linkage::Paths(2)
        );
        assert!(matches!(
            disjoint_path_count(&ring, 2, 2),
            Err(Error::SameVertex(_))
        ));
    }

    #[test]
    fn disjoint_paths_agree_with_min_cut_on_random_graphs() {
        for seed in 0..30 {
            let g = fixtures::random_connected(8, 0.35, seed);
            for u in 0..8 {
                for w in u + 1..8 {
                    if !g.adjacent(u, w) {
                        assert_eq!(
                            disjoint_path_count(&g, u, w).unwrap(),
                            Linkage::Paths(brute_min_cut(&g, u, w)),
                            "seed {seed} pair {u},{w}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pair_inseparable_examples() {
        let ring = fixtures::ring();
        assert!(!pair_inseparable(&ring, v(&ring, "x1"), v(&ring, "x3"), 2).unwrap());
        let x5 = fixtures::x_graph(5);
        assert!(pair_inseparable(&x5, v(&x5, "a"), v(&x5, "b"), 3).unwrap());
        assert!(pair_inseparable(&x5, v(&x5, "a"), v(&x5, "b"), 50).unwrap());
    }

    #[test]
    fn set_inseparability_examples() {
        let x5 = fixtures::x_graph(5);
        assert!(is_k_inseparable_set(
            &x5,
            set(&x5, &["2", "3", "a", "b"]),
            3
        ));
        assert!(!is_k_inseparable_set(&x5, set(&x5, &["1", "5", "a"]), 3));
        assert!(!is_k_inseparable_set(&x5, set(&x5, &["a", "b", "2"]), 3));
        let table = LinkageTable::new(&x5);
        assert!(table.is_k_inseparable_set(set(&x5, &["2", "3", "a", "b"]), 3));
    }

    #[test]
    fn maximal_sets_of_x5() {
        let x5 = fixtures::x_graph(5);
        let omega = maximal_k_inseparable_sets(&x5, 3);
        let expected: Vec<VertexSet> = (1..5)
            .map(|i| {
                let (a, b) = (i.to_string(), (i + 1).to_string());
                set(&x5, &[a.as_str(), b.as_str(), "a", "b"])
            })
            .collect();
        assert_eq!(omega.members, expected);
    }

    #[test]
    fn maximal_sets_of_complete_graph_and_ring() {
        let k6 = fixtures::complete(6);
        assert_eq!(
            maximal_k_inseparable_sets(&k6, 3).members,
            vec![k6.vertices()]
        );

        let ring = fixtures::ring();
        let omega = maximal_k_inseparable_sets(&ring, 2);
        let mut expected = vec![
            set(&ring, &["x1", "x2", "y1"]),
            set(&ring, &["x2", "x3", "y2"]),
            set(&ring, &["x3", "x4", "y3"]),
            set(&ring, &["x4", "x1", "y4"]),
        ];
        expected.sort();
        assert_eq!(omega.members, expected);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(
            compute_kappa(&fixtures::x_graph(5)).unwrap().value(),
            Some(3)
        );
        assert_eq!(compute_kappa(&fixtures::ring()).unwrap().value(), Some(2));
        for m in 2..8 {
            assert_eq!(
                compute_kappa(&fixtures::complete(m)).unwrap(),
                Kappa::Trivial
            );
        }
        assert_eq!(compute_kappa(&fixtures::path(3)).unwrap().value(), Some(1));
    }

    #[test]
    fn kappa_rejects_disconnected_input() {
        let g = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
        assert!(matches!(compute_kappa(&g), Err(Error::Disconnected { .. })));
    }
}
