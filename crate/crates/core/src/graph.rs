//! Finite simple graphs over a label-ordered vertex universe, and the vertex-set
//! algebra (boundary, star-complement, corners) the rest of the crate is built on.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices of one graph, stored as a 128-bit membership mask.
///
/// Indices follow the label order of the owning graph, so iterating a set yields
/// its members in label order. The ordering on sets compares the ascending
/// member sequences lexicographically; it is the canonical order for output.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// The first `n` indices.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Immutable finite simple graph with text-labelled vertices.
///
/// Vertex indices are assigned in lexicographic label order, which makes every
/// derived result independent of input order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex labels and edges. Labels mentioned only in
    /// `edges` are added; self-loops are dropped and parallel edges collapse.
    pub fn new<V, E, S, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator<Item = (T, T)>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut names: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.into(), b.into()))
            .collect();
        for (a, b) in &edges {
            names.insert(a.clone());
            names.insert(b.clone());
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        let labels: Vec<String> = names.into_iter().collect();
        let index: HashMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut adj = vec![VertexSet::EMPTY; labels.len()];
        for (a, b) in &edges {
            let (u, v) = (index[a], index[b]);
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Ok(Graph { labels, index, adj })
    }

    /// Convenience constructor for edge lists of string slices.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        Graph::new(std::iter::empty::<String>(), edges.iter().copied())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require_vertex(&self, label: &str) -> Result<usize> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Vertex set from labels; unknown labels are an error.
    pub fn set<'a, I>(&self, labels: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .map(|l| self.require_vertex(l))
            .collect::<Result<VertexSet>>()
    }

    /// Labels of a set's members, in label order.
    pub fn set_labels(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_labels(&self) -> Vec<(&str, &str)> {
        self.edges()
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect()
    }

    /// Vertices outside `set` with a neighbour in `set`.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        let mut reach = VertexSet::EMPTY;
        for v in set {
            reach = reach.union(self.adj[v]);
        }
        reach.difference(set)
    }

    /// `V \ (set ∪ N(set))`.
    pub fn star_complement(&self, set: VertexSet) -> VertexSet {
        self.vertices()
            .difference(set)
            .difference(self.boundary(set))
    }

    /// Returns `(C*)*` together with `C'`, the boundary vertices with no
    /// neighbour in `C*`. Always `(C*)* = C ∪ C'`.
    pub fn double_star_closure(&self, set: VertexSet) -> (VertexSet, VertexSet) {
        let star = self.star_complement(set);
        let closure = self.star_complement(star);
        let isolated = self
            .boundary(set)
            .iter()
            .filter(|&v| self.adj[v].is_disjoint(star))
            .collect::<VertexSet>();
        (closure, isolated)
    }

    /// The component of `within` containing `start`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// Maximal connected subsets of `set`, ordered by smallest member.
    pub fn components(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_of(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.component_of(v, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.is_connected_set(self.vertices())
    }

    /// Errors unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        let parts = self.components(self.vertices());
        if parts.len() > 1 {
            return Err(Error::Disconnected {
                components: parts.len(),
            });
        }
        Ok(())
    }

    /// Nine-part decomposition of `V` induced by two vertex sets.
    pub fn corners(&self, c: VertexSet, d: VertexSet) -> CornerDecomposition {
        let (nc, nd) = (self.boundary(c), self.boundary(d));
        let (cs, ds) = (self.star_complement(c), self.star_complement(d));
        CornerDecomposition {
            c_d: c.intersection(d),
            c_dstar: c.intersection(ds),
            cstar_d: cs.intersection(d),
            cstar_dstar: cs.intersection(ds),
            c_nd: c.intersection(nd),
            cstar_nd: cs.intersection(nd),
            d_nc: d.intersection(nc),
            dstar_nc: ds.intersection(nc),
            centre: nc.intersection(nd),
        }
    }

    /// Subgraph induced on `keep` plus the given extra edges (indices of this
    /// graph), with the embedding back into this graph.
    pub fn induced_with_edges(
        &self,
        keep: VertexSet,
        extra: impl IntoIterator<Item = (usize, usize)>,
    ) -> (Graph, Embedding) {
        let to_parent: Vec<usize> = keep.iter().collect();
        let mut from_parent = vec![None; self.vertex_count()];
        for (i, &v) in to_parent.iter().enumerate() {
            from_parent[v] = Some(i);
        }
        let labels: Vec<String> = to_parent.iter().map(|&v| self.labels[v].clone()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut adj: Vec<VertexSet> = to_parent
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| from_parent[u].unwrap())
                    .collect()
            })
            .collect();
        for (u, v) in extra {
            if let (Some(a), Some(b)) = (from_parent[u], from_parent[v]) {
                if a != b {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
            }
        }
        let sub = Graph { labels, index, adj };
        (
            sub,
            Embedding {
                to_parent,
                from_parent,
            },
        )
    }

    /// Applies a vertex map given as `perm[v] = image of v`.
    pub fn map_set(perm: &[usize], set: VertexSet) -> VertexSet {
        set.iter().map(|v| perm[v]).collect()
    }

    /// Whether `perm` is a bijection preserving adjacency.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        if perm.len() != n || perm.iter().collect::<BTreeSet<_>>().len() != n {
            return false;
        }
        if perm.iter().any(|&p| p >= n) {
            return false;
        }
        (0..n).all(|v| Graph::map_set(perm, self.adj[v]) == self.adj[perm[v]])
    }

    /// Translates a label map into an index permutation.
    pub fn permutation(&self, mapping: &[(&str, &str)]) -> Result<Vec<usize>> {
        let mut perm: Vec<usize> = (0..self.vertex_count()).collect();
        for (from, to) in mapping {
            perm[self.require_vertex(from)?] = self.require_vertex(to)?;
        }
        Ok(perm)
    }
}

/// Index correspondence between a derived graph and the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl Embedding {
    pub fn identity(n: usize) -> Self {
        Embedding {
            to_parent: (0..n).collect(),
            from_parent: (0..n).map(Some).collect(),
        }
    }

    /// Child set to parent indices.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.to_parent[v]).collect()
    }

    /// Parent set to child indices; members outside the child are dropped.
    pub fn restrict(&self, set: VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.from_parent[v]).collect()
    }

    /// Parent vertices present in the child.
    pub fn image(&self) -> VertexSet {
        self.to_parent.iter().copied().collect()
    }
}

/// Corners, links and centre of two vertex sets `C` and `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerDecomposition {
    pub c_d: VertexSet,
    pub c_dstar: VertexSet,
    pub cstar_d: VertexSet,
    pub cstar_dstar: VertexSet,
    /// `C ∩ ND`, counted by `a`.
    pub c_nd: VertexSet,
    /// `C* ∩ ND`, counted by `c`.
    pub cstar_nd: VertexSet,
    /// `D ∩ NC`, counted by `d`.
    pub d_nc: VertexSet,
    /// `D* ∩ NC`, counted by `b`.
    pub dstar_nc: VertexSet,
    pub centre: VertexSet,
}

/// The four corners, named by which side of each set they lie on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    CD,
    CDstar,
    CstarD,
    CstarDstar,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::CD,
        Corner::CDstar,
        Corner::CstarD,
        Corner::CstarDstar,
    ];

    pub fn opposite(self) -> Corner {
        match self {
            Corner::CD => Corner::CstarDstar,
            Corner::CDstar => Corner::CstarD,
            Corner::CstarD => Corner::CDstar,
            Corner::CstarDstar => Corner::CD,
        }
    }
}

impl CornerDecomposition {
    pub fn a(&self) -> usize {
        self.c_nd.len()
    }
    pub fn b(&self) -> usize {
        self.dstar_nc.len()
    }
    pub fn c(&self) -> usize {
        self.cstar_nd.len()
    }
    pub fn d(&self) -> usize {
        self.d_nc.len()
    }
    pub fn m(&self) -> usize {
        self.centre.len()
    }

    pub fn corner(&self, which: Corner) -> VertexSet {
        match which {
            Corner::CD => self.c_d,
            Corner::CDstar => self.c_dstar,
            Corner::CstarD => self.cstar_d,
            Corner::CstarDstar => self.cstar_dstar,
        }
    }

    /// The two links adjacent to a corner.
    pub fn links_of(&self, which: Corner) -> (VertexSet, VertexSet) {
        match which {
            Corner::CD => (self.c_nd, self.d_nc),
            Corner::CDstar => (self.c_nd, self.dstar_nc),
            Corner::CstarD => (self.cstar_nd, self.d_nc),
            Corner::CstarDstar => (self.cstar_nd, self.dstar_nc),
        }
    }

    pub fn links(&self) -> [VertexSet; 4] {
        [self.c_nd, self.cstar_nd, self.d_nc, self.dstar_nc]
    }

    pub fn empty_link_count(&self) -> usize {
        self.links().iter().filter(|l| l.is_empty()).count()
    }

    /// All nine parts: four corners, four links, centre.
    pub fn parts(&self) -> [VertexSet; 9] {
        [
            self.c_d,
            self.c_dstar,
            self.cstar_d,
            self.cstar_dstar,
            self.c_nd,
            self.cstar_nd,
            self.d_nc,
            self.dstar_nc,
            self.centre,
        ]
    }
}
