//! Thin cut systems at level κ: enumeration, axiom checks, A/B classification,
//! slices, and the slice-free quotient graph.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Corner, Embedding, Graph, VertexSet};
use crate::inseparable::OmegaFamily;
use crate::nesting::are_nested;
use crate::par;

/// A cut: a connected vertex set that is a full component of `V \ N(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub id: usize,
    pub vertices: VertexSet,
    pub boundary: VertexSet,
    pub star: VertexSet,
}

/// Which side of a cut a pre-cut stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Cut,
    StarComplement,
}

/// A cut or the star-complement of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PreCut {
    pub cut: usize,
    pub side: Side,
}

impl PreCut {
    pub fn vertices(self, sys: &CutSystem) -> VertexSet {
        let cut = &sys.cuts[self.cut];
        match self.side {
            Side::Cut => cut.vertices,
            Side::StarComplement => cut.star,
        }
    }

    /// The star-complement involution.
    pub fn star(self) -> PreCut {
        let side = match self.side {
            Side::Cut => Side::StarComplement,
            Side::StarComplement => Side::Cut,
        };
        PreCut { side, ..self }
    }
}

/// A finite family of cuts with uniform boundary size `kappa`.
#[derive(Clone, Debug)]
pub struct CutSystem {
    pub graph: Graph,
    pub kappa: usize,
    /// Canonical order (by vertex set); `cuts[i].id == i`.
    pub cuts: Vec<Cut>,
    pub omega: OmegaFamily,
    /// Distinct boundaries, sorted.
    pub separators: Vec<VertexSet>,
    index: HashMap<VertexSet, usize>,
}

impl CutSystem {
    /// Builds a system from cut vertex sets; boundaries and star-complements
    /// are computed in `graph`. Duplicates collapse.
    pub fn from_sets(
        graph: Graph,
        kappa: usize,
        omega: OmegaFamily,
        sets: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        let sets: BTreeSet<VertexSet> = sets.into_iter().collect();
        let cuts: Vec<Cut> = sets
            .into_iter()
            .enumerate()
            .map(|(id, vertices)| Cut {
                id,
                vertices,
                boundary: graph.boundary(vertices),
                star: graph.star_complement(vertices),
            })
            .collect();
        let separators: Vec<VertexSet> = cuts
            .iter()
            .map(|c| c.boundary)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = cuts.iter().map(|c| (c.vertices, c.id)).collect();
        CutSystem {
            graph,
            kappa,
            cuts,
            omega,
            separators,
            index,
        }
    }

    /// Subsystem keeping the cuts whose ids satisfy `keep`; ids are reassigned.
    pub fn subsystem(&self, keep: impl Fn(&Cut) -> bool) -> CutSystem {
        CutSystem::from_sets(
            self.graph.clone(),
            self.kappa,
            self.omega.clone(),
            self.cuts.iter().filter(|c| keep(c)).map(|c| c.vertices),
        )
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn cut(&self, id: usize) -> &Cut {
        &self.cuts[id]
    }

    pub fn find(&self, vertices: VertexSet) -> Option<usize> {
        self.index.get(&vertices).copied()
    }

    pub fn is_cut(&self, vertices: VertexSet) -> bool {
        self.index.contains_key(&vertices)
    }

    /// Whether some cut lies entirely inside `set`.
    pub fn contains_a_cut(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.cuts.iter().any(|c| c.vertices.is_subset(set))
    }

    /// Components of `set` that are cuts of this system.
    pub fn cut_components(&self, set: VertexSet) -> Vec<usize> {
        self.graph
            .components(set)
            .into_iter()
            .filter_map(|comp| self.find(comp))
            .collect()
    }

    /// Cuts with the given boundary.
    pub fn cuts_at(&self, separator: VertexSet) -> impl Iterator<Item = &Cut> + '_ {
        self.cuts.iter().filter(move |c| c.boundary == separator)
    }

    pub fn precuts(&self) -> impl Iterator<Item = PreCut> + '_ {
        (0..self.cuts.len()).flat_map(|cut| {
            [Side::Cut, Side::StarComplement]
                .into_iter()
                .map(move |side| PreCut { cut, side })
        })
    }

    /// Whether `cut` separates `a` from `b`: each lies on its own closed side
    /// and neither is inside the boundary.
    pub fn separates(&self, cut: usize, a: VertexSet, b: VertexSet) -> bool {
        separates(self.cut(cut), a, b)
    }

    /// Cuts separating two members of `omega` (by index).
    pub fn separating(&self, i: usize, j: usize) -> Vec<usize> {
        let (a, b) = (self.omega.members[i], self.omega.members[j]);
        self.cuts
            .iter()
            .filter(|c| separates(c, a, b))
            .map(|c| c.id)
            .collect()
    }
}

pub fn separates(cut: &Cut, a: VertexSet, b: VertexSet) -> bool {
    if a.is_subset(cut.boundary) || b.is_subset(cut.boundary) {
        return false;
    }
    let near = cut.vertices.union(cut.boundary);
    let far = cut.star.union(cut.boundary);
    (a.is_subset(near) && b.is_subset(far)) || (b.is_subset(near) && a.is_subset(far))
}

/// How candidate separators are generated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Enumeration {
    /// Every κ-subset of the vertex set.
    #[default]
    Exhaustive,
    /// Only tight separators between members of distinct Ω-sets.
    TightSeparators,
}

pub fn enumerate_cuts(g: &Graph, kappa: usize, omega: &OmegaFamily) -> CutSystem {
    enumerate_cuts_with(g, kappa, omega, Enumeration::default())
}

/// All components `C` of `V \ S`, over κ-sets `S` with `N(C) = S` and
/// `(C*)* = C`, that separate two members of `omega`.
pub fn enumerate_cuts_with(
    g: &Graph,
    kappa: usize,
    omega: &OmegaFamily,
    strategy: Enumeration,
) -> CutSystem {
    let candidates: Vec<VertexSet> = match strategy {
        Enumeration::Exhaustive => g
            .vertices()
            .iter()
            .combinations(kappa)
            .map(|s| s.into_iter().collect())
            .collect(),
        Enumeration::TightSeparators => tight_candidates(g, kappa, omega),
    };
    let found = par::flat_map(&candidates, |&sep| cuts_at_separator(g, sep, omega));
    CutSystem::from_sets(g.clone(), kappa, omega.clone(), found)
}

fn cuts_at_separator(g: &Graph, sep: VertexSet, omega: &OmegaFamily) -> Vec<VertexSet> {
    g.components(g.vertices().difference(sep))
        .into_iter()
        .filter(|&comp| {
            if g.boundary(comp) != sep {
                return false;
            }
            let star = g.star_complement(comp);
            if g.star_complement(star) != comp {
                return false;
            }
            let near = comp.union(sep);
            let far = star.union(sep);
            omega.members.iter().any(|m| m.is_subset(near))
                && omega.members.iter().any(|m| m.is_subset(far))
        })
        .collect()
}

fn tight_candidates(g: &Graph, kappa: usize, omega: &OmegaFamily) -> Vec<VertexSet> {
    let mut endpoints = BTreeSet::new();
    for (i, j) in omega.pairs() {
        for x in omega.members[i] {
            for y in omega.members[j] {
                if x != y && !g.adjacent(x, y) {
                    endpoints.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    let endpoints: Vec<(usize, usize)> = endpoints.into_iter().collect();
    let found = par::flat_map(&endpoints, |&(x, y)| tight_separators(g, x, y, kappa));
    found
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Sets `S` with `|S| = k` and `x, y ∉ S` such that `x` and `y` lie in
/// distinct components of `V \ S`, each adjacent to every vertex of `S`.
pub fn enumerate_tight_separators(
    g: &Graph,
    x: usize,
    y: usize,
    k: usize,
) -> Result<Vec<VertexSet>> {
    if x == y {
        return Err(Error::SameVertex(g.label(x).to_string()));
    }
    Ok(tight_separators(g, x, y, k))
}

fn tight_separators(g: &Graph, x: usize, y: usize, k: usize) -> Vec<VertexSet> {
    let mut raw = BTreeSet::new();
    separator_candidates(g, g.vertices(), x, y, k, VertexSet::EMPTY, &mut raw);
    raw.into_iter()
        .filter(|&sep| is_tight(g, sep, x, y))
        .collect()
}

/// Every `x`–`y` separator of size `k` meets any `x`–`y` path, so branching on
/// the interior of a shortest path and recursing with one vertex removed
/// reaches all of them.
fn separator_candidates(
    g: &Graph,
    alive: VertexSet,
    x: usize,
    y: usize,
    k: usize,
    chosen: VertexSet,
    out: &mut BTreeSet<VertexSet>,
) {
    let Some(path) = shortest_path(g, alive, x, y) else {
        if k == 0 {
            out.insert(chosen);
        }
        return;
    };
    if k == 0 {
        return;
    }
    for &z in &path[1..path.len() - 1] {
        separator_candidates(g, alive.without(z), x, y, k - 1, chosen.with(z), out);
    }
}

fn shortest_path(g: &Graph, alive: VertexSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut seen = VertexSet::singleton(from);
    let mut frontier = vec![from];
    while !frontier.is_empty() && !seen.contains(to) {
        let mut next = Vec::new();
        for u in frontier {
            for w in g.neighbours(u).intersection(alive).difference(seen) {
                seen.insert(w);
                parent[w] = u;
                next.push(w);
            }
        }
        frontier = next;
    }
    if !seen.contains(to) {
        return None;
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

fn is_tight(g: &Graph, sep: VertexSet, x: usize, y: usize) -> bool {
    if sep.contains(x) || sep.contains(y) {
        return false;
    }
    let rest = g.vertices().difference(sep);
    let (cx, cy) = (g.component_of(x, rest), g.component_of(y, rest));
    !cx.contains(y) && g.boundary(cx) == sep && g.boundary(cy) == sep
}

/// A violation of axiom (A1): `component` contains a cut, sits in one of two
/// cut-bearing opposite corners of `c` and `d`, and is not itself a cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Violation {
    pub c: usize,
    pub d: usize,
    pub component: VertexSet,
}

/// Result of checking the cut-system axioms over all pairs of cuts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// Cuts with `(C*)* != C`, or empty or disconnected cuts.
    pub malformed: Vec<usize>,
    pub a1: Vec<A1Violation>,
    /// Unordered pairs with no two opposite cut-bearing corners.
    pub a2: Vec<(usize, usize)>,
    /// Ordered pairs `(c, d)` where `C \ ND` or `C* \ ND` holds no cut.
    pub a2_prime: Vec<(usize, usize)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.malformed.is_empty()
            && self.a1.is_empty()
            && self.a2.is_empty()
            && self.a2_prime.is_empty()
    }

    /// (A2) and (A2') hold or fail together.
    pub fn a2_variants_agree(&self) -> bool {
        self.a2.is_empty() == self.a2_prime.is_empty()
    }
}

pub fn verify_axioms(sys: &CutSystem) -> AxiomReport {
    let g = &sys.graph;
    let malformed = sys
        .cuts
        .iter()
        .filter(|c| {
            !g.is_connected_set(c.vertices)
                || g.star_complement(c.star) != c.vertices
                || c.boundary != g.boundary(c.vertices)
        })
        .map(|c| c.id)
        .collect();

    let n = sys.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let per_pair = par::map(&pairs, |&(i, j)| check_pair(sys, i, j));

    let mut report = AxiomReport {
        malformed,
        ..AxiomReport::default()
    };
    for ((i, j), (a1, a2_ok, a2p_ij, a2p_ji)) in pairs.into_iter().zip(per_pair) {
        report.a1.extend(a1);
        if !a2_ok {
            report.a2.push((i, j));
        }
        if !a2p_ij {
            report.a2_prime.push((i, j));
        }
        if i != j && !a2p_ji {
            report.a2_prime.push((j, i));
        }
    }
    report.a2_prime.sort();
    report
}

fn check_pair(sys: &CutSystem, i: usize, j: usize) -> (Vec<A1Violation>, bool, bool, bool) {
    let g = &sys.graph;
    let (c, d) = (sys.cut(i), sys.cut(j));
    let cd = g.corners(c.vertices, d.vertices);
    let bearing: HashMap<Corner, bool> = Corner::ALL
        .iter()
        .map(|&k| (k, sys.contains_a_cut(cd.corner(k))))
        .collect();

    let mut a1 = Vec::new();
    let mut a2_ok = false;
    for first in [Corner::CD, Corner::CDstar] {
        let second = first.opposite();
        if !(bearing[&first] && bearing[&second]) {
            continue;
        }
        a2_ok = true;
        for corner in [first, second] {
            for comp in g.components(cd.corner(corner)) {
                if sys.contains_a_cut(comp) && !sys.is_cut(comp) {
                    a1.push(A1Violation {
                        c: i,
                        d: j,
                        component: comp,
                    });
                }
            }
        }
    }
    a1.sort_by_key(|v| v.component);
    a1.dedup();

    let a2_prime = |x: &Cut, y: &Cut| {
        sys.contains_a_cut(x.vertices.difference(y.boundary))
            && sys.contains_a_cut(x.star.difference(y.boundary))
    };
    (a1, a2_ok, a2_prime(c, d), a2_prime(d, c))
}

/// A-cut: nested with every cut. B-cut: its star-complement has exactly one
/// component that is a cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutClass {
    pub is_a: bool,
    pub is_b: bool,
}

pub fn classify_cut(sys: &CutSystem, id: usize) -> CutClass {
    let is_a = (0..sys.len()).all(|other| are_nested(sys, id, other));
    let is_b = sys.cut_components(sys.cut(id).star).len() == 1;
    CutClass { is_a, is_b }
}

/// A component of `V \ S`, for a separator `S`, that is not a cut.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Slice {
    pub vertices: VertexSet,
    /// Smallest separator the slice is a component of the complement of.
    pub separator: VertexSet,
}

pub fn find_slices(sys: &CutSystem) -> Vec<Slice> {
    let g = &sys.graph;
    let mut slices: Vec<Slice> = Vec::new();
    for &sep in &sys.separators {
        for comp in g.components(g.vertices().difference(sep)) {
            if !sys.is_cut(comp) && !slices.iter().any(|s| s.vertices == comp) {
                slices.push(Slice {
                    vertices: comp,
                    separator: sep,
                });
            }
        }
    }
    slices.sort();
    slices
}

/// The slice-free quotient: slice vertices removed, each slice boundary made a
/// clique, every cut intersected with the remaining vertices.
#[derive(Clone, Debug)]
pub struct HatGraph {
    pub graph: Graph,
    /// Hat-graph indices to original indices.
    pub embedding: Embedding,
    /// Cut `i` here is the image of cut `i` of the original system.
    pub system: CutSystem,
    pub slices: Vec<Slice>,
}

impl HatGraph {
    /// Original-graph vertex set of a hat-graph set.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        self.embedding.lift(set)
    }
}

pub fn hat_graph(sys: &CutSystem) -> Result<HatGraph> {
    let g = &sys.graph;
    let slices = find_slices(sys);
    let slice_vertices = slices
        .iter()
        .fold(VertexSet::EMPTY, |acc, s| acc.union(s.vertices));
    let keep = g.vertices().difference(slice_vertices);
    let extra: Vec<(usize, usize)> = slices
        .iter()
        .flat_map(|s| {
            let nq: Vec<usize> = g.boundary(s.vertices).iter().collect();
            nq.into_iter().tuple_combinations().collect::<Vec<_>>()
        })
        .collect();
    let (hat, embedding) = g.induced_with_edges(keep, extra);

    let mut lifted = Vec::with_capacity(sys.len());
    for cut in &sys.cuts {
        let hat_cut = embedding.restrict(cut.vertices);
        if hat_cut.is_empty() {
            return Err(Error::Invariant(format!(
                "cut {} vanishes in the slice-free graph",
                cut.id
            )));
        }
        if embedding.lift(hat.boundary(hat_cut)) != cut.boundary {
            return Err(Error::Invariant(format!(
                "boundary of cut {} changes in the slice-free graph",
                cut.id
            )));
        }
        lifted.push(hat_cut);
    }
    let omega = OmegaFamily {
        k: sys.omega.k,
        members: sys
            .omega
            .members
            .iter()
            .map(|&m| embedding.restrict(m))
            .collect(),
    };
    let system = CutSystem::from_sets(hat.clone(), sys.kappa, omega, lifted.iter().copied());
    // Restricting is monotone in the vertex order, but canonical order of the
    // images can still differ; keep ids aligned with the original system.
    let system = align_ids(system, &lifted);
    Ok(HatGraph {
        graph: hat,
        embedding,
        system,
        slices,
    })
}

fn align_ids(mut sys: CutSystem, order: &[VertexSet]) -> CutSystem {
    let mut cuts = Vec::with_capacity(order.len());
    for (id, &v) in order.iter().enumerate() {
        let mut cut = sys.cuts[sys.find(v).expect("lifted cut present")].clone();
        cut.id = id;
        cuts.push(cut);
    }
    sys.index = cuts.iter().map(|c| (c.vertices, c.id)).collect();
    sys.cuts = cuts;
    sys
}
