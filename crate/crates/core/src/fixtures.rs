//! Named graphs used throughout the tests, benches and docs, plus a seeded
//! random connected-graph generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(vertices: Vec<String>, edges: Vec<(String, String)>) -> Graph {
    Graph::new(vertices, edges).expect("fixture fits in the vertex budget")
}

/// `X_n`: a path `1, …, n`, a 4-cycle `a, b, c, d`, and every path vertex
/// joined to both `a` and `b`.
pub fn x_graph(n: usize) -> Graph {
    assert!(n >= 3, "X_n needs n >= 3");
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 1..n {
        edges.push((i.to_string(), (i + 1).to_string()));
    }
    for (u, v) in [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")] {
        edges.push((u.into(), v.into()));
    }
    for i in 1..=n {
        edges.push((i.to_string(), "a".into()));
        edges.push((i.to_string(), "b".into()));
    }
    build(Vec::new(), edges)
}

/// 4-cycle `x1 … x4` with a triangle hung on every cycle edge: `yi` is
/// adjacent to `xi` and `x(i+1)`.
pub fn ring() -> Graph {
    let mut edges = Vec::new();
    for i in 1..=4 {
        let next = i % 4 + 1;
        edges.push((format!("x{i}"), format!("x{next}")));
        edges.push((format!("y{i}"), format!("x{i}")));
        edges.push((format!("y{i}"), format!("x{next}")));
    }
    build(Vec::new(), edges)
}

/// Complete graph on vertices `0 … m-1`.
pub fn complete(m: usize) -> Graph {
    let vertices = (0..m).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i.to_string(), j.to_string()));
        }
    }
    build(vertices, edges)
}

/// Cycle on vertices `0 … m-1`.
pub fn cycle(m: usize) -> Graph {
    circulant(m, &[1])
}

/// Path `0 – 1 – … – (n-1)`.
pub fn path(n: usize) -> Graph {
    let vertices = (0..n).map(|i| i.to_string()).collect();
    let edges = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    build(vertices, edges)
}

/// Circulant graph `C_n(jumps)`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let vertices = (0..n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for &j in jumps {
            edges.push((i.to_string(), ((i + j) % n).to_string()));
        }
    }
    build(vertices, edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((format!("o{i}"), format!("o{}", (i + 1) % 5)));
        edges.push((format!("i{i}"), format!("i{}", (i + 2) % 5)));
        edges.push((format!("o{i}"), format!("i{i}")));
    }
    build(Vec::new(), edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..p {
        for j in 0..q {
            edges.push((format!("l{i}"), format!("r{j}")));
        }
    }
    build(Vec::new(), edges)
}

/// 3-dimensional hypercube on bit-string labels.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8u32 {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((format!("{v:03b}"), format!("{w:03b}")));
            }
        }
    }
    build(Vec::new(), edges)
}

/// Twelve vertices at `κ = 4` where the canonical nested system keeps cuts
/// of crossing number 2 next to the crossing-free ones: some pairs of maximal
/// sets are only separated by cuts that cross others. Found by a seeded
/// search over cliques joined by random edges.
pub fn surplus_nested() -> Graph {
    const EDGES: [(&str, &str); 35] = [
        ("v00", "v01"),
        ("v00", "v02"),
        ("v00", "v03"),
        ("v00", "v04"),
        ("v00", "v06"),
        ("v00", "v07"),
        ("v00", "v08"),
        ("v00", "v10"),
        ("v01", "v02"),
        ("v01", "v03"),
        ("v01", "v09"),
        ("v01", "v10"),
        ("v01", "v11"),
        ("v02", "v03"),
        ("v02", "v04"),
        ("v02", "v07"),
        ("v02", "v10"),
        ("v03", "v09"),
        ("v03", "v11"),
        ("v04", "v05"),
        ("v04", "v06"),
        ("v04", "v07"),
        ("v04", "v08"),
        ("v04", "v10"),
        ("v05", "v06"),
        ("v05", "v07"),
        ("v05", "v08"),
        ("v06", "v07"),
        ("v06", "v08"),
        ("v07", "v08"),
        ("v07", "v10"),
        ("v08", "v09"),
        ("v09", "v10"),
        ("v09", "v11"),
        ("v10", "v11"),
    ];
    Graph::from_edges(&EDGES).expect("fixture is well formed")
}

/// Erdős–Rényi graph on `n` vertices conditioned on connectivity, by
/// rejection. Labels are `v0 … v(n-1)`; the same seed gives the same graph.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((format!("v{i:02}"), format!("v{j:02}")));
                }
            }
        }
        let vertices = (0..n).map(|i| format!("v{i:02}")).collect();
        let g = build(vertices, edges);
        if g.is_connected() {
            return g;
        }
    }
}
