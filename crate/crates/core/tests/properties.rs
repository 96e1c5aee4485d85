use kappatree::cuts::{enumerate_cuts_with, verify_axioms, Enumeration};
use kappatree::nesting::are_nested;
use kappatree::oracle::{oracle_kappa, oracle_nested, OracleBudget};
use kappatree::tree::validate_tree;
use kappatree::{analyze, Graph, VertexSet};
use proptest::prelude::*;

/// Connected graphs on 4 to 10 vertices: a random spanning tree plus random
/// extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (4usize..=10)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
            let extra = proptest::collection::vec(0.0f64..1.0, n * (n - 1) / 2);
            (Just(n), parents, extra, 0.2f64..0.7)
        })
        .prop_map(|(n, parents, extra, density)| {
            let label = |i: usize| format!("v{i:02}");
            let mut edges: Vec<(String, String)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (label(i + 1), label(p)))
                .collect();
            let mut draws = extra.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if draws.next().unwrap() < density {
                        edges.push((label(i), label(j)));
                    }
                }
            }
            Graph::new((0..n).map(label), edges).unwrap()
        })
}

fn subset(g: &Graph, bits: u128) -> VertexSet {
    VertexSet::from_bits(bits).intersection(g.vertices())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn star_complement_partitions(g in connected_graph(), bits in any::<u128>()) {
        let c = subset(&g, bits);
        let (nc, star) = (g.boundary(c), g.star_complement(c));
        prop_assert!(c.is_disjoint(nc) && c.is_disjoint(star) && nc.is_disjoint(star));
        prop_assert_eq!(c.union(nc).union(star), g.vertices());
        prop_assert!(g.boundary(star).is_subset(nc));
        let (closure, isolated) = g.double_star_closure(c);
        prop_assert_eq!(closure, c.union(isolated));
    }

    #[test]
    fn corners_partition(g in connected_graph(), a in any::<u128>(), b in any::<u128>()) {
        let parts = g.corners(subset(&g, a), subset(&g, b)).parts();
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let union = parts.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(*p));
        prop_assert_eq!(union, g.vertices());
        prop_assert_eq!(total, g.vertex_count());
    }

    #[test]
    fn components_partition(g in connected_graph(), bits in any::<u128>()) {
        let s = subset(&g, bits);
        let comps = g.components(s);
        let union = comps.iter().fold(VertexSet::EMPTY, |acc, p| acc.union(*p));
        prop_assert_eq!(union, s);
        for (i, x) in comps.iter().enumerate() {
            prop_assert!(g.is_connected_set(*x));
            for y in &comps[i + 1..] {
                prop_assert!(g.boundary(*x).is_disjoint(*y));
            }
        }
    }

    #[test]
    fn pipeline_agrees_with_oracles(g in connected_graph()) {
        let budget = OracleBudget::default();
        let analysis = analyze(&g).unwrap();
        let expected = oracle_kappa(&g, &budget).unwrap();
        prop_assert_eq!(analysis.kappa(), expected.as_ref().map(|(k, _)| *k));
        let Some(level) = analysis.level.as_ref() else { return Ok(()) };
        prop_assert_eq!(&level.omega.members, &expected.unwrap().1.members);

        let sys = &level.system;
        prop_assert!(verify_axioms(sys).passed());
        for c in 0..sys.len() {
            for d in c..sys.len() {
                let fast = are_nested(sys, c, d);
                prop_assert_eq!(fast, are_nested(sys, d, c));
                prop_assert_eq!(fast, oracle_nested(sys, c, d, &budget).unwrap());
            }
        }

        let tight = enumerate_cuts_with(&g, level.kappa, &level.omega, Enumeration::TightSeparators);
        let vertices = |s: &kappatree::cuts::CutSystem| s.cuts.iter().map(|c| c.vertices).collect::<Vec<_>>();
        prop_assert_eq!(vertices(&tight), vertices(sys));

        let report = validate_tree(&analysis.tree);
        prop_assert!(report.passed(), "{:?}", report.violations);
    }
}
