use proptest::prelude::*;

use mutvis::families::double_graph;
use mutvis::graph::{exists_avoiding_geodesic, lies_between, DistanceMatrix};
use mutvis::solver::{self, SolveOptions};
use mutvis::visibility::{
    false_twin_swap, find_false_twins, is_general_position_set,
    is_general_position_set_via_characterization, satisfies,
};
use mutvis::{Graph, PropertyKind, VertexSet};

/// Connected graph: a random tree (vertex i hangs off some j < i) plus extra
/// edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (
                Just(n),
                parents,
                proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, coins)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if coins[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n).prop_map(|(g, bits)| (g, VertexSet::from_bits(bits)))
    })
}

/// All shortest `u,v`-paths by depth-first search, as their interior sets.
fn geodesic_interiors(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> Vec<VertexSet> {
    fn walk(
        g: &Graph,
        d: &DistanceMatrix,
        at: usize,
        v: usize,
        inner: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if at == v {
            out.push(inner.without(v));
            return;
        }
        for w in g.neighbors(at) {
            if d.get(w, v) + 1 == d.get(at, v) {
                walk(g, d, w, v, inner.with(w), out);
            }
        }
    }
    let mut out = Vec::new();
    walk(g, d, u, v, VertexSet::EMPTY, &mut out);
    out
}

fn brute_force_max(g: &Graph, kind: PropertyKind) -> usize {
    let d = g.distances();
    (0..1u64 << g.order())
        .map(VertexSet::from_bits)
        .filter(|&s| satisfies(kind, g, &d, s).unwrap())
        .map(VertexSet::len)
        .max()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn properties_are_hereditary((g, s) in graph_and_set(8)) {
        let d = g.distances();
        for kind in PropertyKind::ALL {
            if satisfies(kind, &g, &d, s).unwrap() {
                for x in s {
                    prop_assert!(satisfies(kind, &g, &d, s.without(x)).unwrap(), "{kind} not hereditary");
                }
            }
        }
    }

    #[test]
    fn property_chain((g, s) in graph_and_set(8)) {
        let d = g.distances();
        let total = satisfies(PropertyKind::TotalMutualVisibility, &g, &d, s).unwrap();
        let outer = satisfies(PropertyKind::OuterMutualVisibility, &g, &d, s).unwrap();
        let mv = satisfies(PropertyKind::MutualVisibility, &g, &d, s).unwrap();
        let gp = satisfies(PropertyKind::GeneralPosition, &g, &d, s).unwrap();
        prop_assert!(!total || outer);
        prop_assert!(!outer || mv);
        prop_assert!(!gp || mv);
    }

    #[test]
    fn avoiding_geodesic_matches_path_enumeration((g, blocked) in graph_and_set(8), u in 0..8usize, v in 0..8usize) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let d = g.distances();
        let expected = geodesic_interiors(&g, &d, u, v).iter().any(|p| p.is_disjoint(blocked));
        prop_assert_eq!(exists_avoiding_geodesic(&g, &d, u, v, blocked).unwrap(), expected);
        for x in g.vertices() {
            let on_some = x == u || x == v || geodesic_interiors(&g, &d, u, v).iter().any(|p| p.contains(x));
            prop_assert_eq!(lies_between(&d, x, u, v).unwrap(), on_some);
        }
    }

    #[test]
    fn avoiding_is_monotone_in_blocked((g, blocked) in graph_and_set(8), extra in any::<u64>(), u in 0..8usize, v in 0..8usize) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let d = g.distances();
        let more = blocked.union(VertexSet::from_bits(extra).intersection(g.vertices()));
        if exists_avoiding_geodesic(&g, &d, u, v, more).unwrap() {
            prop_assert!(exists_avoiding_geodesic(&g, &d, u, v, blocked).unwrap());
        }
    }

    #[test]
    fn characterization_matches_triples((g, s) in graph_and_set(8)) {
        let d = g.distances();
        let (ok, witness) = is_general_position_set_via_characterization(&g, &d, s).unwrap();
        prop_assert_eq!(ok, is_general_position_set(&g, &d, s).unwrap());
        if let Some(w) = witness {
            let union = w.blocks.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
            prop_assert_eq!(union, s);
        }
    }

    #[test]
    fn double_graph_copies_are_false_twins((g, s) in graph_and_set(6)) {
        let n = g.order();
        let dg = double_graph(&g).unwrap();
        let d = dg.distances();
        let twins = find_false_twins(&dg);
        for i in 0..n {
            prop_assert!(twins.contains(&(i, n + i)));
            if s.contains(i) {
                let t = false_twin_swap(&dg, s, i, n + i).unwrap();
                for kind in [PropertyKind::MutualVisibility, PropertyKind::GeneralPosition] {
                    prop_assert_eq!(satisfies(kind, &dg, &d, s).unwrap(), satisfies(kind, &dg, &d, t).unwrap());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_matches_brute_force(g in connected_graph(10), workers in 1..=3usize) {
        let d = g.distances();
        for kind in PropertyKind::ALL {
            let r = solver::max_property_set(&g, kind, &SolveOptions::default().with_workers(workers)).unwrap();
            prop_assert!(r.is_optimal());
            prop_assert_eq!(r.value, brute_force_max(&g, kind), "{}", kind);
            prop_assert!(solver::verify_result(&g, &d, &r).unwrap());
        }
    }

    #[test]
    fn enumeration_is_complete(g in connected_graph(7)) {
        let d = g.distances();
        for kind in PropertyKind::ALL {
            let best = brute_force_max(&g, kind);
            let expected: Vec<VertexSet> = (0..1u64 << g.order())
                .map(VertexSet::from_bits)
                .filter(|&s| s.len() == best && satisfies(kind, &g, &d, s).unwrap())
                .collect();
            let mut got = solver::enumerate_maximum_sets(&g, kind).unwrap();
            got.sort_by_key(|s| s.bits());
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn labels_round_trip((g, s) in graph_and_set(8)) {
        let dg = double_graph(&g).unwrap();
        let s2 = s.union(s.iter().map(|v| v + g.order()).collect());
        prop_assert_eq!(dg.parse_set(&dg.format_set(s2)).unwrap(), s2);
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
