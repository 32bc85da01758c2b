//! Cross-cutting invariants: serialization round trips over the exhaustive
//! census, structural laws under random inputs, and the inequality chains
//! that tie alpha, mu, core and the critical structure together.

mod common;

use common::masks_of;
use kegraph::analysis::{is_bipartite, is_ke, ke_class};
use kegraph::census::Census;
use kegraph::critical::{find_critical_independent_set, ker};
use kegraph::format::{encode_graph6, parse_graph6};
use kegraph::gallery;
use kegraph::generators::random_ke;
use kegraph::graph::{Graph, VertexSet};
use kegraph::independence::{alpha_critical_edges, core, independence_number, Budget};
use kegraph::matching::{enumerate_maximum_matchings, matching_number, mu_critical_edges};
use proptest::prelude::*;
use rayon::prelude::*;

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |flags| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if flags[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn subset_of(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(|flags| flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect())
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arbitrary_graph(13)) {
        prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn neighborhood_is_monotone(g in arbitrary_graph(12), picks in proptest::collection::vec(any::<(bool, bool)>(), 12)) {
        // a is a subset of b by construction
        let b: VertexSet = picks.iter().take(g.n()).enumerate()
            .filter(|(_, &(in_b, _))| in_b).map(|(i, _)| i).collect();
        let a: VertexSet = picks.iter().take(g.n()).enumerate()
            .filter(|(_, &(in_b, in_a))| in_b && in_a).map(|(i, _)| i).collect();
        prop_assert!(g.neighborhood(&a).unwrap().is_subset(&g.neighborhood(&b).unwrap()));
    }

    #[test]
    fn mutations_preserve_graph_invariants(g in arbitrary_graph(10), v in 0usize..10, keep in subset_of(10)) {
        let v = v % g.n();
        let deleted = g.delete_vertex(v).unwrap();
        let kept: VertexSet = keep.iter().filter(|&u| u < g.n()).collect();
        let induced = g.induced_subgraph(&kept).unwrap().graph;
        for h in [&deleted, &induced] {
            for u in 0..h.n() {
                prop_assert!(!h.has_edge(u, u));
                for &w in h.neighbors(u) {
                    prop_assert!(h.has_edge(w, u));
                }
            }
        }
    }

    #[test]
    fn random_ke_family_is_ke(seed in any::<u64>(), s in 1usize..=10, a_frac in 0.0f64..1.0, p in 0.0f64..1.0) {
        let a = 1 + ((s - 1) as f64 * a_frac) as usize;
        let g = random_ke(s, a, p, seed).unwrap();
        prop_assert!(g.n() <= 20);
        prop_assert!(is_ke(&g, &Budget::default()).unwrap());
    }

    // If erasing C from B leaves the neighborhood unchanged, erasing C from
    // any superset of B does too.
    #[test]
    fn neighborhood_erasure_lifts_to_supersets(which in 0usize..23, picks in proptest::collection::vec(0u8..4, 16)) {
        let entries = gallery::entries();
        let g = &entries[which % entries.len()].graph;
        // 0: outside A; 1: in A only; 2: in B (hence A); 3: in C (hence B, A)
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        let mut c = VertexSet::new();
        for (v, &tier) in picks.iter().take(g.n()).enumerate() {
            if tier >= 1 { a.insert(v); }
            if tier >= 2 { b.insert(v); }
            if tier >= 3 { c.insert(v); }
        }
        let nb = g.neighborhood(&b).unwrap();
        prop_assume!(nb == g.neighborhood(&b.difference(&c)).unwrap());
        prop_assert_eq!(
            g.neighborhood(&a).unwrap(),
            g.neighborhood(&a.difference(&c)).unwrap()
        );
    }
}

#[test]
fn graph6_round_trips_over_the_exhaustive_census() {
    let census = Census::up_to(8);
    for n in 1..=8 {
        census.keys(n).par_iter().for_each(|&key| {
            let g = kegraph::census::graph_from_key(n, key);
            let encoded = encode_graph6(&g);
            assert_eq!(parse_graph6(&encoded).unwrap(), g, "round trip failed on {encoded}");
        });
    }
}

#[test]
fn inequality_chains_hold_over_the_census() {
    let budget = Budget::default();
    let census = Census::up_to(7);
    for n in 1..=7usize {
        for g in census.graphs(n) {
            let alpha = independence_number(&g, &budget).unwrap();
            let mu = matching_number(&g);
            assert!(n / 2 + 1 <= alpha + mu, "{g:?}");
            assert!(alpha + mu <= n, "{g:?}");
            assert!(n <= alpha + 2 * mu, "{g:?}");
            // without isolated vertices, alpha - mu is at most xi
            if (0..n).all(|v| g.degree(v) > 0) {
                let xi = core(&g, &budget).unwrap().len();
                assert!(alpha as i64 - mu as i64 <= xi as i64, "{g:?}");
            }
            // on KE graphs, eta is at most alpha - xi
            if is_ke(&g, &budget).unwrap() {
                let xi = core(&g, &budget).unwrap().len();
                let eta = alpha_critical_edges(&g, &budget).unwrap().len();
                assert!(eta + xi <= alpha, "{g:?}");
            }
        }
    }
}

#[test]
fn mu_critical_edges_lie_in_every_maximum_matching() {
    let census = Census::up_to(8);
    for n in 2..=8usize {
        census.keys(n).par_iter().for_each(|&key| {
            let g = kegraph::census::graph_from_key(n, key);
            let crit = mu_critical_edges(&g);
            assert!(crit.len() <= matching_number(&g));
            let all = enumerate_maximum_matchings(&g, 1_000_000).expect("small graph");
            for m in &all {
                for (u, v) in crit.iter() {
                    assert!(m.contains(u, v), "critical edge {u}-{v} missing from a maximum matching of {g:?}");
                }
            }
        });
    }
}

#[test]
fn kernel_and_witness_structure_on_random_graphs() {
    use rand::{Rng, SeedableRng};
    let budget = Budget::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
    for _ in 0..60 {
        let n = rng.random_range(1..16usize);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(0.25) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let k = ker(&g);
        let c = core(&g, &budget).unwrap();
        assert!(k.is_subset(&c), "{g:?}");
        assert!(g.is_independent(&k).unwrap());
        let witness = find_critical_independent_set(&g);
        assert!(k.is_subset(&witness));
        // bipartite graphs have ker = core
        if is_bipartite(&g) {
            assert_eq!(k, c, "{g:?}");
        }
    }
}

#[test]
fn classification_against_oracles_at_desk_scale() {
    use rand::{Rng, SeedableRng};
    let budget = Budget::default();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
    for _ in 0..30 {
        let n = rng.random_range(10..17usize);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(0.2) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let masks = masks_of(&g);
        let class = ke_class(&g, &budget).unwrap();
        assert_eq!(class.alpha, common::alpha_dp(n, &masks));
        let mut table = Vec::new();
        assert_eq!(class.mu, common::mu_dp(n, &masks, &mut table));
        assert_eq!(
            kegraph::critical::critical_difference(&g) as i64,
            common::d_oracle(n, &masks)
        );
    }
}
