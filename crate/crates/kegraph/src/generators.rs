//! Deterministic graph families and the seeded random König-Egerváry
//! generator.

use crate::critical::ker;
use crate::graph::{Graph, VertexSet};
use crate::independence::{core, independence_number, Budget, EngineError};
use crate::matching::{matching_number, mu_critical_edges};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("{family}({arg}) needs {what}")]
    BadParameter {
        family: &'static str,
        arg: String,
        what: &'static str,
    },
}

fn bad(family: &'static str, arg: impl ToString, what: &'static str) -> GeneratorError {
    GeneratorError::BadParameter {
        family,
        arg: arg.to_string(),
        what,
    }
}

/// Cycle C_k, k >= 3.
pub fn cycle(k: usize) -> Result<Graph, GeneratorError> {
    if k < 3 {
        return Err(bad("cycle", k, "k >= 3"));
    }
    Ok(Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap())
}

/// Path P_k on k vertices, k >= 1.
pub fn path(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(bad("path", k, "k >= 1"));
    }
    Ok(Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).unwrap())
}

/// Complete graph K_k, k >= 1.
pub fn complete(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(bad("complete", k, "k >= 1"));
    }
    Ok(Graph::from_edges(k, (0..k).flat_map(|j| (0..j).map(move |i| (i, j)))).unwrap())
}

/// K_k minus one edge (the edge 0-1), k >= 2.
pub fn complete_minus_edge(k: usize) -> Result<Graph, GeneratorError> {
    if k < 2 {
        return Err(bad("complete-minus-edge", k, "k >= 2"));
    }
    Ok(Graph::from_edges(
        k,
        (0..k)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&e| e != (0, 1)),
    )
    .unwrap())
}

/// Star K_{1,k}: center 0 with k leaves, k >= 1.
pub fn star(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(bad("star", k, "k >= 1"));
    }
    Ok(Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).unwrap())
}

/// Random König-Egerváry graph built as an independent part S = {0..s-1}
/// joined to an arbitrary part A = {s..s+a-1}: the matching i ~ s+i for
/// i < a guarantees the defining equality alpha + mu = n, and extra (S, A)
/// and A-internal edges are added independently with the given probability.
/// Deterministic for a fixed seed.
pub fn random_ke(
    s: usize,
    a: usize,
    extra_edge_prob: f64,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    if a < 1 || a > s {
        return Err(bad("ke", format!("s={s}, a={a}"), "1 <= a <= s"));
    }
    if !(0.0..=1.0).contains(&extra_edge_prob) {
        return Err(bad("ke", extra_edge_prob, "probability in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = s + a;
    let mut edges: Vec<(usize, usize)> = (0..a).map(|i| (i, s + i)).collect();
    for i in 0..s {
        for j in s..n {
            if (j - s != i) && rng.random_bool(extra_edge_prob) {
                edges.push((i, j));
            }
        }
    }
    for j in s..n {
        for i in s..j {
            if rng.random_bool(extra_edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).unwrap())
}

/// The clique-over-independent family G_p^q, p >= q >= 2: a clique on
/// a_1..a_p (vertices 0..p-1), an independent set b_1..b_p (vertices
/// p..2p-1), the matching b_i ~ a_i for every i, and b_i joined to every
/// clique vertex for i <= q.
///
/// Construction facts asserted before returning: core is the independent
/// side, ker is empty, and exactly p - q edges between core and N(core) are
/// mu-critical (the forced edges b_i ~ a_i for i > q).
pub fn gpq(p: usize, q: usize) -> Result<Graph, GeneratorError> {
    if q < 2 || p < q {
        return Err(bad("gpq", format!("p={p}, q={q}"), "p >= q >= 2"));
    }
    let a = |i: usize| i - 1; // a_i, 1-based
    let b = |i: usize| p + i - 1; // b_i, 1-based
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for j in 1..=p {
        for i in 1..j {
            edges.push((a(i), a(j)));
        }
    }
    for i in 1..=p {
        edges.push((b(i), a(i)));
    }
    for i in 1..=q {
        for j in 1..=p {
            if j != i {
                edges.push((b(i), a(j)));
            }
        }
    }
    let g = Graph::from_edges(2 * p, edges).unwrap();
    verify_pocket_critical_count(&g, p - q).map_err(|_| {
        bad("gpq", format!("p={p}, q={q}"), "internal property check in budget")
    })?;
    Ok(g)
}

/// Odd cycle C_{2k+1} (vertices 0..2k) with a pendant vertex 2k+1 attached
/// at vertex 0, k >= 1. core is the pendant, ker is empty, and the pendant
/// edge is the unique mu-critical edge between core and N(core).
pub fn hk(k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 {
        return Err(bad("hk", k, "k >= 1"));
    }
    let c = 2 * k + 1;
    let edges = (0..c).map(|i| (i, (i + 1) % c)).chain([(0, c)]);
    let g = Graph::from_edges(c + 1, edges).unwrap();
    verify_pocket_critical_count(&g, 1)
        .map_err(|_| bad("hk", k, "internal property check in budget"))?;
    Ok(g)
}

/// Number of mu-critical edges between core(G) and N(core(G)); asserted to
/// match the value the construction promises.
fn verify_pocket_critical_count(g: &Graph, expected: usize) -> Result<(), EngineError> {
    let budget = Budget::default();
    let core_set = core(g, &budget)?;
    assert!(
        ker(g).is_empty(),
        "construction promises an empty ker on {g:?}"
    );
    let crit = mu_critical_edges(g);
    let in_pocket = crit
        .iter()
        .filter(|&(u, v)| core_set.contains(u) || core_set.contains(v))
        .count();
    assert_eq!(
        in_pocket, expected,
        "construction promises {expected} mu-critical core edges on {g:?}"
    );
    Ok(())
}

/// alpha + mu = n, checked exactly.
pub fn is_ke(g: &Graph, budget: &Budget) -> Result<bool, EngineError> {
    Ok(independence_number(g, budget)? + matching_number(g) == g.n())
}

/// Convenience: the independent part of [`random_ke`]'s construction.
pub fn random_ke_parts(s: usize, a: usize) -> (VertexSet, VertexSet) {
    ((0..s).collect(), (s..s + a).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_expected_sizes() {
        let g = cycle(5).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        assert_eq!(cycle(2).unwrap_err(), bad("cycle", 2usize, "k >= 3"));
        let g = complete_minus_edge(4).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        let g = path(1).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let g = star(3).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        let g = complete(6).unwrap();
        assert_eq!((g.n(), g.m()), (6, 15));
    }

    #[test]
    fn random_ke_is_ke_by_construction() {
        let budget = Budget::default();
        // p = 0: a tree-like graph (one matching edge plus isolated vertices)
        let g = random_ke(3, 1, 0.0, 99).unwrap();
        assert_eq!((g.n(), g.m()), (4, 1));
        assert!(is_ke(&g, &budget).unwrap());
        // s = a, p = 0: a perfect matching
        let g = random_ke(4, 4, 0.0, 0).unwrap();
        assert_eq!((g.n(), g.m()), (8, 4));
        assert_eq!(independence_number(&g, &budget).unwrap(), 4);
        assert_eq!(matching_number(&g), 4);
        // the spec-level sanity point: seeded, nontrivial, still KE
        let g = random_ke(5, 3, 0.5, 7).unwrap();
        assert!(is_ke(&g, &budget).unwrap());
    }

    #[test]
    fn random_ke_is_deterministic() {
        let a = random_ke(6, 4, 0.37, 123).unwrap();
        let b = random_ke(6, 4, 0.37, 123).unwrap();
        assert_eq!(a, b);
        let c = random_ke(6, 4, 0.37, 124).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_ke_rejects_bad_parameters() {
        assert!(random_ke(3, 4, 0.0, 0).is_err());
        assert!(random_ke(3, 0, 0.0, 0).is_err());
        assert!(random_ke(3, 2, 1.5, 0).is_err());
    }

    #[test]
    fn gpq_structure() {
        let g = gpq(4, 2).unwrap();
        assert_eq!(g.n(), 8);
        // clique side, independent side
        for j in 1..4 {
            for i in 0..j {
                assert!(g.has_edge(i, j));
            }
        }
        for j in 5..8 {
            for i in 4..j {
                assert!(!g.has_edge(i, j));
            }
        }
        // b_1 complete to the clique, b_4 pendant on a_4
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.degree(7), 1);
        assert!(gpq(3, 1).is_err());
        assert!(gpq(2, 3).is_err());
    }

    #[test]
    fn hk_structure() {
        let g = hk(1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        let budget = Budget::default();
        assert!(is_ke(&g, &budget).unwrap());
        assert_eq!(core(&g, &budget).unwrap(), VertexSet::singleton(3));
        assert!(ker(&g).is_empty());
    }
}
