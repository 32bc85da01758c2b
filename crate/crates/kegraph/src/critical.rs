//! Critical difference d(G), critical independent sets, and ker(G).
//!
//! The polynomial route computes d(G) as the matching deficiency of the
//! bipartite double cover (two copies of V, with u-v' for every edge uv);
//! the neighborhood of a set inside the cover equals its neighborhood in G,
//! so the König-Ore deficiency formula gives exactly max |A| - |N(A)|.
//! The brute-force route maximizes over enumerated independent sets and
//! serves as the oracle.

use crate::graph::{Graph, VertexSet};
use crate::independence::{
    for_each_independent_mask, masks_of, Budget, EngineError,
};
use crate::matching::kuhn;

/// d(G) = max |A| - |N(A)|, computed in polynomial time via the double cover.
pub fn critical_difference(g: &Graph) -> usize {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
    let (mate_left, _) = kuhn(&adj, g.n());
    g.n() - mate_left.iter().flatten().count()
}

/// d(G - v) without materializing the smaller graph.
fn critical_difference_without(g: &Graph, v: usize) -> usize {
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|u| {
            if u == v {
                Vec::new()
            } else {
                g.neighbors(u).iter().copied().filter(|&w| w != v).collect()
            }
        })
        .collect();
    let (mate_left, _) = kuhn(&adj, g.n());
    (g.n() - 1) - mate_left.iter().flatten().count()
}

/// d of the subgraph induced on the vertices of `keep_mask`.
fn critical_difference_induced(g: &Graph, keep: &VertexSet) -> usize {
    let adj: Vec<Vec<usize>> = (0..g.n())
        .map(|u| {
            if keep.contains(u) {
                g.neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| keep.contains(w))
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let (mate_left, _) = kuhn(&adj, g.n());
    keep.len() - mate_left.iter().flatten().count()
}

/// Compares two vertex sets (as masks) lexicographically by their ascending
/// member lists.
fn lex_less(mut a: u64, mut b: u64) -> bool {
    while a != 0 && b != 0 {
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x < y;
        }
        a &= a - 1;
        b &= b - 1;
    }
    // A proper prefix sorts first.
    a == 0 && b != 0
}

/// Maximizes |A| - |N(A)| over all independent sets by enumeration.
/// Returns d and the lexicographically least witness attaining it.
pub fn critical_difference_bruteforce(
    g: &Graph,
    budget: &Budget,
) -> Result<(usize, VertexSet), EngineError> {
    let masks = masks_of(g)?;
    let universe = if g.n() >= 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best: i64 = i64::MIN;
    let mut witness = 0u64;
    for_each_independent_mask(&masks, universe, budget, |set| {
        let mut nbhd = 0u64;
        let mut scan = set;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            nbhd |= masks[v];
        }
        let d = set.count_ones() as i64 - nbhd.count_ones() as i64;
        if d > best || (d == best && lex_less(set, witness)) {
            best = d;
            witness = set;
        }
    })?;
    // The empty set is always enumerated, so best >= 0.
    Ok((best as usize, VertexSet::from_mask64(witness)))
}

/// ker(G): the unique minimal independent critical set, computed as the
/// vertices whose deletion lowers the critical difference by one.
pub fn ker(g: &Graph) -> VertexSet {
    let d = critical_difference(g);
    if d == 0 {
        // d(G - v) >= 0 for every v, so no vertex can qualify.
        return VertexSet::new();
    }
    (0..g.n())
        .filter(|&v| critical_difference_without(g, v) == d - 1)
        .collect()
}

/// epsilon(G) = |ker(G)|.
pub fn epsilon(g: &Graph) -> usize {
    ker(g).len()
}

/// Best difference over independent sets through v: 1 - deg(v) + d(G - N[v]).
fn best_difference_through(g: &Graph, v: usize) -> i64 {
    let closed = g
        .closed_neighborhood(&VertexSet::singleton(v))
        .expect("vertex in range");
    let keep = VertexSet::full(g.n()).difference(&closed);
    1 - g.degree(v) as i64 + critical_difference_induced(g, &keep) as i64
}

/// Whether v belongs to at least one critical independent set.
pub fn in_some_critical_independent_set(g: &Graph, v: usize) -> bool {
    best_difference_through(g, v) == critical_difference(g) as i64
}

/// Whether some critical independent set contains everything in `set`
/// (which must be independent).
fn extends_to_critical(g: &Graph, set: &VertexSet, d: usize) -> bool {
    let nbhd = g.neighborhood(set).expect("set in range");
    let keep = VertexSet::full(g.n())
        .difference(&nbhd)
        .difference(set);
    let rest = critical_difference_induced(g, &keep) as i64;
    set.len() as i64 - nbhd.len() as i64 + rest == d as i64
}

/// Grows a critical independent set greedily from ker(G): vertices are
/// scanned in ascending order and added whenever some critical independent
/// set still extends the current one. The result is independent and critical;
/// it is not claimed to be maximum.
pub fn find_critical_independent_set(g: &Graph) -> VertexSet {
    let d = critical_difference(g);
    let mut current = ker(g);
    let mut blocked = g
        .closed_neighborhood(&current)
        .expect("ker in range");
    for v in 0..g.n() {
        if blocked.contains(v) {
            continue;
        }
        let mut candidate = current.clone();
        candidate.insert(v);
        if extends_to_critical(g, &candidate, d) {
            blocked = blocked.union(
                &g.closed_neighborhood(&VertexSet::singleton(v))
                    .expect("vertex in range"),
            );
            current = candidate;
        }
    }
    debug_assert!(g.is_independent(&current).unwrap());
    debug_assert_eq!(
        current.len() as i64 - g.neighborhood(&current).unwrap().len() as i64,
        d as i64
    );
    current
}

/// Every critical independent set, by enumeration.
pub fn enumerate_critical_independent_sets(
    g: &Graph,
    budget: &Budget,
) -> Result<Vec<VertexSet>, EngineError> {
    let masks = masks_of(g)?;
    let universe = if g.n() >= 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let d = critical_difference(g) as i64;
    let mut out = Vec::new();
    for_each_independent_mask(&masks, universe, budget, |set| {
        let mut nbhd = 0u64;
        let mut scan = set;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            nbhd |= masks[v];
        }
        if set.count_ones() as i64 - nbhd.count_ones() as i64 == d {
            out.push(VertexSet::from_mask64(set));
        }
    })?;
    out.sort();
    Ok(out)
}

/// A maximum-size critical independent set found by enumeration
/// (lexicographically least among them). All maximum critical independent
/// sets share the same closed neighborhood; that is asserted here.
pub fn max_critical_independent_set_bruteforce(
    g: &Graph,
    budget: &Budget,
) -> Result<VertexSet, EngineError> {
    let all = enumerate_critical_independent_sets(g, budget)?;
    let top = all.iter().map(VertexSet::len).max().unwrap_or(0);
    let maxima: Vec<&VertexSet> = all.iter().filter(|s| s.len() == top).collect();
    let first = maxima.first().expect("the empty set is critical when d = 0");
    let closed = g.closed_neighborhood(first).expect("set in range");
    for other in &maxima[1..] {
        assert_eq!(
            g.closed_neighborhood(other).expect("set in range"),
            closed,
            "maximum critical independent sets must share N[A]"
        );
    }
    let mut best = (*first).clone();
    for other in &maxima[1..] {
        let (a, b) = (best.iter().collect::<Vec<_>>(), other.iter().collect::<Vec<_>>());
        if b < a {
            best = (*other).clone();
        }
    }
    Ok(best)
}

/// True when the empty set is the only critical independent set, i.e.
/// |N(A)| > |A| for every nonempty independent A.
pub fn has_only_empty_critical(g: &Graph) -> bool {
    critical_difference(g) == 0 && (0..g.n()).all(|v| !in_some_critical_independent_set(g, v))
}

/// Record of the critical structure of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalProfile {
    pub d: usize,
    pub ker: VertexSet,
    pub epsilon: usize,
    /// One critical independent set attaining d (the greedy witness).
    pub witness: VertexSet,
    /// Size of a maximum critical independent set; only filled at desk scale.
    pub max_crit_size: Option<usize>,
}

impl CriticalProfile {
    pub fn compute(g: &Graph, budget: &Budget, with_max: bool) -> Result<Self, EngineError> {
        let ker = ker(g);
        let max_crit_size = if with_max {
            Some(max_critical_independent_set_bruteforce(g, budget)?.len())
        } else {
            None
        };
        Ok(CriticalProfile {
            d: critical_difference(g),
            epsilon: ker.len(),
            ker,
            witness: find_critical_independent_set(g),
            max_crit_size,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, star};
    use crate::graph::Graph;

    #[test]
    fn critical_difference_cases() {
        // K1: A = {v}, N(A) empty
        assert_eq!(critical_difference(&Graph::empty(1)), 1);
        // leaves of a star versus the center
        assert_eq!(critical_difference(&star(3).unwrap()), 2);
        // odd cycles have d = 0 with empty witness
        let (d, w) = critical_difference_bruteforce(&cycle(7).unwrap(), &Budget::default()).unwrap();
        assert_eq!((d, w.len()), (0, 0));
        assert_eq!(critical_difference(&cycle(7).unwrap()), 0);
        // complete graphs of even order
        assert_eq!(critical_difference(&complete(6).unwrap()), 0);
    }

    #[test]
    fn polynomial_matches_bruteforce_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let n = rng.random_range(1..15usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.25) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let (d_brute, witness) = critical_difference_bruteforce(&g, &b).unwrap();
            assert_eq!(critical_difference(&g), d_brute, "{g:?}");
            // the witness attains d and is independent
            assert!(g.is_independent(&witness).unwrap());
            let nb = g.neighborhood(&witness).unwrap();
            assert_eq!(witness.len() as i64 - nb.len() as i64, d_brute as i64);
        }
    }

    #[test]
    fn ker_is_contained_in_every_critical_set() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..200 {
            let n = rng.random_range(1..12usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.3) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let k = ker(&g);
            assert!(g.is_independent(&k).unwrap());
            let crit = enumerate_critical_independent_sets(&g, &b).unwrap();
            let inter = crit
                .iter()
                .fold(VertexSet::full(n), |acc, s| acc.intersection(s));
            assert_eq!(k, inter, "{g:?}");
            // ker itself is critical
            let nb = g.neighborhood(&k).unwrap();
            assert_eq!(
                k.len() as i64 - nb.len() as i64,
                critical_difference(&g) as i64
            );
        }
    }

    #[test]
    fn eligibility_matches_enumeration() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let n = rng.random_range(1..12usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.3) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let crit = enumerate_critical_independent_sets(&g, &b).unwrap();
            for v in 0..n {
                let expected = crit.iter().any(|s| s.contains(v));
                assert_eq!(in_some_critical_independent_set(&g, v), expected, "{g:?} v={v}");
            }
        }
    }

    #[test]
    fn eligibility_cases() {
        assert!(in_some_critical_independent_set(&Graph::empty(1), 0));
        // star center: the leaves are the only witness direction
        let s = star(3).unwrap();
        assert!(!in_some_critical_independent_set(&s, 0));
        for leaf in 1..4 {
            assert!(in_some_critical_independent_set(&s, leaf));
        }
    }

    #[test]
    fn greedy_witness_cases() {
        // star: the full leaf set
        assert_eq!(find_critical_independent_set(&star(3).unwrap()), (1..=3).collect());
        // C4: an opposite pair (d = 0), critical but not required maximum
        let w = find_critical_independent_set(&cycle(4).unwrap());
        let g = cycle(4).unwrap();
        assert!(g.is_independent(&w).unwrap());
        assert_eq!(w.len(), g.neighborhood(&w).unwrap().len());
    }

    #[test]
    fn max_critical_bruteforce_cases() {
        let b = Budget::default();
        assert_eq!(
            max_critical_independent_set_bruteforce(&star(3).unwrap(), &b).unwrap(),
            (1..=3).collect()
        );
        // C6: property check runs inside (shared closed neighborhood)
        let s = max_critical_independent_set_bruteforce(&cycle(6).unwrap(), &b).unwrap();
        let g = cycle(6).unwrap();
        assert_eq!(
            s.len(),
            g.neighborhood(&s).unwrap().len(),
            "witness must attain d = 0"
        );
    }

    #[test]
    fn only_empty_critical_cases() {
        assert!(has_only_empty_critical(&complete(6).unwrap()));
        assert!(!has_only_empty_critical(&cycle(4).unwrap()));
        assert!(!has_only_empty_critical(&Graph::empty(1)));
    }

    #[test]
    fn kernel_deletion_recursion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(43);
        for _ in 0..100 {
            let n = rng.random_range(2..12usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.3) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let k = ker(&g);
            for v in k.iter() {
                let reduced = g.delete_vertex(v).unwrap();
                let shifted: VertexSet = k
                    .iter()
                    .filter(|&u| u != v)
                    .map(|u| if u > v { u - 1 } else { u })
                    .collect();
                assert!(ker(&reduced).is_subset(&shifted), "{g:?} v={v}");
            }
        }
    }
}
