//! Exact independence computations: alpha, enumeration of the maximum
//! independent sets and of all independent sets, core, and alpha-critical
//! edges. Everything here is exact; when the work budget runs out the caller
//! gets an error, never an approximate answer.

use crate::graph::{EdgeSet, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("work budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("graph has {n} vertices; the exact engines handle at most {max}")]
    TooLarge { n: usize, max: usize },
}

/// Work limit for the exact solvers, counted in search-tree nodes (or yielded
/// sets, for enumerations). One budget value applies per solver invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub node_limit: u64,
}

impl Budget {
    pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

    pub fn new(node_limit: u64) -> Budget {
        Budget { node_limit }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODE_LIMIT)
    }
}

pub(crate) struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    pub(crate) fn new(budget: &Budget) -> Counter {
        Counter {
            used: 0,
            limit: budget.node_limit,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), EngineError> {
        self.used += 1;
        if self.used > self.limit {
            Err(EngineError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

pub(crate) fn masks_of(g: &Graph) -> Result<Vec<u64>, EngineError> {
    g.adjacency_masks()
        .ok_or(EngineError::TooLarge { n: g.n(), max: 64 })
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Greedy clique cover of `cand`: the number of cliques is an upper bound on
/// the independence number of the induced subgraph. The bound choice only
/// affects speed, never the result.
fn clique_cover_bound(masks: &[u64], cand: u64) -> u32 {
    let mut cliques: Vec<u64> = Vec::new();
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        match cliques
            .iter_mut()
            .find(|c| **c & !masks[v] == 0)
        {
            Some(c) => *c |= 1 << v,
            None => cliques.push(1 << v),
        }
    }
    cliques.len() as u32
}

fn alpha_rec(
    masks: &[u64],
    cand: u64,
    size: u32,
    best: &mut u32,
    counter: &mut Counter,
) -> Result<(), EngineError> {
    counter.tick()?;
    if cand == 0 {
        *best = (*best).max(size);
        return Ok(());
    }
    if size + clique_cover_bound(masks, cand) <= *best {
        return Ok(());
    }
    // Branch on a candidate of maximum degree within the candidate set.
    let mut v = 0;
    let mut vdeg = -1i32;
    let mut scan = cand;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let d = (masks[u] & cand).count_ones() as i32;
        if d > vdeg {
            vdeg = d;
            v = u;
        }
    }
    alpha_rec(masks, cand & !masks[v] & !(1 << v), size + 1, best, counter)?;
    alpha_rec(masks, cand & !(1 << v), size, best, counter)
}

pub(crate) fn alpha_from_masks(
    masks: &[u64],
    cand: u64,
    budget: &Budget,
) -> Result<usize, EngineError> {
    let mut best = 0u32;
    let mut counter = Counter::new(budget);
    alpha_rec(masks, cand, 0, &mut best, &mut counter)?;
    Ok(best as usize)
}

/// alpha(G), exact, by branch and bound with a clique-cover upper bound.
pub fn independence_number(g: &Graph, budget: &Budget) -> Result<usize, EngineError> {
    let masks = masks_of(g)?;
    alpha_from_masks(&masks, full_mask(g.n()), budget)
}

/// Iterator over every independent set of the graph, the empty set included,
/// each yielded exactly once. The budget bounds the number of yielded sets.
pub struct IndependentSets<'a> {
    masks: Vec<u64>,
    stack: Vec<(u64, u64)>,
    counter: Counter,
    _g: std::marker::PhantomData<&'a Graph>,
}

impl Iterator for IndependentSets<'_> {
    type Item = Result<VertexSet, EngineError>;

    fn next(&mut self) -> Option<Self::Item> {
        let (cur, cand) = self.stack.pop()?;
        if let Err(e) = self.counter.tick() {
            self.stack.clear();
            return Some(Err(e));
        }
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            // Extend by v; later candidates must have a higher index to keep
            // the enumeration duplicate-free.
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            self.stack
                .push((cur | 1 << v, cand & higher & !self.masks[v]));
        }
        Some(Ok(VertexSet::from_mask64(cur)))
    }
}

pub fn enumerate_independent_sets<'a>(
    g: &'a Graph,
    budget: &Budget,
) -> Result<IndependentSets<'a>, EngineError> {
    let masks = masks_of(g)?;
    Ok(IndependentSets {
        masks,
        stack: vec![(0, full_mask(g.n()))],
        counter: Counter::new(budget),
        _g: std::marker::PhantomData,
    })
}

/// Visits every independent set as a bitmask. Internal fast path for the
/// engines that fold over the enumeration.
pub(crate) fn for_each_independent_mask<F: FnMut(u64)>(
    masks: &[u64],
    universe: u64,
    budget: &Budget,
    mut f: F,
) -> Result<(), EngineError> {
    let mut counter = Counter::new(budget);
    let mut stack: Vec<(u64, u64)> = vec![(0, universe)];
    while let Some((cur, cand)) = stack.pop() {
        counter.tick()?;
        f(cur);
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            stack.push((cur | 1 << v, cand & higher & !masks[v]));
        }
    }
    Ok(())
}

/// All maximum independent sets, duplicate-free.
pub fn enumerate_maximum_independent_sets(
    g: &Graph,
    budget: &Budget,
) -> Result<Vec<VertexSet>, EngineError> {
    let masks = masks_of(g)?;
    let universe = full_mask(g.n());
    let alpha = alpha_from_masks(&masks, universe, budget)? as u32;
    let mut counter = Counter::new(budget);
    let mut out = Vec::new();
    // Depth-first extension with the simple cardinality bound; collecting
    // only sets of size alpha.
    let mut stack: Vec<(u64, u64)> = vec![(0, universe)];
    while let Some((cur, cand)) = stack.pop() {
        counter.tick()?;
        let size = cur.count_ones();
        if size == alpha {
            out.push(VertexSet::from_mask64(cur));
            continue;
        }
        if size + cand.count_ones() < alpha {
            continue;
        }
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            stack.push((cur | 1 << v, cand & higher & !masks[v]));
        }
    }
    out.sort();
    Ok(out)
}

pub(crate) fn core_mask(masks: &[u64], n: usize, budget: &Budget) -> Result<u64, EngineError> {
    let universe = full_mask(n);
    let alpha = alpha_from_masks(masks, universe, budget)?;
    let mut core = 0u64;
    let mut scratch: Vec<u64> = vec![0; n];
    for v in 0..n {
        // alpha(G - v): drop v from the universe and from every neighbor list.
        for (u, s) in scratch.iter_mut().enumerate() {
            *s = masks[u] & !(1 << v);
        }
        scratch[v] = 0;
        if alpha_from_masks(&scratch, universe & !(1 << v), budget)? < alpha {
            core |= 1 << v;
        }
    }
    Ok(core)
}

/// core(G): the vertices whose deletion lowers alpha. This equals the
/// intersection of all maximum independent sets.
pub fn core(g: &Graph, budget: &Budget) -> Result<VertexSet, EngineError> {
    let masks = masks_of(g)?;
    Ok(VertexSet::from_mask64(core_mask(&masks, g.n(), budget)?))
}

/// Edges whose deletion raises alpha; eta(G) is the size of this set.
pub fn alpha_critical_edges(g: &Graph, budget: &Budget) -> Result<EdgeSet, EngineError> {
    let masks = masks_of(g)?;
    let universe = full_mask(g.n());
    let alpha = alpha_from_masks(&masks, universe, budget)?;
    let mut out = EdgeSet::new();
    let mut scratch = masks.clone();
    for (u, v) in g.edges() {
        scratch[u] &= !(1 << v);
        scratch[v] &= !(1 << u);
        if alpha_from_masks(&scratch, universe, budget)? > alpha {
            out.insert(u, v);
        }
        scratch[u] |= 1 << v;
        scratch[v] |= 1 << u;
    }
    Ok(out)
}

/// Summary record: alpha, core, xi, eta, the alpha-critical vertices, and
/// optionally the number of maximum independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceSummary {
    pub alpha: usize,
    pub omega_count: Option<usize>,
    pub core: VertexSet,
    pub xi: usize,
    pub eta: usize,
    pub alpha_critical_vertices: VertexSet,
}

impl IndependenceSummary {
    pub fn compute(g: &Graph, budget: &Budget, count_omega: bool) -> Result<Self, EngineError> {
        let alpha = independence_number(g, budget)?;
        let core = core(g, budget)?;
        let eta = alpha_critical_edges(g, budget)?.len();
        let omega_count = if count_omega {
            Some(enumerate_maximum_independent_sets(g, budget)?.len())
        } else {
            None
        };
        Ok(IndependenceSummary {
            alpha,
            omega_count,
            xi: core.len(),
            alpha_critical_vertices: core.clone(),
            core,
            eta,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_minus_edge, cycle, path, star};

    // Independent oracle: alpha by DP over vertex subsets.
    fn alpha_dp(g: &Graph) -> usize {
        let masks = g.adjacency_masks().unwrap();
        let n = g.n();
        let mut table = vec![u8::MAX; 1 << n];
        fn rec(mask: u64, masks: &[u64], table: &mut [u8]) -> u8 {
            if mask == 0 {
                return 0;
            }
            let idx = mask as usize;
            if table[idx] != u8::MAX {
                return table[idx];
            }
            let v = mask.trailing_zeros() as usize;
            let without = rec(mask & !(1 << v), masks, table);
            let with = 1 + rec(mask & !(1 << v) & !masks[v], masks, table);
            let best = without.max(with);
            table[idx] = best;
            best
        }
        rec((1u64 << n) - 1, &masks, &mut table) as usize
    }

    #[test]
    fn alpha_small_cases() {
        let b = Budget::default();
        assert_eq!(independence_number(&cycle(5).unwrap(), &b).unwrap(), 2);
        assert_eq!(independence_number(&complete(7).unwrap(), &b).unwrap(), 1);
        assert_eq!(independence_number(&star(4).unwrap(), &b).unwrap(), 4);
        assert_eq!(independence_number(&Graph::empty(6), &b).unwrap(), 6);
        assert_eq!(independence_number(&Graph::empty(0), &b).unwrap(), 0);
    }

    #[test]
    fn alpha_matches_dp_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..15usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.3) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(independence_number(&g, &b).unwrap(), alpha_dp(&g), "{g:?}");
        }
    }

    #[test]
    fn budget_error_is_explicit() {
        let g = cycle(12).unwrap();
        match independence_number(&g, &Budget::new(3)) {
            Err(EngineError::BudgetExceeded { limit: 3 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn too_large_is_explicit() {
        let g = Graph::empty(65);
        assert!(matches!(
            independence_number(&g, &Budget::default()),
            Err(EngineError::TooLarge { n: 65, max: 64 })
        ));
    }

    #[test]
    fn maximum_set_enumeration() {
        let b = Budget::default();
        // C4: the two opposite pairs
        let sets = enumerate_maximum_independent_sets(&cycle(4).unwrap(), &b).unwrap();
        assert_eq!(sets.len(), 2);
        assert!(sets.contains(&[0usize, 2].into_iter().collect()));
        assert!(sets.contains(&[1usize, 3].into_iter().collect()));
        // K3: three singletons
        assert_eq!(
            enumerate_maximum_independent_sets(&complete(3).unwrap(), &b).unwrap().len(),
            3
        );
        // P3: exactly the endpoints
        let sets = enumerate_maximum_independent_sets(&path(3).unwrap(), &b).unwrap();
        assert_eq!(sets, vec![[0usize, 2].into_iter().collect()]);
    }

    #[test]
    fn independent_set_counts() {
        let b = Budget::default();
        let count = |g: &Graph| {
            enumerate_independent_sets(g, &b)
                .unwrap()
                .map(Result::unwrap)
                .count()
        };
        assert_eq!(count(&Graph::empty(1)), 2); // {} and {0}
        assert_eq!(count(&path(2).unwrap()), 3);
        assert_eq!(count(&cycle(5).unwrap()), 11); // 1 + 5 + 5

        // every yielded set is independent and none repeats
        let g = cycle(6).unwrap();
        let sets: Vec<VertexSet> = enumerate_independent_sets(&g, &b)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        let mut dedup = sets.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), sets.len());
        for s in &sets {
            assert!(g.is_independent(s).unwrap());
        }
    }

    #[test]
    fn core_cases() {
        let b = Budget::default();
        // C6: rotational symmetry forces an empty intersection
        assert!(core(&cycle(6).unwrap(), &b).unwrap().is_empty());
        // star: the leaves
        assert_eq!(core(&star(3).unwrap(), &b).unwrap(), (1..=3).collect());
        // isolated vertices always belong to the core
        let g = Graph::from_edges(3, vec![(0, 1)]).unwrap();
        assert!(core(&g, &b).unwrap().contains(2));
    }

    #[test]
    fn core_equals_intersection_of_maximum_sets() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..150 {
            let n = rng.random_range(1..13usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.3) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let omega = enumerate_maximum_independent_sets(&g, &b).unwrap();
            let inter = omega
                .iter()
                .fold(VertexSet::full(n), |acc, s| acc.intersection(s));
            assert_eq!(core(&g, &b).unwrap(), inter, "{g:?}");
        }
    }

    #[test]
    fn alpha_critical_edge_cases() {
        let b = Budget::default();
        // odd cycles: every edge; even cycles: none
        for k in [3usize, 5, 7] {
            assert_eq!(alpha_critical_edges(&cycle(k).unwrap(), &b).unwrap().len(), k);
        }
        for k in [4usize, 6, 8] {
            assert!(alpha_critical_edges(&cycle(k).unwrap(), &b).unwrap().is_empty());
        }
        // K4 - e has none
        assert!(alpha_critical_edges(&complete_minus_edge(4).unwrap(), &b).unwrap().is_empty());
    }

    #[test]
    fn deletion_drops_alpha_by_at_most_one() {
        use rand::{Rng, SeedableRng};
        let b = Budget::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..80 {
            let n = rng.random_range(1..12usize);
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.35) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let alpha = independence_number(&g, &b).unwrap();
            for v in 0..n {
                let av = independence_number(&g.delete_vertex(v).unwrap(), &b).unwrap();
                assert!(av == alpha || av + 1 == alpha);
            }
        }
    }
}
