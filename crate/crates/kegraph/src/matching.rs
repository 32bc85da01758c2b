//! Maximum matchings in general graphs (contracted-blossom search) and in
//! bipartite part pairs (augmenting paths), mu-criticality of vertices and
//! edges, and uniqueness of a perfect matching between two vertex sets.

use crate::graph::{EdgeSet, Graph, GraphError, VertexSet};

/// Set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn empty() -> Matching {
        Matching::default()
    }

    pub(crate) fn from_mate(mate: &[Option<usize>]) -> Matching {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, &m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        Matching { edges }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Matching {
        let m = Matching {
            edges: pairs.into_iter().collect(),
        };
        debug_assert_eq!(m.saturated().len(), 2 * m.len(), "edges must be disjoint");
        m
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// Union of the endpoints.
    pub fn saturated(&self) -> VertexSet {
        self.edges.iter().flat_map(|(u, v)| [u, v]).collect()
    }

    pub fn saturates(&self, v: usize) -> bool {
        self.partner(v).is_some()
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .find_map(|(a, b)| (a == v).then_some(b).or((b == v).then_some(a)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(u, v)
    }

    pub(crate) fn to_mate(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for (u, v) in self.edges.iter() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

/// Blossom-contracting augmenting search. The `skip_*` fields let the
/// mu-criticality queries run on G-v or G-e without rebuilding the graph.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    skip_vertex: Option<usize>,
    skip_edge: Option<(usize, usize)>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    queued: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![None; n],
            skip_vertex: None,
            skip_edge: None,
            parent: vec![None; n],
            base: (0..n).collect(),
            queued: vec![false; n],
        }
    }

    fn edge_allowed(&self, u: usize, v: usize) -> bool {
        if self.skip_vertex == Some(u) || self.skip_vertex == Some(v) {
            return false;
        }
        match self.skip_edge {
            Some((a, b)) => (a, b) != (u.min(v), u.max(v)),
            None => true,
        }
    }

    /// Lowest common ancestor of the bases of v and w in the alternating tree.
    fn lca(&self, mut v: usize, mut w: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            v = self.base[v];
            seen[v] = true;
            match self.mate[v] {
                None => break,
                Some(mv) => v = self.parent[mv].expect("tree vertex has parent"),
            }
        }
        while !seen[self.base[w]] {
            let mw = self.mate[w].expect("non-root tree vertex is matched");
            w = self.parent[mw].expect("tree vertex has parent");
        }
        self.base[w]
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let mv = self.mate[v].expect("blossom path vertex is matched");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[mv]] = true;
            self.parent[v] = Some(child);
            child = mv;
            v = self.parent[mv].expect("blossom path continues to base");
        }
    }

    /// One phase: grow an alternating tree from `root`, contracting blossoms,
    /// and flip the matching along an augmenting path if one is found.
    fn augment_from(&mut self, root: usize) -> bool {
        let n = self.g.n();
        debug_assert!(self.mate[root].is_none());
        if self.skip_vertex == Some(root) {
            return false;
        }
        self.parent.iter_mut().for_each(|p| *p = None);
        self.queued.iter_mut().for_each(|q| *q = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(root);
        self.queued[root] = true;

        while let Some(v) = queue.pop_front() {
            for i in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[i];
                if !self.edge_allowed(v, to) {
                    continue;
                }
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_even =
                    to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_even {
                    // Odd cycle: contract the blossom with base at the LCA.
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.queued[i] {
                                self.queued[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => {
                            self.flip_path(root, to);
                            return true;
                        }
                        Some(mto) => {
                            if !self.queued[mto] {
                                self.queued[mto] = true;
                                queue.push_back(mto);
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn flip_path(&mut self, root: usize, finish: usize) {
        let mut cur = Some(finish);
        while let Some(c) = cur {
            let prev = self.parent[c].expect("augmenting path reaches root");
            let next = self.mate[prev];
            self.mate[c] = Some(prev);
            self.mate[prev] = Some(c);
            cur = if prev == root { None } else { next };
        }
    }

    fn run_all(&mut self) {
        for v in 0..self.g.n() {
            if self.mate[v].is_none() && self.skip_vertex != Some(v) {
                self.augment_from(v);
            }
        }
    }
}

/// Maximum matching of a general graph. Roots are tried in ascending vertex
/// order and neighbor lists are sorted, so the result is canonical for a
/// given graph.
pub fn max_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    b.run_all();
    Matching::from_mate(&b.mate)
}

/// mu(G).
pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).len()
}

/// Vertices saturated by every maximum matching, i.e. mu(G - v) < mu(G).
///
/// Each query re-augments from the deleted vertex's partner instead of
/// matching from scratch.
pub fn mu_critical_vertices(g: &Graph) -> VertexSet {
    let mate = max_matching(g).to_mate(g.n());
    let mut out = VertexSet::new();
    for v in 0..g.n() {
        let Some(u) = mate[v] else {
            continue; // some maximum matching misses v
        };
        let mut b = Blossom::new(g);
        b.mate = mate.clone();
        b.mate[v] = None;
        b.mate[u] = None;
        b.skip_vertex = Some(v);
        if !b.augment_from(u) {
            out.insert(v);
        }
    }
    out
}

/// Edges contained in every maximum matching, i.e. mu(G - e) < mu(G).
pub fn mu_critical_edges(g: &Graph) -> EdgeSet {
    let matching = max_matching(g);
    let mate = matching.to_mate(g.n());
    let mut out = EdgeSet::new();
    for (x, y) in matching.edges().iter() {
        let mut found = false;
        for root in [x, y] {
            let mut b = Blossom::new(g);
            b.mate = mate.clone();
            b.mate[x] = None;
            b.mate[y] = None;
            b.skip_edge = Some((x, y));
            if b.augment_from(root) {
                found = true;
                break;
            }
        }
        if !found {
            out.insert(x, y);
        }
    }
    out
}

/// Kuhn augmenting-path maximum matching over explicit left-side adjacency
/// lists (`adj[i]` holds right-side indices). Returns the matched pair maps.
pub(crate) fn kuhn(adj: &[Vec<usize>], n_right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n_left = adj.len();
    let mut mate_left: Vec<Option<usize>> = vec![None; n_left];
    let mut mate_right: Vec<Option<usize>> = vec![None; n_right];

    fn try_augment(
        i: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        mate_left: &mut [Option<usize>],
        mate_right: &mut [Option<usize>],
    ) -> bool {
        for &j in &adj[i] {
            if visited[j] {
                continue;
            }
            visited[j] = true;
            let free = match mate_right[j] {
                None => true,
                Some(i2) => try_augment(i2, adj, visited, mate_left, mate_right),
            };
            if free {
                mate_left[i] = Some(j);
                mate_right[j] = Some(i);
                return true;
            }
        }
        false
    }

    for i in 0..n_left {
        if mate_left[i].is_none() && !adj[i].is_empty() {
            let mut visited = vec![false; n_right];
            try_augment(i, adj, &mut visited, &mut mate_left, &mut mate_right);
        }
    }
    (mate_left, mate_right)
}

/// Maximum matching using only edges between `left` and `right`.
pub fn max_matching_bipartite(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<Matching, GraphError> {
    if !left.is_disjoint(right) {
        return Err(GraphError::OverlappingSets);
    }
    let left_ids: Vec<usize> = left.iter().collect();
    let right_ids: Vec<usize> = right.iter().collect();
    if let Some(&v) = left_ids.iter().chain(&right_ids).find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    let mut right_index = vec![usize::MAX; g.n()];
    for (j, &v) in right_ids.iter().enumerate() {
        right_index[v] = j;
    }
    let adj: Vec<Vec<usize>> = left_ids
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter_map(|&w| (right_index[w] != usize::MAX).then_some(right_index[w]))
                .collect()
        })
        .collect();
    let (mate_left, _) = kuhn(&adj, right_ids.len());
    Ok(Matching::from_pairs(mate_left.iter().enumerate().filter_map(
        |(i, &j)| j.map(|j| (left_ids[i], right_ids[j])),
    )))
}

/// Whether there is a matching that saturates all of `from`, using only
/// (from, into) edges.
pub fn saturating_matching_exists(
    g: &Graph,
    from: &VertexSet,
    into: &VertexSet,
) -> Result<bool, GraphError> {
    Ok(max_matching_bipartite(g, from, into)?.len() == from.len())
}

/// Outcome of the perfect-matching uniqueness test between two vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerfectMatchingStatus {
    /// The parts have different sizes, so no perfect matching can exist.
    None,
    /// Equal sizes but the maximum (a, b)-matching misses some vertex.
    NonPerfect,
    /// Exactly one perfect matching between the parts.
    UniquePerfect(Matching),
    /// At least two; both witnesses are returned.
    MultiplePerfect(Matching, Matching),
}

/// Finds a perfect matching between `a` and `b` (edges inside the parts are
/// ignored) and decides whether it is unique. Uniqueness is settled by
/// searching for an alternating cycle rather than enumerating matchings: a
/// perfect matching is unique exactly when no alternating cycle exists.
/// Two empty parts yield `UniquePerfect` with the empty matching.
pub fn unique_perfect_matching_between(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<PerfectMatchingStatus, GraphError> {
    if !a.is_disjoint(b) {
        return Err(GraphError::OverlappingSets);
    }
    if a.len() != b.len() {
        return Ok(PerfectMatchingStatus::None);
    }
    if a.is_empty() {
        return Ok(PerfectMatchingStatus::UniquePerfect(Matching::empty()));
    }
    let matching = max_matching_bipartite(g, a, b)?;
    if matching.len() != a.len() {
        return Ok(PerfectMatchingStatus::NonPerfect);
    }

    let left_ids: Vec<usize> = a.iter().collect();
    let right_ids: Vec<usize> = b.iter().collect();
    let mate_of_left: Vec<usize> = left_ids
        .iter()
        .map(|&u| matching.partner(u).expect("perfect on a"))
        .collect();
    // Directed graph on left indices: i -> k when the matched partner of i is
    // also adjacent to left vertex k. A directed cycle is an alternating cycle.
    let arcs: Vec<Vec<usize>> = (0..left_ids.len())
        .map(|i| {
            let j = mate_of_left[i];
            (0..left_ids.len())
                .filter(|&k| k != i && g.has_edge(left_ids[k], j))
                .collect()
        })
        .collect();
    match find_directed_cycle(&arcs) {
        None => Ok(PerfectMatchingStatus::UniquePerfect(matching)),
        Some(cycle) => {
            // Flip along the cycle: left cycle[x+1] takes the partner of cycle[x].
            let mut new_mate = mate_of_left.clone();
            for x in 0..cycle.len() {
                let next = cycle[(x + 1) % cycle.len()];
                new_mate[next] = mate_of_left[cycle[x]];
            }
            let second = Matching::from_pairs(
                new_mate
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| (left_ids[i], j)),
            );
            debug_assert_eq!(second.len(), matching.len());
            debug_assert_ne!(second, matching);
            let _ = right_ids;
            Ok(PerfectMatchingStatus::MultiplePerfect(matching, second))
        }
    }
}

/// Iterative DFS cycle detection; returns one directed cycle if any.
fn find_directed_cycle(arcs: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = arcs.len();
    // 0 = white, 1 = on stack, 2 = done
    let mut color = vec![0u8; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        stack.push((start, 0));
        color[start] = 1;
        path.push(start);
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < arcs[v].len() {
                let to = arcs[v][*idx];
                *idx += 1;
                match color[to] {
                    0 => {
                        color[to] = 1;
                        stack.push((to, 0));
                        path.push(to);
                    }
                    1 => {
                        let pos = path.iter().position(|&p| p == to).unwrap();
                        return Some(path[pos..].to_vec());
                    }
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
                path.pop();
            }
        }
    }
    None
}

/// All maximum matchings, or None when more than `cap` exist (or n > 64).
/// Intended for small graphs where universally quantified matching claims
/// are checked by enumeration.
pub fn enumerate_maximum_matchings(g: &Graph, cap: usize) -> Option<Vec<Matching>> {
    let masks = g.adjacency_masks()?;
    let target = matching_number(g);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let full = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    fn rec(
        masks: &[u64],
        active: u64,
        need: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
        cap: usize,
    ) -> bool {
        if need == 0 {
            if out.len() == cap {
                return false;
            }
            out.push(Matching::from_pairs(chosen.iter().copied()));
            return true;
        }
        if (active.count_ones() as usize) < 2 * need {
            return true;
        }
        let v = active.trailing_zeros() as usize;
        let rest = active & !(1 << v);
        // v matched to each available neighbor
        let mut nbrs = masks[v] & rest;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            chosen.push((v, w));
            let ok = rec(masks, rest & !(1 << w), need - 1, chosen, out, cap);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        // v left unmatched
        rec(masks, rest, need, chosen, out, cap)
    }
    if rec(&masks, full, target, &mut chosen, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

/// A maximum matching found under a seeded random vertex relabeling, for
/// sampling "every maximum matching" claims on graphs too big to enumerate.
pub fn random_maximum_matching(g: &Graph, seed: u64) -> Matching {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    let mut inv = vec![0usize; g.n()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let relabeled = Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
    let m = max_matching(&relabeled);
    Matching::from_pairs(m.edges().iter().map(|(u, v)| (inv[u], inv[v])))
}
