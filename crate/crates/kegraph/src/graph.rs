//! Simple undirected graphs with dense integer vertex ids, plus the vertex-
//! and edge-set types the analysis engines work over.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("edge {u}-{v} does not exist")]
    MissingEdge { u: usize, v: usize },
    #[error("vertex sets must be disjoint")]
    OverlappingSets,
    #[error("labels must cover all {n} vertices, got {got}")]
    BadLabels { n: usize, got: usize },
}

/// Subset of the vertices 0..n-1 of some graph, with bitset semantics.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// The full set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        w < self.words.len() && self.words[w] >> b & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| a & b)
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (i, w) in words.iter_mut().enumerate() {
            *w &= !other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub(crate) fn from_mask64(mask: u64) -> VertexSet {
        let mut s = VertexSet {
            words: vec![mask],
        };
        s.trim();
        s
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Set of unordered vertex pairs, stored normalized with u < v.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct EdgeSet {
    edges: BTreeSet<(usize, usize)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        assert_ne!(u, v, "edge endpoints must differ");
        self.edges.insert((u.min(v), u.max(v)))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Pairs in (min, max) form, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        let mut s = EdgeSet::new();
        for (u, v) in iter {
            s.insert(u, v);
        }
        s
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as sorted neighbor lists; construction enforces symmetry,
/// irreflexivity and absence of multi-edges. All mutating operations return a
/// fresh graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on n vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            n,
            m,
            adj,
            labels: None,
        })
    }

    /// Builds a graph on n <= 64 vertices from per-vertex neighbor bitmasks.
    pub fn from_adjacency_masks(n: usize, masks: &[u64]) -> Graph {
        debug_assert!(n <= 64 && masks.len() == n);
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| masks[u] >> v & 1 == 1).collect())
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            n,
            m,
            adj,
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_set(&self, a: &VertexSet) -> Result<(), GraphError> {
        match a.iter().find(|&v| v >= self.n) {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Attaches display labels (one per vertex) for fixture graphs.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::BadLabels {
                n: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|s| s == name))
    }

    /// N(A): vertices having at least one neighbor in A. Not necessarily
    /// disjoint from A.
    pub fn neighborhood(&self, a: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(a)?;
        let mut out = VertexSet::new();
        for v in a.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        Ok(out)
    }

    /// N[A] = A ∪ N(A).
    pub fn closed_neighborhood(&self, a: &VertexSet) -> Result<VertexSet, GraphError> {
        Ok(self.neighborhood(a)?.union(a))
    }

    /// Whether no two members of the set are adjacent.
    pub fn is_independent(&self, a: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(a)?;
        Ok(a.iter().all(|v| self.adj[v].iter().all(|w| !a.contains(*w))))
    }

    /// Removes vertex v; vertices above v shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let remap = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges()
            .filter(|&(a, b)| a != v && b != v)
            .map(|(a, b)| (remap(a), remap(b)));
        Graph::from_edges(self.n - 1, edges)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(GraphError::MissingEdge { u, v });
        }
        let edges = self
            .edges()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)));
        Graph::from_edges(self.n, edges)
    }

    /// Subgraph induced on the given vertices, with a mapping from new ids
    /// back to parent ids (`parent_ids[new] = old`).
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(a)?;
        let parent_ids: Vec<usize> = a.iter().collect();
        let mut index_of = vec![usize::MAX; self.n];
        for (i, &v) in parent_ids.iter().enumerate() {
            index_of[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| a.contains(u) && a.contains(v))
            .map(|(u, v)| (index_of[u], index_of[v]));
        let graph = Graph::from_edges(parent_ids.len(), edges)?;
        Ok(InducedSubgraph { graph, parent_ids })
    }

    /// Per-vertex neighbor bitmasks; None when the graph has more than 64
    /// vertices (the exact engines only handle n <= 64).
    pub(crate) fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={};", self.n, self.m)?;
        for (u, v) in self.edges() {
            match (self.label(u), self.label(v)) {
                (Some(a), Some(b)) => write!(f, " {a}-{b}")?,
                _ => write!(f, " {u}-{v}")?,
            }
        }
        write!(f, ")")
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `parent_ids[new_id] = old_id`; total and injective.
    pub parent_ids: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a vertex set of the subgraph back into parent ids.
    pub fn to_parent(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.parent_ids[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn build_rejects_loops_and_range() {
        assert!(matches!(
            Graph::from_edges(3, vec![(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, vec![(0, 5)]),
            Err(GraphError::VertexOutOfRange { v: 5, n: 3 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, vec![(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let g = cycle(7).unwrap();
        for u in 0..g.n() {
            assert!(!g.has_edge(u, u));
            for &v in g.neighbors(u) {
                assert!(g.has_edge(v, u));
            }
        }
        assert_eq!(g.m(), g.adj.iter().map(Vec::len).sum::<usize>() / 2);
    }

    #[test]
    fn neighborhood_on_cycle() {
        let g = cycle(5).unwrap();
        let n = g.neighborhood(&VertexSet::singleton(0)).unwrap();
        assert_eq!(n, [1usize, 4].into_iter().collect());
        assert!(g.neighborhood(&VertexSet::new()).unwrap().is_empty());
        let closed = g.closed_neighborhood(&VertexSet::singleton(0)).unwrap();
        assert_eq!(closed, [0usize, 1, 4].into_iter().collect());
    }

    #[test]
    fn neighborhood_rejects_out_of_range() {
        let g = cycle(4).unwrap();
        assert!(g.neighborhood(&VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn deletions() {
        // C5 - v = P4
        let g = cycle(5).unwrap().delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        // K4 - e keeps 5 edges
        let g = complete(4).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
        assert!(complete(4).unwrap().delete_edge(0, 1).unwrap().delete_edge(0, 1).is_err());
        // induced_subgraph(C5, {0,1,2}) = P3
        let sub = cycle(5)
            .unwrap()
            .induced_subgraph(&[0usize, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!((sub.graph.n(), sub.graph.m()), (3, 2));
        assert_eq!(sub.parent_ids, vec![0, 1, 2]);
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [1usize, 3, 70].into_iter().collect();
        let b: VertexSet = [3usize, 70].into_iter().collect();
        assert!(b.is_subset(&a));
        assert_eq!(a.difference(&b), VertexSet::singleton(1));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b).len(), 3);
        let mut c = a.clone();
        c.remove(70);
        // trailing-zero words must not break equality
        assert_eq!(c, [1usize, 3].into_iter().collect());
    }
}
