//! König-Egerváry classification, the vertex/edge heredity numbers, deletion
//! verdicts per vertex and edge, and the decomposition along a critical
//! independent set. Also builds the per-graph [`KeReport`].

use crate::critical::{critical_difference, ker};
use crate::format::encode_graph6;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::independence::{
    alpha_critical_edges, core, independence_number, Budget, EngineError,
};
use crate::matching::{
    matching_number, max_matching, mu_critical_edges, mu_critical_vertices,
    unique_perfect_matching_between, PerfectMatchingStatus,
};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("operation requires a König-Egerváry graph")]
    NotKonigEgervary,
    #[error("set is not independent")]
    NotIndependent,
    #[error("set is not critical (difference must attain d(G))")]
    NotCritical,
}

/// Where alpha + mu lands relative to n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KeKind {
    /// Bipartite, hence König-Egerváry.
    Bipartite,
    /// alpha + mu = n but not bipartite.
    KeNonBipartite,
    /// alpha + mu = n - 1.
    OneKe,
    /// alpha + mu < n - 1.
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KeClassification {
    pub kind: KeKind,
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
}

impl KeClassification {
    pub fn is_ke(&self) -> bool {
        matches!(self.kind, KeKind::Bipartite | KeKind::KeNonBipartite)
    }

    pub fn is_one_ke(&self) -> bool {
        self.kind == KeKind::OneKe
    }
}

/// Exact classification via alpha and mu.
pub fn ke_class(g: &Graph, budget: &Budget) -> Result<KeClassification, EngineError> {
    let alpha = independence_number(g, budget)?;
    let mu = matching_number(g);
    let kind = if alpha + mu == g.n() {
        if is_bipartite(g) {
            KeKind::Bipartite
        } else {
            KeKind::KeNonBipartite
        }
    } else if alpha + mu + 1 == g.n() {
        KeKind::OneKe
    } else {
        KeKind::Other
    };
    Ok(KeClassification {
        kind,
        n: g.n(),
        alpha,
        mu,
    })
}

pub fn is_ke(g: &Graph, budget: &Budget) -> Result<bool, EngineError> {
    Ok(ke_class(g, budget)?.is_ke())
}

/// Two-colorability by breadth-first search.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![u8::MAX; g.n()];
    for start in 0..g.n() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the graph has exactly one odd cycle (cycles counted as subgraphs).
///
/// A graph has at least one odd cycle iff it is not bipartite, and if it has
/// exactly one, every odd cycle passes through each edge of that cycle. So
/// the test looks for an edge xy whose deletion makes the graph bipartite;
/// the number of odd cycles then equals the number of x-y paths in G - xy,
/// which is one exactly when every edge of one such path is a bridge.
pub fn is_almost_bipartite(g: &Graph) -> bool {
    if is_bipartite(g) {
        return false;
    }
    for (x, y) in g.edges() {
        let reduced = g.delete_edge(x, y).expect("edge exists");
        if !is_bipartite(&reduced) {
            continue;
        }
        // All odd cycles of g pass through xy; count the x-y paths.
        return sole_path(&reduced, x, y);
    }
    false
}

/// Whether x and y are joined by exactly one path.
fn sole_path(g: &Graph, x: usize, y: usize) -> bool {
    // Find one path by BFS.
    let mut prev = vec![usize::MAX; g.n()];
    prev[x] = x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    if prev[y] == usize::MAX {
        return false; // no path at all
    }
    // The path is unique iff each of its edges is a bridge: any second path
    // would close a cycle through some path edge.
    let mut v = y;
    while v != x {
        let u = prev[v];
        let cut = g.delete_edge(u, v).expect("path edge exists");
        if connected_between(&cut, x, y) {
            return false;
        }
        v = u;
    }
    true
}

fn connected_between(g: &Graph, x: usize, y: usize) -> bool {
    let mut seen = vec![false; g.n()];
    seen[x] = true;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        if v == y {
            return true;
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Per-vertex deletion flags: whether alpha and mu drop when v goes. Deleting
/// a vertex changes alpha by 0 or -1 and mu by 0 or -1, so these two bits
/// determine the class sum of G - v.
struct DeletionFlags {
    alpha: usize,
    mu: usize,
    alpha_drops: Vec<bool>, // per vertex: v is alpha-critical (v in core)
    mu_drops: Vec<bool>,    // per vertex: v is mu-critical
}

fn vertex_deletion_flags(g: &Graph, budget: &Budget) -> Result<DeletionFlags, EngineError> {
    let core_set = core(g, budget)?;
    let mu_crit = mu_critical_vertices(g);
    Ok(DeletionFlags {
        alpha: independence_number(g, budget)?,
        mu: matching_number(g),
        alpha_drops: (0..g.n()).map(|v| core_set.contains(v)).collect(),
        mu_drops: (0..g.n()).map(|v| mu_crit.contains(v)).collect(),
    })
}

/// Number of vertices whose deletion leaves a König-Egerváry graph.
pub fn rho_v(g: &Graph, budget: &Budget) -> Result<usize, EngineError> {
    let f = vertex_deletion_flags(g, budget)?;
    Ok((0..g.n())
        .filter(|&v| {
            f.alpha - usize::from(f.alpha_drops[v]) + f.mu - usize::from(f.mu_drops[v]) == g.n() - 1
        })
        .count())
}

/// n - xi + epsilon; only defined on König-Egerváry graphs, where it equals
/// [`rho_v`].
pub fn rho_v_formula(g: &Graph, budget: &Budget) -> Result<usize, AnalysisError> {
    if !is_ke(g, budget)? {
        return Err(AnalysisError::NotKonigEgervary);
    }
    let xi = core(g, budget)?.len();
    let eps = ker(g).len();
    Ok(g.n() - xi + eps)
}

/// Number of edges whose deletion leaves a König-Egerváry graph. Deleting an
/// edge changes alpha by 0 or +1 and mu by 0 or -1, so the alpha-critical and
/// mu-critical edge sets determine every deletion class.
pub fn rho_e(g: &Graph, budget: &Budget) -> Result<usize, EngineError> {
    let alpha = independence_number(g, budget)?;
    let mu = matching_number(g);
    let a_crit = alpha_critical_edges(g, budget)?;
    let m_crit = mu_critical_edges(g);
    Ok(g.edges()
        .filter(|&(u, v)| {
            alpha + usize::from(a_crit.contains(u, v)) + mu - usize::from(m_crit.contains(u, v))
                == g.n()
        })
        .count())
}

/// m - xi + epsilon; a lower bound for [`rho_e`] on König-Egerváry graphs.
pub fn rho_e_bound(g: &Graph, budget: &Budget) -> Result<usize, AnalysisError> {
    if !is_ke(g, budget)? {
        return Err(AnalysisError::NotKonigEgervary);
    }
    let xi = core(g, budget)?.len();
    let eps = ker(g).len();
    let bound = g.m() as i64 - xi as i64 + eps as i64;
    assert!(bound >= 0, "m - xi + epsilon is nonnegative on KE graphs");
    Ok(bound as usize)
}

/// The two pockets that drive the edge-heredity analysis:
/// (core - ker, N(core) - N(ker)) and its complement structure.
#[derive(Clone, Debug)]
pub struct CorePockets {
    pub core: VertexSet,
    pub ker: VertexSet,
    pub n_core: VertexSet,
    pub n_ker: VertexSet,
    pub core_minus_ker: VertexSet,
    pub n_core_minus_n_ker: VertexSet,
}

pub fn core_pockets(g: &Graph, budget: &Budget) -> Result<CorePockets, EngineError> {
    let core_set = core(g, budget)?;
    let ker_set = ker(g);
    let n_core = g.neighborhood(&core_set).expect("core in range");
    let n_ker = g.neighborhood(&ker_set).expect("ker in range");
    Ok(CorePockets {
        core_minus_ker: core_set.difference(&ker_set),
        n_core_minus_n_ker: n_core.difference(&n_ker),
        core: core_set,
        ker: ker_set,
        n_core,
        n_ker,
    })
}

/// Uniqueness status of the perfect matching between core - ker and
/// N(core) - N(ker); on a König-Egerváry graph this decides whether
/// rho_e attains its lower bound.
pub fn pocket_matching_status(
    g: &Graph,
    budget: &Budget,
) -> Result<PerfectMatchingStatus, EngineError> {
    let p = core_pockets(g, budget)?;
    Ok(
        unique_perfect_matching_between(g, &p.core_minus_ker, &p.n_core_minus_n_ker)
            .expect("pocket sets are disjoint"),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexZone {
    OutsideCore,
    CoreMinusKer,
    Ker,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexVerdict {
    pub vertex: usize,
    pub zone: VertexZone,
    pub deletion: KeClassification,
}

impl VertexVerdict {
    /// The deletion class predicted by the zone, valid on KE inputs:
    /// outside-core and ker deletions stay KE, core-minus-ker deletions land
    /// exactly one short.
    pub fn satisfies_trichotomy(&self) -> bool {
        match self.zone {
            VertexZone::OutsideCore | VertexZone::Ker => self.deletion.is_ke(),
            VertexZone::CoreMinusKer => self.deletion.is_one_ke(),
        }
    }
}

/// Zone and deletion class for every vertex. Zones are well-defined on any
/// graph; the trichotomy guarantee only applies when the input is KE.
pub fn classify_vertices(g: &Graph, budget: &Budget) -> Result<Vec<VertexVerdict>, EngineError> {
    let core_set = core(g, budget)?;
    let ker_set = ker(g);
    (0..g.n())
        .map(|v| {
            let zone = if ker_set.contains(v) {
                VertexZone::Ker
            } else if core_set.contains(v) {
                VertexZone::CoreMinusKer
            } else {
                VertexZone::OutsideCore
            };
            Ok(VertexVerdict {
                vertex: v,
                zone,
                deletion: ke_class(&g.delete_vertex(v).expect("vertex in range"), budget)?,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeLocation {
    /// Not incident to core.
    OutsideCorePocket,
    /// Between ker and N(ker).
    KerPocket,
    /// Between core - ker and N(ker).
    CoreMinusKerToKerNeighborhood,
    /// Between core - ker and N(core) - N(ker).
    CrossPocket,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeVerdict {
    pub edge: (usize, usize),
    pub location: EdgeLocation,
    pub mu_critical: bool,
    pub alpha_critical: bool,
    pub deletion_is_ke: bool,
}

/// Pocket location plus criticality and deletion flags for every edge.
/// Location invariants (no critical edges in the ker pockets, the cross
/// pocket as the only mu-critical location, and the xi - epsilon cap) are
/// theorems about KE inputs; on other graphs only the raw flags apply.
pub fn classify_edges(g: &Graph, budget: &Budget) -> Result<Vec<EdgeVerdict>, EngineError> {
    let p = core_pockets(g, budget)?;
    let alpha = independence_number(g, budget)?;
    let mu = matching_number(g);
    let a_crit = alpha_critical_edges(g, budget)?;
    let m_crit = mu_critical_edges(g);
    Ok(g.edges()
        .map(|(u, v)| {
            // core is independent, so at most one endpoint is in it
            let location = match (p.core.contains(u), p.core.contains(v)) {
                (false, false) => EdgeLocation::OutsideCorePocket,
                (inu, _) => {
                    let (c, o) = if inu { (u, v) } else { (v, u) };
                    if p.ker.contains(c) {
                        EdgeLocation::KerPocket
                    } else if p.n_ker.contains(o) {
                        EdgeLocation::CoreMinusKerToKerNeighborhood
                    } else {
                        EdgeLocation::CrossPocket
                    }
                }
            };
            let deletion_is_ke = alpha
                + usize::from(a_crit.contains(u, v))
                + mu
                - usize::from(m_crit.contains(u, v))
                == g.n();
            EdgeVerdict {
                edge: (u, v),
                location,
                mu_critical: m_crit.contains(u, v),
                alpha_critical: a_crit.contains(u, v),
                deletion_is_ke,
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionChecks {
    pub inside_is_ke: bool,
    pub outside_alpha_le_mu: bool,
    pub alpha_additive: bool,
    pub mu_additive: bool,
    pub inside_alpha_is_set_size: bool,
    pub inside_mu_is_neighborhood_size: bool,
}

impl DecompositionChecks {
    pub fn all_pass(&self) -> bool {
        self.inside_is_ke
            && self.outside_alpha_le_mu
            && self.alpha_additive
            && self.mu_additive
            && self.inside_alpha_is_set_size
            && self.inside_mu_is_neighborhood_size
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// G[N[A]] and its map back to parent ids.
    pub inside: Graph,
    pub inside_parent_ids: Vec<usize>,
    /// G - N[A] and its map back to parent ids.
    pub outside: Graph,
    pub outside_parent_ids: Vec<usize>,
    pub checks: DecompositionChecks,
}

/// Splits the graph along a critical independent set A into G[N[A]] and
/// G - N[A], evaluating the structural facts the split guarantees: the inside
/// is KE with alpha = |A| and mu = |N(A)|, the outside has alpha <= mu, and
/// alpha and mu both add up across the parts.
pub fn critical_decomposition(
    g: &Graph,
    a: &VertexSet,
    budget: &Budget,
) -> Result<Decomposition, AnalysisError> {
    if !g.is_independent(a)? {
        return Err(AnalysisError::NotIndependent);
    }
    let nbhd = g.neighborhood(a)?;
    if a.len() as i64 - nbhd.len() as i64 != critical_difference(g) as i64 {
        return Err(AnalysisError::NotCritical);
    }
    let x = a.union(&nbhd);
    let inside = g.induced_subgraph(&x)?;
    let outside = g.induced_subgraph(&VertexSet::full(g.n()).difference(&x))?;
    let alpha = independence_number(g, budget)?;
    let mu = matching_number(g);
    let alpha_in = independence_number(&inside.graph, budget)?;
    let alpha_out = independence_number(&outside.graph, budget)?;
    let mu_in = matching_number(&inside.graph);
    let mu_out = matching_number(&outside.graph);
    let checks = DecompositionChecks {
        inside_is_ke: alpha_in + mu_in == inside.graph.n(),
        outside_alpha_le_mu: alpha_out <= mu_out,
        alpha_additive: alpha == alpha_in + alpha_out,
        mu_additive: mu == mu_in + mu_out,
        inside_alpha_is_set_size: alpha_in == a.len(),
        inside_mu_is_neighborhood_size: mu_in == nbhd.len(),
    };
    Ok(Decomposition {
        inside: inside.graph,
        inside_parent_ids: inside.parent_ids,
        outside: outside.graph,
        outside_parent_ids: outside.parent_ids,
        checks,
    })
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Per-graph record of every invariant this crate computes.
///
/// JSON field guide: `schema_version` (format version, currently 1),
/// `graph6` (canonical serialization of the input), `n`/`m` (order and
/// size), `alpha`/`mu` (independence and matching numbers), `d` (critical
/// difference), `core`/`xi` (intersection of maximum independent sets and
/// its size), `ker`/`epsilon` (intersection of critical independent sets
/// and its size), `eta` (number of alpha-critical edges), `rho_v`/`rho_e`
/// (vertices/edges whose deletion leaves a KE graph), `ke_class`
/// (Bipartite | KeNonBipartite | OneKe | Other), `max_matching` (one
/// canonical maximum matching as an edge list), `vertex_verdicts` and
/// `edge_verdicts` (per-element zone/pocket and deletion outcomes), and
/// `checks` (the KE heredity identities; null for non-KE graphs).
#[derive(Clone, Debug, Serialize)]
pub struct KeReport {
    pub schema_version: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub d: usize,
    pub core: Vec<usize>,
    pub xi: usize,
    pub ker: Vec<usize>,
    pub epsilon: usize,
    pub eta: usize,
    pub rho_v: usize,
    pub rho_e: usize,
    pub ke_class: KeKind,
    pub max_matching: Vec<(usize, usize)>,
    pub vertex_verdicts: Vec<VertexVerdict>,
    pub edge_verdicts: Vec<EdgeVerdict>,
    /// Identity checks that hold on KE graphs; None otherwise.
    pub checks: Option<FormulaChecks>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct FormulaChecks {
    /// rho_v = n - xi + epsilon.
    pub rho_v_equality: bool,
    /// rho_e >= m - xi + epsilon.
    pub rho_e_lower_bound: bool,
}

pub fn ke_report(g: &Graph, budget: &Budget) -> Result<KeReport, EngineError> {
    let class = ke_class(g, budget)?;
    let core_set = core(g, budget)?;
    let ker_set = ker(g);
    let (xi, epsilon) = (core_set.len(), ker_set.len());
    let rho_v = rho_v(g, budget)?;
    let rho_e = rho_e(g, budget)?;
    let checks = class.is_ke().then(|| FormulaChecks {
        rho_v_equality: rho_v == g.n() - xi + epsilon,
        rho_e_lower_bound: rho_e as i64 >= g.m() as i64 - xi as i64 + epsilon as i64,
    });
    Ok(KeReport {
        schema_version: REPORT_SCHEMA_VERSION,
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        alpha: class.alpha,
        mu: class.mu,
        d: critical_difference(g),
        core: core_set.iter().collect(),
        xi,
        ker: ker_set.iter().collect(),
        epsilon,
        eta: alpha_critical_edges(g, budget)?.len(),
        rho_v,
        rho_e,
        ke_class: class.kind,
        max_matching: max_matching(g).edges().iter().collect(),
        vertex_verdicts: classify_vertices(g, budget)?,
        edge_verdicts: classify_edges(g, budget)?,
        checks,
    })
}

impl KeReport {
    pub fn csv_header() -> &'static str {
        "graph6,n,m,alpha,mu,d,xi,epsilon,eta,rho_v,rho_e,ke_class,rho_v_equality,rho_e_lower_bound"
    }

    pub fn csv_row(&self) -> String {
        let (eq, lb) = match self.checks {
            Some(c) => (c.rho_v_equality.to_string(), c.rho_e_lower_bound.to_string()),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{:?},{},{}",
            self.graph6,
            self.n,
            self.m,
            self.alpha,
            self.mu,
            self.d,
            self.xi,
            self.epsilon,
            self.eta,
            self.rho_v,
            self.rho_e,
            self.ke_class,
            eq,
            lb
        )
    }
}
