//! Per-graph verification ledger: every structural fact the analysis relies
//! on, checked directly on one graph. Universally quantified matching claims
//! are settled by full enumeration on small graphs and by seeded sampling
//! beyond that; facts whose hypotheses a graph does not meet come back as
//! `NotApplicable`, never as a vacuous `Pass`.

use crate::analysis::{
    classify_edges, classify_vertices, critical_decomposition, is_almost_bipartite, is_bipartite,
    ke_class, rho_e, rho_v, EdgeLocation, KeClassification,
};
use crate::critical::{
    critical_difference, enumerate_critical_independent_sets, find_critical_independent_set, ker,
};
use crate::graph::{Graph, VertexSet};
use crate::independence::{
    alpha_critical_edges, core, enumerate_maximum_independent_sets, Budget, EngineError,
};
use crate::matching::{
    enumerate_maximum_matchings, matching_number, mu_critical_edges,
    random_maximum_matching, saturating_matching_exists, Matching,
};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremStatus {
    Pass,
    /// A counterexample was found; the payload describes it.
    Fail(String),
    NotApplicable(&'static str),
}

impl TheoremStatus {
    pub fn is_fail(&self) -> bool {
        matches!(self, TheoremStatus::Fail(_))
    }
}

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal,)*) => {
        /// Identifier of one checkable structural fact.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }
    };
}

theorem_ids! {
    CriticalDifferenceLowerBound => "critical-difference-lower-bound",
    CoreMatchingStructure => "core-matching-structure",
    CriticalSetExtension => "critical-set-extension",
    CriticalFamilyClosure => "critical-family-closure",
    KernelMatchingCharacterization => "kernel-matching-characterization",
    SingletonCoreLeaf => "singleton-core-leaf",
    NestedCriticalPerfectMatching => "nested-critical-perfect-matching",
    CriticalComplementMatching => "critical-complement-matching",
    AlmostBipartiteSumRange => "almost-bipartite-sum-range",
    KernelEqualsCoreBipartite => "kernel-equals-core-bipartite",
    KernelDeletionDrop => "kernel-deletion-drop",
    CoreVsSaturation => "core-vs-saturation",
    ClosedNeighborhoodKernel => "closed-neighborhood-kernel",
    KernelPocketTwoMatchings => "kernel-pocket-two-matchings",
    AlphaCriticalExclusion => "alpha-critical-exclusion",
    CoreMinusKernelDeletion => "core-minus-kernel-deletion",
    MuCriticalBound => "mu-critical-bound",
    ZonePerfectMatchings => "zone-perfect-matchings",
    KernelSaturationCharacterization => "kernel-saturation-characterization",
    VertexHeredityBounds => "vertex-heredity-bounds",
    KernelMatchingExtension => "kernel-matching-extension",
    GapOneEdgeHeredity => "gap-one-edge-heredity",
    EdgeBoundAlphaCritical => "edge-bound-alpha-critical",
    CoreEqualsKernelEdgeHeredity => "core-equals-kernel-edge-heredity",
    CriticalDecompositionSplit => "critical-decomposition-split",
    VertexDeletionTrichotomy => "vertex-deletion-trichotomy",
    MuCriticalLocalization => "mu-critical-localization",
    FullHeredityCharacterization => "full-heredity-characterization",
    NonBipartiteInducedWitness => "non-bipartite-induced-witness",
    HeredityGapComparison => "heredity-gap-comparison",
    VertexHeredityPositive => "vertex-heredity-positive",
}

/// Pass/fail ledger for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub graph6: String,
    pub entries: Vec<(TheoremId, TheoremStatus)>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = (TheoremId, &str)> + '_ {
        self.entries.iter().filter_map(|(id, s)| match s {
            TheoremStatus::Fail(msg) => Some((*id, msg.as_str())),
            _ => None,
        })
    }

    pub fn is_clean(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn status(&self, id: TheoremId) -> &TheoremStatus {
        &self.entries.iter().find(|(i, _)| *i == id).expect("all ids present").1
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub budget: Budget,
    /// Full maximum-matching enumeration up to this order; sampling beyond.
    pub exhaustive_matchings_max_n: usize,
    /// Hard cap on enumerated maximum matchings before falling back.
    pub matching_cap: usize,
    /// Number of seeded random maximum matchings in sampling mode.
    pub sampled_matchings: usize,
    /// Cap on enumerated independent/critical set families.
    pub family_cap: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            budget: Budget::default(),
            exhaustive_matchings_max_n: 12,
            matching_cap: 100_000,
            sampled_matchings: 50,
            family_cap: 200_000,
            seed: 0,
        }
    }
}

const NOT_KE: &str = "requires a König-Egerváry graph";

struct Ctx<'a> {
    g: &'a Graph,
    cfg: &'a SuiteConfig,
    class: KeClassification,
    d: usize,
    core: VertexSet,
    ker: VertexSet,
    n_core: VertexSet,
    n_ker: VertexSet,
    omega: Vec<VertexSet>,
    omega_complete: bool,
    criticals: Vec<VertexSet>,
    criticals_complete: bool,
    /// Some = full enumeration; None = fall back to sampling.
    max_matchings: Option<Vec<Matching>>,
    rho_v: usize,
    rho_e: usize,
    eta: usize,
}

impl<'a> Ctx<'a> {
    fn build(g: &'a Graph, cfg: &'a SuiteConfig) -> Result<Self, EngineError> {
        let budget = &cfg.budget;
        let class = ke_class(g, budget)?;
        let core_set = core(g, budget)?;
        let ker_set = ker(g);
        let (omega, omega_complete) = match enumerate_maximum_independent_sets(g, budget) {
            Ok(mut sets) => {
                let complete = sets.len() <= cfg.family_cap;
                sets.truncate(cfg.family_cap);
                (sets, complete)
            }
            Err(EngineError::BudgetExceeded { .. }) => (Vec::new(), false),
            Err(e) => return Err(e),
        };
        let (criticals, criticals_complete) = match enumerate_critical_independent_sets(g, budget) {
            Ok(mut sets) => {
                let complete = sets.len() <= cfg.family_cap;
                sets.truncate(cfg.family_cap);
                (sets, complete)
            }
            Err(EngineError::BudgetExceeded { .. }) => (Vec::new(), false),
            Err(e) => return Err(e),
        };
        let max_matchings = if g.n() <= cfg.exhaustive_matchings_max_n {
            enumerate_maximum_matchings(g, cfg.matching_cap)
        } else {
            None
        };
        Ok(Ctx {
            g,
            cfg,
            class,
            d: critical_difference(g),
            n_core: g.neighborhood(&core_set).expect("core in range"),
            n_ker: g.neighborhood(&ker_set).expect("ker in range"),
            core: core_set,
            ker: ker_set,
            omega,
            omega_complete,
            criticals,
            criticals_complete,
            max_matchings,
            rho_v: rho_v(g, budget)?,
            rho_e: rho_e(g, budget)?,
            eta: alpha_critical_edges(g, budget)?.len(),
        })
    }

    fn is_ke(&self) -> bool {
        self.class.is_ke()
    }

    fn alpha(&self) -> usize {
        self.class.alpha
    }

    fn mu(&self) -> usize {
        self.class.mu
    }

    /// Maximum matchings to test a "for every maximum matching" claim
    /// against: the full list when enumeration succeeded, otherwise a seeded
    /// sample (sound for finding failures, reported as sampled).
    fn matchings_to_check(&self) -> Vec<Matching> {
        match &self.max_matchings {
            Some(all) => all.clone(),
            None => (0..self.cfg.sampled_matchings as u64)
                .map(|i| random_maximum_matching(self.g, self.cfg.seed.wrapping_add(i)))
                .collect(),
        }
    }

    fn difference_of(&self, set: &VertexSet) -> i64 {
        set.len() as i64 - self.g.neighborhood(set).expect("set in range").len() as i64
    }

    fn fail(&self, msg: impl Into<String>) -> TheoremStatus {
        TheoremStatus::Fail(msg.into())
    }

    fn pass_iff(&self, ok: bool, msg: impl Into<String>) -> TheoremStatus {
        if ok {
            TheoremStatus::Pass
        } else {
            self.fail(msg)
        }
    }
}

/// Runs every suite entry on one graph.
pub fn theorem_suite(g: &Graph, cfg: &SuiteConfig) -> Result<TheoremReport, EngineError> {
    let ctx = Ctx::build(g, cfg)?;
    let entries = TheoremId::ALL
        .iter()
        .map(|&id| (id, run_entry(&ctx, id)))
        .collect();
    Ok(TheoremReport {
        graph6: crate::format::encode_graph6(g),
        entries,
    })
}

fn run_entry(ctx: &Ctx, id: TheoremId) -> TheoremStatus {
    use TheoremId::*;
    match id {
        CriticalDifferenceLowerBound => check_difference_lower_bound(ctx),
        CoreMatchingStructure => check_core_matching_structure(ctx),
        CriticalSetExtension => check_critical_set_extension(ctx),
        CriticalFamilyClosure => check_critical_family_closure(ctx),
        KernelMatchingCharacterization => check_kernel_matching_characterization(ctx),
        SingletonCoreLeaf => check_singleton_core_leaf(ctx),
        NestedCriticalPerfectMatching => check_nested_critical_perfect_matching(ctx),
        CriticalComplementMatching => check_critical_complement_matching(ctx),
        AlmostBipartiteSumRange => check_almost_bipartite_sum_range(ctx),
        KernelEqualsCoreBipartite => check_kernel_equals_core_bipartite(ctx),
        KernelDeletionDrop => check_kernel_deletion_drop(ctx),
        CoreVsSaturation => check_core_vs_saturation(ctx),
        ClosedNeighborhoodKernel => check_closed_neighborhood_kernel(ctx),
        KernelPocketTwoMatchings => check_kernel_pocket_two_matchings(ctx),
        AlphaCriticalExclusion => check_alpha_critical_exclusion(ctx),
        CoreMinusKernelDeletion => check_core_minus_kernel_deletion(ctx),
        MuCriticalBound => check_mu_critical_bound(ctx),
        ZonePerfectMatchings => check_zone_perfect_matchings(ctx),
        KernelSaturationCharacterization => check_kernel_saturation_characterization(ctx),
        VertexHeredityBounds => check_vertex_heredity_bounds(ctx),
        KernelMatchingExtension => check_kernel_matching_extension(ctx),
        GapOneEdgeHeredity => check_gap_one_edge_heredity(ctx),
        EdgeBoundAlphaCritical => check_edge_bound_alpha_critical(ctx),
        CoreEqualsKernelEdgeHeredity => check_core_equals_kernel_edge_heredity(ctx),
        CriticalDecompositionSplit => check_critical_decomposition_split(ctx),
        VertexDeletionTrichotomy => check_vertex_deletion_trichotomy(ctx),
        MuCriticalLocalization => check_mu_critical_localization(ctx),
        FullHeredityCharacterization => check_full_heredity_characterization(ctx),
        NonBipartiteInducedWitness => check_non_bipartite_induced_witness(ctx),
        HeredityGapComparison => check_heredity_gap_comparison(ctx),
        VertexHeredityPositive => check_vertex_heredity_positive(ctx),
    }
}

/// d(G) >= alpha(G) - mu(G), on every graph.
fn check_difference_lower_bound(ctx: &Ctx) -> TheoremStatus {
    let gap = ctx.alpha() as i64 - ctx.mu() as i64;
    ctx.pass_iff(
        ctx.d as i64 >= gap,
        format!("d = {} below alpha - mu = {gap}", ctx.d),
    )
}

/// On KE graphs: every maximum matching matches N(core) into core,
/// G - N[core] is KE with a perfect matching, and
/// |core| - |N(core)| = alpha - mu = d.
fn check_core_matching_structure(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let g = ctx.g;
    for m in ctx.matchings_to_check() {
        let mate = m.to_mate(g.n());
        for w in ctx.n_core.iter() {
            match mate[w] {
                Some(p) if ctx.core.contains(p) => {}
                other => {
                    return ctx.fail(format!(
                        "matching sends core neighbor {w} to {other:?}, not into core"
                    ))
                }
            }
        }
    }
    let closed = ctx.core.union(&ctx.n_core);
    let rest = g
        .induced_subgraph(&VertexSet::full(g.n()).difference(&closed))
        .expect("complement in range");
    let class = match ke_class(&rest.graph, &ctx.cfg.budget) {
        Ok(c) => c,
        Err(e) => return ctx.fail(format!("classification failed: {e}")),
    };
    if !class.is_ke() || 2 * class.mu != rest.graph.n() {
        return ctx.fail("graph minus closed core neighborhood lacks a KE perfect matching");
    }
    let lhs = ctx.core.len() as i64 - ctx.n_core.len() as i64;
    let gap = ctx.alpha() as i64 - ctx.mu() as i64;
    ctx.pass_iff(
        lhs == gap && gap == ctx.d as i64,
        format!("|core| - |N(core)| = {lhs}, alpha - mu = {gap}, d = {}", ctx.d),
    )
}

/// Every critical independent set extends to a maximum independent set and
/// to a maximum critical independent set, and N(S) matches into S.
fn check_critical_set_extension(ctx: &Ctx) -> TheoremStatus {
    if !ctx.criticals_complete || !ctx.omega_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    let top = ctx.criticals.iter().map(VertexSet::len).max().unwrap_or(0);
    for s in &ctx.criticals {
        if !ctx.omega.iter().any(|o| s.is_subset(o)) {
            return ctx.fail(format!("critical set {s} is in no maximum independent set"));
        }
        if !ctx
            .criticals
            .iter()
            .any(|c| c.len() == top && s.is_subset(c))
        {
            return ctx.fail(format!("critical set {s} extends to no maximum critical set"));
        }
        let nb = ctx.g.neighborhood(s).expect("set in range");
        match saturating_matching_exists(ctx.g, &nb, s) {
            Ok(true) => {}
            Ok(false) => return ctx.fail(format!("no matching from N({s}) into {s}")),
            Err(e) => return ctx.fail(format!("matching query failed: {e}")),
        }
    }
    TheoremStatus::Pass
}

/// ker is contained in core; the critical family is closed under union and
/// intersection; ker is the unique minimal critical independent set.
fn check_critical_family_closure(ctx: &Ctx) -> TheoremStatus {
    if !ctx.ker.is_subset(&ctx.core) {
        return ctx.fail(format!("ker {} outside core {}", ctx.ker, ctx.core));
    }
    if !ctx.criticals_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    if ctx.difference_of(&ctx.ker) != ctx.d as i64 {
        return ctx.fail(format!("ker {} is not critical", ctx.ker));
    }
    for s in &ctx.criticals {
        if !ctx.ker.is_subset(s) {
            return ctx.fail(format!("critical set {s} misses part of ker {}", ctx.ker));
        }
    }
    // Union/intersection closure, on an index stride when the family is big.
    let k = ctx.criticals.len();
    let stride = (k * k / 10_000).max(1);
    let mut pair = 0usize;
    for i in 0..k {
        for j in (i + 1)..k {
            pair += 1;
            if pair % stride != 0 {
                continue;
            }
            let (a, b) = (&ctx.criticals[i], &ctx.criticals[j]);
            let union = a.union(b);
            if ctx.g.is_independent(&union).expect("sets in range")
                && ctx.difference_of(&union) != ctx.d as i64
            {
                return ctx.fail(format!("union of {a} and {b} is not critical"));
            }
            if ctx.difference_of(&a.intersection(b)) != ctx.d as i64 {
                return ctx.fail(format!("intersection of {a} and {b} is not critical"));
            }
        }
    }
    TheoremStatus::Pass
}

/// A critical independent set equals ker exactly when N(A) matches into
/// A - {v} for each of its members v.
fn check_kernel_matching_characterization(ctx: &Ctx) -> TheoremStatus {
    if !ctx.criticals_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    for a in &ctx.criticals {
        let nb = ctx.g.neighborhood(a).expect("set in range");
        let property = a.iter().all(|v| {
            let mut reduced = a.clone();
            reduced.remove(v);
            saturating_matching_exists(ctx.g, &nb, &reduced).unwrap_or(false)
        });
        if property != (*a == ctx.ker) {
            return ctx.fail(format!(
                "matching characterization disagrees on {a} (ker = {})",
                ctx.ker
            ));
        }
    }
    TheoremStatus::Pass
}

/// A KE graph without isolated vertices whose core is a single vertex has a
/// perfect matching, and that vertex is a leaf.
fn check_singleton_core_leaf(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    if ctx.core.len() != 1 || (0..ctx.g.n()).any(|v| ctx.g.degree(v) == 0) {
        return TheoremStatus::NotApplicable("needs a singleton core and no isolated vertices");
    }
    let v = ctx.core.iter().next().unwrap();
    ctx.pass_iff(
        2 * ctx.mu() == ctx.g.n() && ctx.g.degree(v) == 1,
        format!("core vertex {v} has degree {} with mu = {}", ctx.g.degree(v), ctx.mu()),
    )
}

/// Nested critical independent sets B within A leave a perfect matching
/// between A - B and N(A) - N(B), and the subgraph induced on
/// (A - B) ∪ (N(A) - N(B)) — which is N[A] - N[B] — is KE.
fn check_nested_critical_perfect_matching(ctx: &Ctx) -> TheoremStatus {
    if !ctx.criticals_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    let k = ctx.criticals.len();
    let stride = (k * k / 10_000).max(1);
    let mut pair = 0usize;
    for i in 0..k {
        for j in 0..k {
            if i == j || !ctx.criticals[j].is_subset(&ctx.criticals[i]) {
                continue;
            }
            pair += 1;
            if pair % stride != 0 {
                continue;
            }
            let (a, b) = (&ctx.criticals[i], &ctx.criticals[j]);
            let a_minus_b = a.difference(b);
            let na = ctx.g.neighborhood(a).expect("set in range");
            let nb = ctx.g.neighborhood(b).expect("set in range");
            let pocket = na.difference(&nb);
            if pocket.len() != a_minus_b.len() {
                return ctx.fail(format!("pocket sizes differ for {b} inside {a}"));
            }
            match crate::matching::unique_perfect_matching_between(ctx.g, &a_minus_b, &pocket) {
                Ok(crate::matching::PerfectMatchingStatus::UniquePerfect(_))
                | Ok(crate::matching::PerfectMatchingStatus::MultiplePerfect(..)) => {}
                other => {
                    return ctx.fail(format!(
                        "no perfect matching between {a_minus_b} and {pocket}: {other:?}"
                    ))
                }
            }
            let span = a_minus_b.union(&pocket);
            let sub = ctx.g.induced_subgraph(&span).expect("set in range");
            match ke_class(&sub.graph, &ctx.cfg.budget) {
                Ok(c) if c.is_ke() => {}
                Ok(_) => {
                    return ctx.fail(format!("subgraph on {span} is not KE"));
                }
                Err(e) => return ctx.fail(format!("classification failed: {e}")),
            }
        }
    }
    TheoremStatus::Pass
}

/// A critical independent set A inside an independent S leaves a matching
/// from S - A into V - S - N(A).
fn check_critical_complement_matching(ctx: &Ctx) -> TheoremStatus {
    if !ctx.criticals_complete || !ctx.omega_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    let full = VertexSet::full(ctx.g.n());
    for a in &ctx.criticals {
        let na = ctx.g.neighborhood(a).expect("set in range");
        for s in ctx.omega.iter().filter(|s| a.is_subset(s)) {
            let from = s.difference(a);
            let into = full.difference(s).difference(&na);
            match saturating_matching_exists(ctx.g, &from, &into) {
                Ok(true) => {}
                Ok(false) => {
                    return ctx.fail(format!("no matching from {from} into the complement pocket"))
                }
                Err(e) => return ctx.fail(format!("matching query failed: {e}")),
            }
        }
    }
    TheoremStatus::Pass
}

/// Graphs with exactly one odd cycle satisfy n - 1 <= alpha + mu <= n.
fn check_almost_bipartite_sum_range(ctx: &Ctx) -> TheoremStatus {
    if !is_almost_bipartite(ctx.g) {
        return TheoremStatus::NotApplicable("not almost bipartite");
    }
    let sum = ctx.alpha() + ctx.mu();
    ctx.pass_iff(
        sum + 1 == ctx.g.n() || sum == ctx.g.n(),
        format!("alpha + mu = {sum} out of range for n = {}", ctx.g.n()),
    )
}

/// Bipartite graphs, and almost bipartite graphs that are not KE, have
/// ker = core.
fn check_kernel_equals_core_bipartite(ctx: &Ctx) -> TheoremStatus {
    let applicable =
        is_bipartite(ctx.g) || (is_almost_bipartite(ctx.g) && !ctx.is_ke());
    if !applicable {
        return TheoremStatus::NotApplicable("needs bipartite, or almost bipartite non-KE");
    }
    ctx.pass_iff(
        ctx.ker == ctx.core,
        format!("ker {} differs from core {}", ctx.ker, ctx.core),
    )
}

/// d drops by one under deletion exactly for kernel vertices (with the
/// kernel recomputed from enumeration, independently of the deletion rule),
/// and deleting a kernel vertex shrinks the kernel.
fn check_kernel_deletion_drop(ctx: &Ctx) -> TheoremStatus {
    if ctx.g.n() == 0 {
        return TheoremStatus::NotApplicable("empty graph");
    }
    if !ctx.criticals_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    let ker_enum = ctx
        .criticals
        .iter()
        .fold(VertexSet::full(ctx.g.n()), |acc, s| acc.intersection(s));
    for v in 0..ctx.g.n() {
        let reduced = ctx.g.delete_vertex(v).expect("vertex in range");
        let drops = critical_difference(&reduced) + 1 == ctx.d;
        if drops != ker_enum.contains(v) {
            return ctx.fail(format!(
                "deletion drop at {v} = {drops}, enumerated kernel = {ker_enum}"
            ));
        }
        if ker_enum.contains(v) {
            let shifted: VertexSet = ker_enum
                .iter()
                .filter(|&u| u != v)
                .map(|u| if u > v { u - 1 } else { u })
                .collect();
            if !ker(&reduced).is_subset(&shifted) {
                return ctx.fail(format!("kernel of G - {v} escapes ker - {v}"));
            }
        }
    }
    TheoremStatus::Pass
}

/// On KE graphs, when G - v stays KE: v is in core iff v is not saturated by
/// every maximum matching.
fn check_core_vs_saturation(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let mu_crit = crate::matching::mu_critical_vertices(ctx.g);
    let mut any = false;
    for v in 0..ctx.g.n() {
        let reduced = ctx.g.delete_vertex(v).expect("vertex in range");
        let still_ke = match ke_class(&reduced, &ctx.cfg.budget) {
            Ok(c) => c.is_ke(),
            Err(e) => return ctx.fail(format!("classification failed: {e}")),
        };
        if !still_ke {
            continue;
        }
        any = true;
        if ctx.core.contains(v) == mu_crit.contains(v) {
            return ctx.fail(format!(
                "vertex {v}: core membership {} with mu-criticality {}",
                ctx.core.contains(v),
                mu_crit.contains(v)
            ));
        }
    }
    if any {
        TheoremStatus::Pass
    } else {
        TheoremStatus::NotApplicable("no KE-preserving vertex deletions")
    }
}

/// For H = G[N[A]] with ker inside A: d(H) >= d(G), with equality and
/// ker(H) = ker(G) when A is critical independent.
fn check_closed_neighborhood_kernel(ctx: &Ctx) -> TheoremStatus {
    let g = ctx.g;
    // Arbitrary supersets of the kernel for the inequality direction.
    let mut supersets: Vec<VertexSet> = vec![ctx.ker.clone(), VertexSet::full(g.n())];
    for v in 0..g.n().min(3) {
        let mut s = ctx.ker.clone();
        s.insert(v);
        supersets.push(s);
    }
    for a in &supersets {
        let closed = g.closed_neighborhood(a).expect("set in range");
        let sub = g.induced_subgraph(&closed).expect("set in range");
        if critical_difference(&sub.graph) < ctx.d {
            return ctx.fail(format!("d(G[N[{a}]]) below d(G) = {}", ctx.d));
        }
    }
    // Critical independent witnesses for the equality direction.
    let mut witnesses: Vec<VertexSet> = vec![ctx.ker.clone(), find_critical_independent_set(g)];
    for s in ctx.criticals.iter().take(5) {
        witnesses.push(s.clone());
    }
    for a in &witnesses {
        let closed = g.closed_neighborhood(a).expect("set in range");
        let sub = g.induced_subgraph(&closed).expect("set in range");
        if critical_difference(&sub.graph) != ctx.d {
            return ctx.fail(format!("d(G[N[{a}]]) differs from d(G) = {}", ctx.d));
        }
        let sub_ker: VertexSet = ker(&sub.graph)
            .iter()
            .map(|v| sub.parent_ids[v])
            .collect();
        if sub_ker != ctx.ker {
            return ctx.fail(format!(
                "ker(G[N[{a}]]) = {sub_ker} differs from ker(G) = {}",
                ctx.ker
            ));
        }
    }
    TheoremStatus::Pass
}

/// Every kernel-pocket edge is avoidable and usable: some saturating
/// matching from N(ker) into ker omits it, and some other contains it.
fn check_kernel_pocket_two_matchings(ctx: &Ctx) -> TheoremStatus {
    let g = ctx.g;
    let pocket: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            (ctx.ker.contains(u) && ctx.n_ker.contains(v))
                || (ctx.ker.contains(v) && ctx.n_ker.contains(u))
        })
        .collect();
    if pocket.is_empty() {
        return TheoremStatus::NotApplicable("no kernel-pocket edges");
    }
    for (x, y) in pocket {
        let (k, w) = if ctx.ker.contains(x) { (x, y) } else { (y, x) };
        // Avoidable: a saturating matching still exists with the edge gone.
        let without = g.delete_edge(k, w).expect("edge exists");
        match saturating_matching_exists(&without, &ctx.n_ker, &ctx.ker) {
            Ok(true) => {}
            Ok(false) => return ctx.fail(format!("edge {k}-{w} is forced in the kernel pocket")),
            Err(e) => return ctx.fail(format!("matching query failed: {e}")),
        }
        // Usable: force the edge, match the rest.
        let mut rest_from = ctx.n_ker.clone();
        rest_from.remove(w);
        let mut rest_into = ctx.ker.clone();
        rest_into.remove(k);
        let shrunk = VertexSet::full(g.n())
            .difference(&VertexSet::singleton(k))
            .difference(&VertexSet::singleton(w));
        let sub = g.induced_subgraph(&shrunk).expect("set in range");
        let remap = |set: &VertexSet| -> VertexSet {
            set.iter()
                .filter_map(|v| sub.parent_ids.iter().position(|&p| p == v))
                .collect()
        };
        match saturating_matching_exists(&sub.graph, &remap(&rest_from), &remap(&rest_into)) {
            Ok(true) => {}
            Ok(false) => return ctx.fail(format!("edge {k}-{w} is unusable in the kernel pocket")),
            Err(e) => return ctx.fail(format!("matching query failed: {e}")),
        }
    }
    TheoremStatus::Pass
}

/// No alpha-critical edge runs between N(core) and N(N(core)).
fn check_alpha_critical_exclusion(ctx: &Ctx) -> TheoremStatus {
    let budget = &ctx.cfg.budget;
    let a_crit = match alpha_critical_edges(ctx.g, budget) {
        Ok(s) => s,
        Err(e) => return ctx.fail(format!("alpha-critical scan failed: {e}")),
    };
    let nn_core = ctx
        .g
        .neighborhood(&ctx.n_core)
        .expect("set in range");
    for (u, v) in a_crit.iter() {
        let in_pocket = (ctx.n_core.contains(u) && nn_core.contains(v))
            || (ctx.n_core.contains(v) && nn_core.contains(u));
        if in_pocket {
            return ctx.fail(format!("alpha-critical edge {u}-{v} touches the core boundary"));
        }
    }
    TheoremStatus::Pass
}

/// Deleting a vertex of core - ker keeps ker critical and keeps d unchanged
/// (equal to alpha - mu on KE graphs).
fn check_core_minus_kernel_deletion(ctx: &Ctx) -> TheoremStatus {
    let zone = ctx.core.difference(&ctx.ker);
    if zone.is_empty() {
        return TheoremStatus::NotApplicable("core equals ker");
    }
    for v in zone.iter() {
        let reduced = ctx.g.delete_vertex(v).expect("vertex in range");
        let shifted_ker: VertexSet = ctx
            .ker
            .iter()
            .map(|u| if u > v { u - 1 } else { u })
            .collect();
        let d_reduced = critical_difference(&reduced);
        let ker_diff = shifted_ker.len() as i64
            - reduced
                .neighborhood(&shifted_ker)
                .expect("set in range")
                .len() as i64;
        if ker_diff != d_reduced as i64 {
            return ctx.fail(format!("ker is not critical in G - {v}"));
        }
        if d_reduced != ctx.d {
            return ctx.fail(format!("d(G - {v}) = {d_reduced} differs from d = {}", ctx.d));
        }
        if ctx.is_ke() && d_reduced as i64 != ctx.alpha() as i64 - ctx.mu() as i64 {
            return ctx.fail(format!("d(G - {v}) differs from alpha - mu"));
        }
    }
    TheoremStatus::Pass
}

/// At most mu(G) edges are mu-critical.
fn check_mu_critical_bound(ctx: &Ctx) -> TheoremStatus {
    let crit = mu_critical_edges(ctx.g);
    ctx.pass_iff(
        crit.len() <= ctx.mu(),
        format!("{} mu-critical edges exceed mu = {}", crit.len(), ctx.mu()),
    )
}

/// On KE graphs every maximum matching restricts to perfect matchings
/// between the zone pairs cut out by core, ker and a maximum independent
/// set.
fn check_zone_perfect_matchings(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    if !ctx.omega_complete {
        return TheoremStatus::NotApplicable("set enumeration exceeded the cap");
    }
    let g = ctx.g;
    let full = VertexSet::full(g.n());
    let matchings = ctx.matchings_to_check();
    let pair_ok = |mate: &[Option<usize>], from: &VertexSet, into: &VertexSet| -> bool {
        from.iter().all(|x| matches!(mate[x], Some(p) if into.contains(p)))
            && into.iter().all(|y| matches!(mate[y], Some(p) if from.contains(p)))
    };
    for m in &matchings {
        let mate = m.to_mate(g.n());
        // core - ker against N(core) - N(ker): independent of S
        if !pair_ok(
            &mate,
            &ctx.core.difference(&ctx.ker),
            &ctx.n_core.difference(&ctx.n_ker),
        ) {
            return ctx.fail("matching breaks on (core - ker, N(core) - N(ker))".to_string());
        }
        for s in &ctx.omega {
            let rest = full.difference(s);
            if !pair_ok(
                &mate,
                &s.difference(&ctx.core),
                &rest.difference(&ctx.n_core),
            ) {
                return ctx.fail(format!("matching breaks on (S - core, N(S) - N(core)) for S = {s}"));
            }
            if !pair_ok(&mate, &s.difference(&ctx.ker), &rest.difference(&ctx.n_ker)) {
                return ctx.fail(format!("matching breaks on (S - ker, N(S) - N(ker)) for S = {s}"));
            }
        }
    }
    TheoremStatus::Pass
}

/// On KE graphs: v lies in ker iff v lies in core and is missed by some
/// maximum matching.
fn check_kernel_saturation_characterization(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let mu_crit = crate::matching::mu_critical_vertices(ctx.g);
    for v in 0..ctx.g.n() {
        let expected = ctx.core.contains(v) && !mu_crit.contains(v);
        if ctx.ker.contains(v) != expected {
            return ctx.fail(format!(
                "vertex {v}: ker membership {} vs core/saturation {}",
                ctx.ker.contains(v),
                expected
            ));
        }
    }
    TheoremStatus::Pass
}

/// eta + mu + epsilon <= rho_v <= 2 mu + epsilon on KE graphs, with both
/// equalities exactly when eta = mu.
fn check_vertex_heredity_bounds(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let eps = ctx.ker.len();
    let lower = ctx.eta + ctx.mu() + eps;
    let upper = 2 * ctx.mu() + eps;
    if !(lower <= ctx.rho_v && ctx.rho_v <= upper) {
        return ctx.fail(format!("rho_v = {} outside [{lower}, {upper}]", ctx.rho_v));
    }
    let both_equal = lower == ctx.rho_v && ctx.rho_v == upper;
    ctx.pass_iff(
        both_equal == (ctx.eta == ctx.mu()),
        format!(
            "equalities {both_equal} vs eta = {} mu = {}",
            ctx.eta,
            ctx.mu()
        ),
    )
}

/// Every maximum matching of G[N[ker]] extends to a maximum matching of G,
/// and every maximum matching of G restricts to one of G[N[ker]].
fn check_kernel_matching_extension(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let g = ctx.g;
    let closed = ctx.ker.union(&ctx.n_ker);
    let sub = g.induced_subgraph(&closed).expect("set in range");
    let mu_sub = matching_number(&sub.graph);
    let sub_matchings = match enumerate_maximum_matchings(&sub.graph, ctx.cfg.matching_cap) {
        Some(all) => all,
        None => return TheoremStatus::NotApplicable("kernel subgraph matching enumeration capped"),
    };
    for m in &sub_matchings {
        // Extendable iff the rest of the graph still reaches mu - |m|.
        let mut removed = VertexSet::full(g.n());
        for (u, v) in m.edges().iter() {
            removed.remove(sub.parent_ids[u]);
            removed.remove(sub.parent_ids[v]);
        }
        let rest = g.induced_subgraph(&removed).expect("set in range");
        if matching_number(&rest.graph) + m.len() != ctx.mu() {
            return ctx.fail(format!("kernel matching {:?} does not extend", m.edges()));
        }
    }
    for m in ctx.matchings_to_check() {
        let trace = m
            .edges()
            .iter()
            .filter(|&(u, v)| closed.contains(u) && closed.contains(v))
            .count();
        if trace != mu_sub {
            return ctx.fail(format!(
                "trace {trace} of a maximum matching misses mu = {mu_sub} on N[ker]"
            ));
        }
    }
    TheoremStatus::Pass
}

/// KE graphs with xi - epsilon = 1 satisfy rho_e = m - 1.
fn check_gap_one_edge_heredity(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    if ctx.core.len() != ctx.ker.len() + 1 {
        return TheoremStatus::NotApplicable("needs xi - epsilon = 1");
    }
    ctx.pass_iff(
        ctx.rho_e + 1 == ctx.g.m(),
        format!("rho_e = {} with m = {}", ctx.rho_e, ctx.g.m()),
    )
}

/// m - xi + epsilon >= eta on KE graphs.
fn check_edge_bound_alpha_critical(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let bound = ctx.g.m() as i64 - ctx.core.len() as i64 + ctx.ker.len() as i64;
    ctx.pass_iff(
        bound >= ctx.eta as i64,
        format!("m - xi + epsilon = {bound} below eta = {}", ctx.eta),
    )
}

/// KE graphs with core = ker keep every edge deletion KE.
fn check_core_equals_kernel_edge_heredity(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    if ctx.core != ctx.ker {
        return TheoremStatus::NotApplicable("core differs from ker");
    }
    ctx.pass_iff(
        ctx.rho_e == ctx.g.m(),
        format!("rho_e = {} with m = {}", ctx.rho_e, ctx.g.m()),
    )
}

/// The split along any critical independent set passes its structure checks.
fn check_critical_decomposition_split(ctx: &Ctx) -> TheoremStatus {
    let mut witnesses: Vec<VertexSet> =
        vec![VertexSet::new(), ctx.ker.clone(), find_critical_independent_set(ctx.g)];
    witnesses.extend(ctx.criticals.iter().take(50).cloned());
    for a in &witnesses {
        if ctx.difference_of(a) != ctx.d as i64 || !ctx.g.is_independent(a).expect("in range") {
            continue; // the empty set is critical only when d = 0
        }
        match critical_decomposition(ctx.g, a, &ctx.cfg.budget) {
            Ok(dec) if dec.checks.all_pass() => {}
            Ok(dec) => {
                return ctx.fail(format!("split at {a} fails checks {:?}", dec.checks));
            }
            Err(e) => return ctx.fail(format!("split at {a} rejected: {e}")),
        }
    }
    TheoremStatus::Pass
}

/// On KE graphs every vertex deletion lands exactly where its zone says:
/// KE off the core, one short on core - ker, KE on ker; and the zone count
/// gives rho_v = n - xi + epsilon.
fn check_vertex_deletion_trichotomy(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let verdicts = match classify_vertices(ctx.g, &ctx.cfg.budget) {
        Ok(v) => v,
        Err(e) => return ctx.fail(format!("classification failed: {e}")),
    };
    for v in &verdicts {
        if !v.satisfies_trichotomy() {
            return ctx.fail(format!("vertex {} breaks its zone prediction", v.vertex));
        }
    }
    let formula = ctx.g.n() - ctx.core.len() + ctx.ker.len();
    ctx.pass_iff(
        ctx.rho_v == formula,
        format!("rho_v = {} differs from n - xi + epsilon = {formula}", ctx.rho_v),
    )
}

/// On KE graphs mu-critical edges avoid the kernel pockets, sit only in the
/// cross pocket within (core, N(core)), number at most xi - epsilon there,
/// and rho_e >= m - xi + epsilon.
fn check_mu_critical_localization(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let verdicts = match classify_edges(ctx.g, &ctx.cfg.budget) {
        Ok(v) => v,
        Err(e) => return ctx.fail(format!("classification failed: {e}")),
    };
    let mut cross_critical = 0usize;
    for v in &verdicts {
        match v.location {
            EdgeLocation::KerPocket | EdgeLocation::CoreMinusKerToKerNeighborhood => {
                if v.mu_critical {
                    return ctx.fail(format!(
                        "mu-critical edge {:?} inside a kernel pocket",
                        v.edge
                    ));
                }
            }
            EdgeLocation::OutsideCorePocket => {
                if !v.deletion_is_ke {
                    return ctx.fail(format!(
                        "deleting off-core edge {:?} leaves a non-KE graph",
                        v.edge
                    ));
                }
            }
            EdgeLocation::CrossPocket => {
                if v.mu_critical {
                    cross_critical += 1;
                }
            }
        }
    }
    let cap = ctx.core.len() - ctx.ker.len();
    if cross_critical > cap {
        return ctx.fail(format!(
            "{cross_critical} mu-critical cross-pocket edges exceed xi - epsilon = {cap}"
        ));
    }
    let bound = ctx.g.m() as i64 - ctx.core.len() as i64 + ctx.ker.len() as i64;
    ctx.pass_iff(
        ctx.rho_e as i64 >= bound,
        format!("rho_e = {} below m - xi + epsilon = {bound}", ctx.rho_e),
    )
}

/// On KE graphs rho_v = n iff core = ker, and core = ker forces rho_e = m.
fn check_full_heredity_characterization(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let equal = ctx.core == ctx.ker;
    if (ctx.rho_v == ctx.g.n()) != equal {
        return ctx.fail(format!(
            "rho_v = {} with n = {} while core == ker is {equal}",
            ctx.rho_v,
            ctx.g.n()
        ));
    }
    if equal && ctx.rho_e != ctx.g.m() {
        return ctx.fail(format!("core = ker but rho_e = {} < m = {}", ctx.rho_e, ctx.g.m()));
    }
    TheoremStatus::Pass
}

/// Non-bipartite KE graphs contain an induced subgraph that is not KE; the
/// witness is a shortest odd cycle.
fn check_non_bipartite_induced_witness(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() || is_bipartite(ctx.g) {
        return TheoremStatus::NotApplicable("needs a non-bipartite KE graph");
    }
    let cycle = match shortest_odd_cycle(ctx.g) {
        Some(c) => c,
        None => return ctx.fail("non-bipartite graph yielded no odd cycle".to_string()),
    };
    let set: VertexSet = cycle.iter().copied().collect();
    let sub = ctx.g.induced_subgraph(&set).expect("cycle in range");
    if sub.graph.m() != cycle.len() {
        return ctx.fail(format!("shortest odd cycle {set} is not induced"));
    }
    match ke_class(&sub.graph, &ctx.cfg.budget) {
        Ok(c) if !c.is_ke() => TheoremStatus::Pass,
        Ok(_) => ctx.fail(format!("induced odd cycle {set} classifies as KE")),
        Err(e) => ctx.fail(format!("classification failed: {e}")),
    }
}

/// n - rho_v >= m - rho_e on KE graphs, with equality when xi - epsilon <= 1.
fn check_heredity_gap_comparison(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() {
        return TheoremStatus::NotApplicable(NOT_KE);
    }
    let v_gap = ctx.g.n() as i64 - ctx.rho_v as i64;
    let e_gap = ctx.g.m() as i64 - ctx.rho_e as i64;
    if v_gap < e_gap {
        return ctx.fail(format!("vertex gap {v_gap} below edge gap {e_gap}"));
    }
    if ctx.core.len() <= ctx.ker.len() + 1 && v_gap != e_gap {
        return ctx.fail(format!(
            "xi - epsilon <= 1 but gaps differ: {v_gap} vs {e_gap}"
        ));
    }
    TheoremStatus::Pass
}

/// Nonempty KE graphs always have at least one KE-preserving vertex
/// deletion.
fn check_vertex_heredity_positive(ctx: &Ctx) -> TheoremStatus {
    if !ctx.is_ke() || ctx.g.n() == 0 {
        return TheoremStatus::NotApplicable("needs a nonempty KE graph");
    }
    ctx.pass_iff(ctx.rho_v > 0, "no vertex deletion preserves the property".to_string())
}

/// Vertices of one shortest odd cycle. The two breadth-first paths from the
/// apex to a same-level edge are disjoint for a shortest cycle, and a
/// shortest odd cycle is always induced.
fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for root in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut prev = vec![usize::MAX; g.n()];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        for (x, y) in g.edges() {
            if dist[x] == usize::MAX || dist[x] != dist[y] {
                continue;
            }
            let len = 2 * dist[x] + 1;
            if best.as_ref().is_some_and(|b| b.len() <= len) {
                continue;
            }
            let path = |mut v: usize| {
                let mut p = vec![v];
                while v != root {
                    v = prev[v];
                    p.push(v);
                }
                p
            };
            let (px, py) = (path(x), path(y));
            let mut vertices = px;
            vertices.extend(py.iter().take(py.len() - 1));
            let set: VertexSet = vertices.iter().copied().collect();
            if set.len() == len {
                best = Some(vertices);
            }
        }
    }
    best
}
