//! Oracles shared by the integration suites. Everything here recomputes
//! invariants from first principles (subset DP, plain enumeration) so the
//! library's algorithmic routes are checked against genuinely independent
//! code.

use kegraph::graph::Graph;

pub fn masks_of(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Independence number by subset DP.
pub fn alpha_dp(n: usize, masks: &[u64]) -> usize {
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
    let mut table = vec![u8::MAX; 1 << n];
    rec(full_mask(n), masks, &mut table) as usize
}

/// Matching number by subset DP; the table is caller-owned so sweeps can
/// reuse the allocation.
pub fn mu_dp(n: usize, masks: &[u64], table: &mut Vec<u8>) -> usize {
    fn rec(mask: u64, masks: &[u64], table: &mut [u8]) -> u8 {
        if mask == 0 {
            return 0;
        }
        let idx = mask as usize;
        if table[idx] != u8::MAX {
            return table[idx];
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = rec(rest, masks, table);
        let mut nbrs = masks[v] & rest;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + rec(rest & !(1 << w), masks, table));
        }
        table[idx] = best;
        best
    }
    table.clear();
    table.resize(1 << n, u8::MAX);
    rec(full_mask(n), masks, table) as usize
}

/// Visits every independent set together with its neighborhood mask.
pub fn for_each_independent_set(n: usize, masks: &[u64], mut f: impl FnMut(u64, u64)) {
    let mut stack: Vec<(u64, u64, u64)> = vec![(0, 0, full_mask(n))];
    while let Some((set, nbhd, cand)) = stack.pop() {
        f(set, nbhd);
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            stack.push((set | 1 << v, nbhd | masks[v], cand & higher & !masks[v]));
        }
    }
}

/// Critical difference as a plain maximum over enumerated independent sets.
pub fn d_oracle(n: usize, masks: &[u64]) -> i64 {
    let mut best = 0i64;
    for_each_independent_set(n, masks, |set, nbhd| {
        best = best.max(set.count_ones() as i64 - nbhd.count_ones() as i64);
    });
    best
}

/// Intersection of all critical independent sets, fully by enumeration.
pub fn ker_oracle(n: usize, masks: &[u64]) -> u64 {
    let d = d_oracle(n, masks);
    let mut intersection = full_mask(n);
    for_each_independent_set(n, masks, |set, nbhd| {
        if set.count_ones() as i64 - nbhd.count_ones() as i64 == d {
            intersection &= set;
        }
    });
    intersection
}

pub fn mask_to_set(mask: u64) -> kegraph::VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}
