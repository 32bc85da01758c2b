//! Exhaustive census of small graphs, one representative per isomorphism
//! class, generated by extending each (k)-vertex representative with a new
//! vertex in all 2^k ways and deduplicating on a canonical key.
//!
//! The canonical key is the maximum, over vertex orderings, of the adjacency
//! upper triangle read column by column. The search that computes it places
//! vertices one at a time and only ever branches on candidates that maximize
//! the next column (earlier bits dominate later ones, so this is exact),
//! breaking remaining ties by an isomorphism-invariant degree profile and
//! skipping candidates that are twins of an already-explored sibling.

use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::HashSet;

/// Number of graphs on n vertices up to isomorphism (index = n).
pub const GRAPH_COUNTS: [u64; 11] = [
    1, 1, 2, 4, 11, 34, 156, 1_044, 12_346, 274_668, 12_005_168,
];

/// Largest order whose canonical key fits the u64 triangle encoding.
pub const MAX_ENUMERABLE_N: usize = 11;

struct CanonSearch<'a> {
    n: usize,
    rows: &'a [u16],
    rank: [u32; 16],
    twin_pairs: [u16; 16],
    total_bits: u32,
    best: u64,
    has_best: bool,
}

impl CanonSearch<'_> {
    fn search(&mut self, placed: &mut Vec<u8>, used: u16, key: u64, bits: u32) {
        let k = placed.len();
        if k == self.n {
            if !self.has_best || key > self.best {
                self.best = key;
                self.has_best = true;
            }
            return;
        }
        let rem = self.total_bits - bits;
        if self.has_best {
            let ceiling = if rem >= 64 {
                u64::MAX
            } else {
                (key << rem) | ((1u64 << rem) - 1)
            };
            if ceiling < self.best {
                return;
            }
        }
        // Segment of the next column: adjacency to the placed prefix, with
        // placed[0] as the high bit.
        let mut best_seg = 0u64;
        let mut best_rank = 0u32;
        let mut any = false;
        let mut segs = [0u64; 16];
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut seg = 0u64;
            for &p in placed.iter() {
                seg = seg << 1 | u64::from(self.rows[v] >> p & 1);
            }
            segs[v] = seg;
            let r = self.rank[v];
            if !any || (seg, r) > (best_seg, best_rank) {
                best_seg = seg;
                best_rank = r;
                any = true;
            }
        }
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if used >> v & 1 == 1 || segs[v] != best_seg || self.rank[v] != best_rank {
                continue;
            }
            // A twin of an already-explored sibling spans an identical
            // subtree: the swap extends to an automorphism fixing the rest.
            if self.twin_pairs[v] & tried != 0 {
                continue;
            }
            tried |= 1 << v;
            placed.push(v as u8);
            self.search(placed, used | 1 << v, key << k | best_seg, bits + k as u32);
            placed.pop();
        }
    }
}

/// Canonical key of the graph given by per-vertex neighbor bitmasks.
pub fn canonical_key(n: usize, rows: &[u16]) -> u64 {
    assert!(n <= MAX_ENUMERABLE_N && rows.len() >= n);
    if n <= 1 {
        return 0;
    }
    // Isomorphism-invariant tie-break profile: (degree, sum of neighbor
    // degrees), ranked canonically.
    let deg: Vec<u32> = (0..n).map(|v| rows[v].count_ones()).collect();
    let profile: Vec<(u32, u32)> = (0..n)
        .map(|v| {
            let mut s = 0u32;
            let mut scan = rows[v];
            while scan != 0 {
                let u = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                s += deg[u];
            }
            (deg[v], s)
        })
        .collect();
    let mut sorted = profile.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let mut rank = [0u32; 16];
    for v in 0..n {
        rank[v] = sorted.binary_search(&profile[v]).unwrap() as u32;
    }
    // Direct twins: equal open neighborhoods, or equal closed neighborhoods
    // across an edge. Swapping such a pair is an automorphism.
    let mut twin_pairs = [0u16; 16];
    for v in 0..n {
        for u in 0..v {
            let false_twins = rows[u] == rows[v];
            let true_twins = rows[v] >> u & 1 == 1
                && rows[u] & !(1 << v) == rows[v] & !(1 << u);
            if false_twins || true_twins {
                twin_pairs[v] |= 1 << u;
                twin_pairs[u] |= 1 << v;
            }
        }
    }
    let mut search = CanonSearch {
        n,
        rows,
        rank,
        twin_pairs,
        total_bits: (n * (n - 1) / 2) as u32,
        best: 0,
        has_best: false,
    };
    search.search(&mut Vec::with_capacity(n), 0, 0, 0);
    search.best
}

/// Inverse of the key encoding: per-vertex neighbor bitmasks.
pub fn rows_from_key(n: usize, key: u64) -> Vec<u16> {
    assert!(n <= MAX_ENUMERABLE_N);
    let mut rows = vec![0u16; n];
    let total_bits = (n * (n - 1) / 2) as u32;
    for k in 1..n {
        let seg = key >> (total_bits - (k * (k + 1) / 2) as u32) & ((1u64 << k) - 1);
        for i in 0..k {
            if seg >> (k - 1 - i) & 1 == 1 {
                rows[k] |= 1 << i;
                rows[i] |= 1 << k;
            }
        }
    }
    rows
}

pub fn graph_from_key(n: usize, key: u64) -> Graph {
    let rows = rows_from_key(n, key);
    let masks: Vec<u64> = rows.iter().map(|&r| r as u64).collect();
    Graph::from_adjacency_masks(n, &masks)
}

pub fn canonical_key_of(g: &Graph) -> u64 {
    assert!(g.n() <= MAX_ENUMERABLE_N);
    let rows: Vec<u16> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    canonical_key(g.n(), &rows)
}

/// Calls `f` on every one-vertex extension of the keyed graph (2^n children,
/// possibly isomorphic to each other). Every (n+1)-vertex graph arises, up to
/// isomorphism, as at least one such extension of some census key.
pub fn for_each_extension<F: FnMut(Graph)>(n: usize, key: u64, mut f: F) {
    let rows = rows_from_key(n, key);
    let base: Vec<u64> = rows.iter().map(|&r| r as u64).collect();
    let mut masks = vec![0u64; n + 1];
    for mask in 0u64..(1 << n) {
        for i in 0..n {
            masks[i] = base[i] | (mask >> i & 1) << n;
        }
        masks[n] = mask;
        f(Graph::from_adjacency_masks(n + 1, &masks));
    }
}

/// All graphs with 1..=max_n vertices, one canonical key per isomorphism
/// class, sorted ascending within each order.
pub struct Census {
    levels: Vec<Vec<u64>>,
}

impl Census {
    pub fn up_to(max_n: usize) -> Census {
        assert!((1..=MAX_ENUMERABLE_N).contains(&max_n));
        let mut levels: Vec<Vec<u64>> = vec![vec![0u64]];
        for k in 1..max_n {
            let parents = &levels[k - 1];
            let mut set: HashSet<u64> = HashSet::new();
            for chunk in parents.chunks(4096) {
                let produced: Vec<Vec<u64>> = chunk
                    .par_iter()
                    .map(|&pkey| {
                        let rows = rows_from_key(k, pkey);
                        let mut child = [0u16; 16];
                        child[..k].copy_from_slice(&rows);
                        let mut out = Vec::with_capacity(1 << k);
                        for mask in 0u16..(1 << k) {
                            for i in 0..k {
                                child[i] = rows[i] | (mask >> i & 1) << k;
                            }
                            child[k] = mask;
                            out.push(canonical_key(k + 1, &child[..=k]));
                        }
                        out
                    })
                    .collect();
                for keys in produced {
                    set.extend(keys);
                }
            }
            let mut keys: Vec<u64> = set.into_iter().collect();
            keys.sort_unstable();
            levels.push(keys);
        }
        Census { levels }
    }

    pub fn max_n(&self) -> usize {
        self.levels.len()
    }

    pub fn keys(&self, n: usize) -> &[u64] {
        &self.levels[n - 1]
    }

    pub fn count(&self, n: usize) -> usize {
        self.keys(n).len()
    }

    pub fn graphs(&self, n: usize) -> impl Iterator<Item = Graph> + '_ {
        self.keys(n).iter().map(move |&k| graph_from_key(n, k))
    }
}
