//! Seeded sweep of random König-Egerváry graphs: checks the vertex-heredity
//! identity rho_v = n - xi + epsilon and the edge-heredity bound
//! rho_e >= m - xi + epsilon on every one.
//!
//!     cargo run --release --example random_ke_sweep -- 2000

use kegraph::analysis::{rho_e, rho_v};
use kegraph::critical::ker;
use kegraph::generators::random_ke;
use kegraph::independence::core;
use kegraph::Budget;

fn main() {
    let count: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(500);
    let budget = Budget::default();
    let mut bound_tight = 0u64;
    for seed in 0..count {
        let s = 1 + (seed % 8) as usize;
        let a = 1 + (seed % s as u64) as usize;
        let p = (seed % 11) as f64 / 10.0;
        let g = random_ke(s, a, p, seed).expect("parameters in range");
        let xi = core(&g, &budget).expect("in budget").len();
        let eps = ker(&g).len();
        let rv = rho_v(&g, &budget).expect("in budget");
        let re = rho_e(&g, &budget).expect("in budget");
        assert_eq!(rv, g.n() - xi + eps, "identity failed on seed {seed}");
        let bound = g.m() as i64 - xi as i64 + eps as i64;
        assert!(re as i64 >= bound, "bound failed on seed {seed}");
        if re as i64 == bound {
            bound_tight += 1;
        }
    }
    println!("{count} random KE graphs: identity exact on all, bound tight on {bound_tight}");
}
