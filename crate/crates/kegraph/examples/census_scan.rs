//! Enumerate every graph up to a given order (one per isomorphism class)
//! and tabulate the heredity identity over the König-Egerváry members.
//!
//!     cargo run --release --example census_scan -- 7

use kegraph::analysis::{is_ke, rho_v};
use kegraph::census::Census;
use kegraph::critical::ker;
use kegraph::independence::core;
use kegraph::Budget;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let budget = Budget::default();
    let census = Census::up_to(max_n);
    for n in 1..=max_n {
        let mut ke = 0u64;
        for g in census.graphs(n) {
            if !is_ke(&g, &budget).expect("in budget") {
                continue;
            }
            ke += 1;
            let xi = core(&g, &budget).expect("in budget").len();
            let eps = ker(&g).len();
            assert_eq!(
                rho_v(&g, &budget).expect("in budget"),
                g.n() - xi + eps,
                "identity failed on an {n}-vertex graph"
            );
        }
        println!(
            "n = {n}: {} graphs, {ke} König-Egerváry, identity exact on all",
            census.count(n)
        );
    }
}
