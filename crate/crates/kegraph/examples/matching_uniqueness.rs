//! Perfect-matching uniqueness between two vertex sets decides when the
//! edge-heredity bound is tight: rho_e = m - xi + epsilon exactly when the
//! pocket between core - ker and N(core) - N(ker) has a unique perfect
//! matching.
//!
//!     cargo run --example matching_uniqueness

use kegraph::analysis::{pocket_matching_status, rho_e, rho_e_bound};
use kegraph::gallery;
use kegraph::matching::PerfectMatchingStatus;
use kegraph::Budget;

fn main() {
    let budget = Budget::default();
    for name in ["fig33-g3", "fig45", "fig88-g1"] {
        let g = gallery::entry(name).expect("bundled fixture").graph;
        let re = rho_e(&g, &budget).expect("in budget");
        let bound = rho_e_bound(&g, &budget).expect("fixture is KE");
        let status = pocket_matching_status(&g, &budget).expect("in budget");
        let unique = matches!(status, PerfectMatchingStatus::UniquePerfect(_));
        println!(
            "{name}: rho_e = {re}, bound = {bound}, pocket matching unique = {unique}"
        );
        assert_eq!(re == bound, unique);
    }
}
