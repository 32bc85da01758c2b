//! Run the full structural-fact suite on one graph and print the ledger.
//!
//!     cargo run --example theorem_check -- Dhc
//!
//! The argument is a graph6 string; without one, a generated KE graph is
//! used.

use kegraph::format::parse_graph6;
use kegraph::generators::random_ke;
use kegraph::theorems::{theorem_suite, SuiteConfig, TheoremStatus};

fn main() {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text).expect("valid graph6"),
        None => random_ke(6, 4, 0.35, 42).expect("parameters in range"),
    };
    let report = theorem_suite(&g, &SuiteConfig::default()).expect("suite in budget");
    println!("graph {} (n = {}, m = {})", report.graph6, g.n(), g.m());
    for (id, status) in &report.entries {
        let text = match status {
            TheoremStatus::Pass => "pass".to_string(),
            TheoremStatus::Fail(msg) => format!("FAIL: {msg}"),
            TheoremStatus::NotApplicable(why) => format!("n/a ({why})"),
        };
        println!("  {:<40} {text}", id.name());
    }
    assert!(report.is_clean(), "no fact may fail");
}
