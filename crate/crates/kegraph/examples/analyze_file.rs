//! Parse graphs from a file (graph6 lines, an edge list, or DIMACS — the
//! format is sniffed) and print one invariant report per graph.
//!
//!     cargo run --example analyze_file -- path/to/graphs.g6

use kegraph::analysis::ke_report;
use kegraph::format::parse_auto;
use kegraph::Budget;

fn main() {
    let path = std::env::args().nth(1);
    let text = match &path {
        Some(p) => std::fs::read_to_string(p).expect("input file readable"),
        // With no argument, demonstrate on a few inline graph6 lines:
        // C5, the complete bipartite K_{3,3}, and the Petersen graph.
        None => "Dhc\nEFz_\nIheA@GUAo\n".to_string(),
    };
    let budget = Budget::default();
    for g in parse_auto(&text).expect("input parses") {
        let r = ke_report(&g, &budget).expect("analysis in budget");
        println!(
            "{}: n={} m={} class={:?} alpha={} mu={} d={} xi={} epsilon={} rho_v={} rho_e={}",
            r.graph6, r.n, r.m, r.ke_class, r.alpha, r.mu, r.d, r.xi, r.epsilon, r.rho_v, r.rho_e
        );
    }
}
