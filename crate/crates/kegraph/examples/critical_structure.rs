//! Tour of the critical-set machinery on one fixture: critical difference
//! by the polynomial route and by enumeration, the kernel, a greedy critical
//! witness, per-vertex eligibility, and the decomposition along a critical
//! independent set.
//!
//!     cargo run --example critical_structure

use kegraph::critical::{
    critical_difference, critical_difference_bruteforce, find_critical_independent_set,
    in_some_critical_independent_set, ker,
};
use kegraph::analysis::critical_decomposition;
use kegraph::gallery;
use kegraph::Budget;

fn main() {
    let entry = gallery::entry("fig24").expect("bundled fixture");
    let g = &entry.graph;
    let budget = Budget::default();

    let d = critical_difference(g);
    let (d_brute, witness) = critical_difference_bruteforce(g, &budget).expect("in budget");
    println!("d(G) = {d} (polynomial) = {d_brute} (enumeration), least witness {witness}");

    let kernel = ker(g);
    let names = |set: &kegraph::VertexSet| {
        set.iter()
            .map(|v| g.label(v).unwrap_or("?").to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    println!("ker(G) = {{{}}}", names(&kernel));

    let grown = find_critical_independent_set(g);
    println!("greedy critical witness = {{{}}} (size {})", names(&grown), grown.len());

    for label in ["u", "v"] {
        let vertex = g.vertex_by_label(label).unwrap();
        println!(
            "vertex {label} belongs to some critical independent set: {}",
            in_some_critical_independent_set(g, vertex)
        );
    }

    let dec = critical_decomposition(g, &grown, &budget).expect("witness is critical");
    println!(
        "split along the witness: inside n={} (KE: {}), outside n={}, checks all pass: {}",
        dec.inside.n(),
        dec.checks.inside_is_ke,
        dec.outside.n(),
        dec.checks.all_pass()
    );
}
