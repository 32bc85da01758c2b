//! Walk the bundled fixture gallery: recompute every annotated value and
//! print the expected-vs-computed table.
//!
//!     cargo run --example gallery_tour

use kegraph::gallery::{evaluate_all, RowOutcome};
use kegraph::Budget;

fn main() {
    let rows = evaluate_all(&Budget::default()).expect("gallery fits the default budget");
    let mut mismatches = 0;
    for r in &rows {
        let mark = match r.outcome {
            RowOutcome::Match => "ok",
            RowOutcome::Mismatch => {
                mismatches += 1;
                "MISMATCH"
            }
            RowOutcome::FlaggedDiscrepancy => "flagged",
            RowOutcome::Info => "note",
        };
        println!(
            "[{mark:>8}] {:<12} {:<34} expected {:<24} computed {}",
            r.fixture, r.check, r.expected, r.computed
        );
    }
    println!("\n{} rows, {mismatches} mismatches", rows.len());
    assert_eq!(mismatches, 0);
}
