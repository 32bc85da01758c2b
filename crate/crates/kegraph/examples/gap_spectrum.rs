//! The spectrum of m - rho_e over the clique-over-independent family: for
//! G_p^q the gap equals p - q, realizing every value except xi - epsilon - 1,
//! while the odd-cycle-plus-pendant family pins the gap at exactly one.
//!
//!     cargo run --release --example gap_spectrum

use kegraph::analysis::{rho_e, rho_e_bound};
use kegraph::generators::{gpq, hk};
use kegraph::Budget;

fn main() {
    let budget = Budget::default();
    println!("{:>3} {:>3} {:>4} {:>6} {:>6} {:>10}", "p", "q", "m", "rho_e", "bound", "gap m-rho_e");
    for p in 2..=6usize {
        for q in 2..=p {
            let g = gpq(p, q).expect("p >= q >= 2");
            let re = rho_e(&g, &budget).expect("in budget");
            let bound = rho_e_bound(&g, &budget).expect("KE by construction");
            println!(
                "{p:>3} {q:>3} {:>4} {re:>6} {bound:>6} {:>10}",
                g.m(),
                g.m() - re
            );
            assert_eq!(g.m() - re, p - q);
        }
    }
    println!();
    for k in 1..=4usize {
        let g = hk(k).expect("k >= 1");
        let re = rho_e(&g, &budget).expect("in budget");
        println!("odd cycle C{} plus a pendant: m = {}, rho_e = {re} (gap 1)", 2 * k + 1, g.m());
        assert_eq!(g.m() - re, 1);
    }
}
