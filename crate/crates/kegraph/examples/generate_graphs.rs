//! Emit members of every built-in family as graph6 lines, the same wire
//! format the `kegraph gen` subcommand speaks.
//!
//!     cargo run --example generate_graphs

use kegraph::format::encode_graph6;
use kegraph::generators::{complete, complete_minus_edge, cycle, gpq, hk, path, random_ke, star};

fn main() {
    let named = [
        ("cycle 5", cycle(5).unwrap()),
        ("path 4", path(4).unwrap()),
        ("complete 4", complete(4).unwrap()),
        ("complete minus edge 4", complete_minus_edge(4).unwrap()),
        ("star 3", star(3).unwrap()),
        ("gpq 4 2", gpq(4, 2).unwrap()),
        ("hk 2", hk(2).unwrap()),
    ];
    for (name, g) in named {
        println!("{name:<24} {}", encode_graph6(&g));
    }
    for seed in 0..3 {
        let g = random_ke(5, 3, 0.4, seed).unwrap();
        println!("{:<24} {}", format!("ke 5 3 0.4 seed {seed}"), encode_graph6(&g));
    }
}
