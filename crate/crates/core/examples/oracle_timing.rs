// SPDX-License-Identifier: Apache-2.0
//! Prints exhaustive oracle optima and node counts for small orders.

use std::time::Instant;

use ttpack_core::oracle::{max_p3_packing_undirected, max_packing, SearchBudget};
use ttpack_core::MotifKind;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let budget = SearchBudget::unlimited();
    for n in 3..=max_n {
        for kind in MotifKind::ALL {
            let start = Instant::now();
            let r = max_packing(kind, n, &budget);
            println!("{kind:>8} n={n}: optimum {} nodes {} ({:.2?})", r.optimum, r.nodes, start.elapsed());
        }
        let start = Instant::now();
        let r = max_p3_packing_undirected(n, &budget);
        println!("{:>8} n={n}: optimum {} nodes {} ({:.2?})", "any", r.optimum, r.nodes, start.elapsed());
    }
}
