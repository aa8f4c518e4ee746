//! Counts tilting sets of O(A^d_p) and checks the θ route agrees on all of them.

use std::collections::BTreeSet;

use k0cat::higher::{enumerate_tilting_sets, k0_higher_ar, k0_higher_theta, HigherParams};

fn main() {
    for (p, d) in [(1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        let h = HigherParams::new(p, d).unwrap();
        let sets = enumerate_tilting_sets(h);
        let groups: BTreeSet<String> = sets.iter().map(|t| k0_higher_theta(t).unwrap().to_string()).collect();
        let groups: Vec<String> = groups.into_iter().collect();
        println!(
            "{h}: {} indecomposables, {} tilting sets, theta {}, ar {}",
            h.enumerate_indecs().len(),
            sets.len(),
            groups.join(" | "),
            k0_higher_ar(&h)
        );
    }
}
