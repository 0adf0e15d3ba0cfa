// SPDX-License-Identifier: Apache-2.0
//! Deterministic constructions of motif collections over `TT_n`.
//!
//! Each construction decomposes `TT_n` whenever `n mod 4` is 0 or 1. For the
//! other orders the arc count is odd, and exactly one arc is left unused,
//! which is still a maximum packing.
//!
//! Leftover arcs sharing a vertex are paired in ascending order of their
//! free endpoint: `(r1, r2), (r3, r4), ...`.

use crate::collection::MotifCollection;
use crate::tournament::Motif;

/// Mixed decomposition: consecutive diagonal chains, then row forks, then
/// colliders in the last column.
pub fn construct_mixed(n: usize) -> MotifCollection {
    let mut motifs = Vec::new();

    // Diagonal dots (1,2),(2,3) | (3,4),(4,5) | ...
    let chains = n.saturating_sub(1) / 2;
    for m in 1..=chains {
        let i = 2 * m - 1;
        motifs.push(Motif::chain(i, i + 1, i + 2).expect("increasing triple"));
    }

    // Rows: the diagonal dot is gone except for row n-1 when n-1 is odd.
    let mut leftovers = Vec::new();
    for row in 1..n {
        let first = if row == n - 1 && (n - 1) % 2 == 1 { row + 1 } else { row + 2 };
        let cols: Vec<usize> = (first..=n).collect();
        for pair in cols.chunks(2) {
            match *pair {
                [a, b] => motifs.push(Motif::fork(row, a, b).expect("row pair")),
                [last] => {
                    debug_assert_eq!(last, n);
                    leftovers.push(row);
                }
                _ => unreachable!(),
            }
        }
    }

    pair_into_colliders(&mut motifs, &leftovers, n);
    MotifCollection::new(n, motifs)
}

/// Chain-maximising construction. Every centre `t` in `2..n` carries
/// `min(t-1, n-t)` chains; the leftover arcs all end in `n` and are paired
/// into colliders.
pub fn construct_chain_max(n: usize) -> MotifCollection {
    let mut motifs = Vec::new();
    // ceil((n+1)/2): first vertex whose in-degree reaches its out-degree.
    let pivot = (n + 2) / 2;

    for t in (pivot..n).rev() {
        for i in 1..=n - t {
            motifs.push(Motif::chain(i, t, i + t).expect("i < t < i+t"));
        }
    }
    for t in (2..pivot).rev() {
        for i in 1..t {
            motifs.push(Motif::chain(i, t, n - i).expect("i < t < n-i"));
        }
    }

    let mut leftovers = Vec::new();
    if n >= 2 {
        leftovers.push(1);
        leftovers.extend(2..pivot);
    }
    pair_into_colliders(&mut motifs, &leftovers, n);
    MotifCollection::new(n, motifs)
}

/// Collider-maximising construction: pair each column bottom-up, then pair
/// the top dots `(1, j)`, `j` even, into forks at vertex 1.
pub fn construct_collider_max(n: usize) -> MotifCollection {
    let mut motifs = Vec::new();
    let mut leftovers = Vec::new();
    for col in 2..=n {
        let rows: Vec<usize> = (1..col).rev().collect();
        for pair in rows.chunks(2) {
            match *pair {
                [lower, upper] => motifs.push(Motif::collider(upper, lower, col).expect("column pair")),
                [top] => {
                    debug_assert_eq!(top, 1);
                    leftovers.push(col);
                }
                _ => unreachable!(),
            }
        }
    }
    for pair in leftovers.chunks(2) {
        if let [a, b] = *pair {
            motifs.push(Motif::fork(1, a, b).expect("heads above 1"));
        }
    }
    MotifCollection::new(n, motifs)
}

/// Fork-maximising construction: pair each row left-to-right, then pair the
/// rightmost dots `(i, n)`, `n - i` odd, into colliders at `n`.
pub fn construct_fork_max(n: usize) -> MotifCollection {
    let mut motifs = Vec::new();
    let mut leftovers = Vec::new();
    for row in 1..n {
        let cols: Vec<usize> = (row + 1..=n).collect();
        for pair in cols.chunks(2) {
            match *pair {
                [a, b] => motifs.push(Motif::fork(row, a, b).expect("row pair")),
                [last] => {
                    debug_assert_eq!(last, n);
                    leftovers.push(row);
                }
                _ => unreachable!(),
            }
        }
    }
    pair_into_colliders(&mut motifs, &leftovers, n);
    MotifCollection::new(n, motifs)
}

/// Pairs arcs `(tail, head)` for ascending `tails` consecutively; an odd
/// leftover is dropped (it stays unused).
fn pair_into_colliders(motifs: &mut Vec<Motif>, tails: &[usize], head: usize) {
    for pair in tails.chunks(2) {
        if let [a, b] = *pair {
            motifs.push(Motif::collider(a, b, head).expect("tails below head"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection::MotifCounts;
    use crate::tournament::{Arc, MotifKind};

    fn counts(c: &MotifCollection) -> (usize, usize, usize) {
        let MotifCounts { chains, colliders, forks } = c.counts();
        (chains, colliders, forks)
    }

    #[test]
    fn mixed_small_orders() {
        let c = construct_mixed(8);
        assert_eq!(counts(&c), (3, 2, 9));
        assert!(c.covers_all_arcs());

        let c = construct_mixed(4);
        assert_eq!(counts(&c), (1, 1, 1));
        assert!(c.covers_all_arcs());

        let c = construct_mixed(1);
        assert!(c.is_empty() && c.covers_all_arcs());
    }

    #[test]
    fn mixed_non_admissible_leaves_one_arc() {
        let c = construct_mixed(6);
        assert_eq!(counts(&c), (2, 1, 4));
        assert_eq!(c.unused_arcs(), &[Arc::new(5, 6)]);
    }

    #[test]
    fn chain_max_tt6() {
        let c = construct_chain_max(6);
        assert_eq!(counts(&c), (6, 1, 0));
        assert_eq!(c.unused_arcs().len(), 1);
    }

    #[test]
    fn chain_max_emission_order() {
        let c = construct_chain_max(8);
        assert_eq!(c.motifs()[0], Motif::chain(1, 7, 8).unwrap());
        assert_eq!(c.motifs()[11], Motif::chain(1, 2, 7).unwrap());
        assert_eq!(c.motifs()[12], Motif::collider(1, 2, 8).unwrap());
        assert_eq!(c.motifs()[13], Motif::collider(3, 4, 8).unwrap());
    }

    #[test]
    fn collider_max_tt3() {
        let c = construct_collider_max(3);
        assert_eq!(c.motifs(), &[Motif::collider(1, 2, 3).unwrap()]);
        assert_eq!(c.unused_arcs(), &[Arc::new(1, 2)]);
    }

    #[test]
    fn fork_max_tt2() {
        let c = construct_fork_max(2);
        assert!(c.is_empty());
        assert_eq!(c.unused_arcs(), &[Arc::new(1, 2)]);
    }

    #[test]
    fn chain_max_saturates_every_centre() {
        for n in 1..=60 {
            let c = construct_chain_max(n);
            let mut per_centre = vec![0usize; n + 1];
            for m in c.motifs().iter().filter(|m| m.kind == MotifKind::Chain) {
                per_centre[m.center()] += 1;
            }
            for (t, &count) in per_centre.iter().enumerate().skip(1) {
                assert_eq!(count, (t - 1).min(n - t), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn constructions_are_deterministic() {
        for n in [5, 12, 33] {
            for f in [construct_mixed, construct_chain_max, construct_collider_max, construct_fork_max] {
                assert_eq!(f(n), f(n));
            }
        }
    }
}
