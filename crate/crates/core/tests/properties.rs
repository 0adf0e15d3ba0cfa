// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use ttpack_core::analysis::{arc_balance_holds, decomposition_size};
use ttpack_core::*;

fn strategy() -> impl proptest::strategy::Strategy<Value = ttpack_core::Strategy> {
    prop::sample::select(ttpack_core::Strategy::ALL.to_vec())
}

proptest! {
    #[test]
    fn constructions_verify(n in 1usize..=200, s in strategy()) {
        let c = s.construct(n);
        let r = verify(&c);
        prop_assert!(r.valid, "{:?}", r.violations);
        prop_assert!(arc_balance_holds(&c));
        prop_assert_eq!(r.is_decomposition, is_admissible(n));
        if !is_admissible(n) {
            prop_assert_eq!(c.unused_arcs().len(), 1);
        }
        if let Some(kind) = s.dominant_kind() {
            prop_assert_eq!(c.count_of(kind), packing_number(kind, n));
        }
    }

    #[test]
    fn pure_constructions_avoid_the_excluded_kind(n in 1usize..=120) {
        prop_assert_eq!(construct_chain_max(n).count_of(MotifKind::Fork), 0);
        prop_assert_eq!(construct_collider_max(n).count_of(MotifKind::Chain), 0);
        prop_assert_eq!(construct_fork_max(n).count_of(MotifKind::Chain), 0);
    }

    #[test]
    fn canonical_round_trip(a in 1usize..40, b in 1usize..40, c in 1usize..40, k in 0usize..3) {
        let mut v = [a, b, c];
        v.sort();
        prop_assume!(v[0] < v[1] && v[1] < v[2]);
        let m = Motif::raw(MotifKind::ALL[k], v);
        let tt = TransitiveTournament::new(40).unwrap();
        let [x, y] = m.arcs();
        prop_assert_eq!(tt.classify_pair(x, y).unwrap(), Some(m));
        prop_assert_eq!(tt.classify_pair(y, x).unwrap(), Some(m));
    }

    #[test]
    fn mixed_counts_sum_to_decomposition_size(n in 1usize..=500) {
        prop_assume!(is_admissible(n));
        let c = mixed_counts(n).unwrap();
        prop_assert_eq!(Some(c.total()), decomposition_size(n));
    }

    #[test]
    fn pure_packing_never_decomposes(n in 2usize..=500) {
        prop_assume!(is_admissible(n));
        for kind in MotifKind::ALL {
            prop_assert!(packing_number(kind, n) < decomposition_size(n).unwrap());
        }
    }
}
