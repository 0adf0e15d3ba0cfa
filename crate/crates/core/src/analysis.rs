// SPDX-License-Identifier: Apache-2.0
//! Closed-form counts for `TT_n` and the collection verifier.
//!
//! All arithmetic is on integers. Every division by 2 or 4 below is exact on
//! its domain, which the `exact_div` helper asserts.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::collection::{MotifCollection, MotifCounts};
use crate::error::{Error, Result};
use crate::tournament::{arc_count, Arc, Motif, MotifKind, TransitiveTournament};

fn exact_div(num: usize, den: usize) -> usize {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

/// `n mod 4` is 0 or 1, i.e. `n(n-1)/4` is an integer.
pub fn is_admissible(n: usize) -> bool {
    matches!(n % 4, 0 | 1)
}

/// Number of motifs in a decomposition, `n(n-1)/4`, when that is integral.
pub fn decomposition_size(n: usize) -> Option<usize> {
    is_admissible(n).then(|| exact_div(n * n.saturating_sub(1), 4))
}

/// Maximum number of arc-disjoint copies of `kind` in `TT_n`. The value does
/// not depend on the kind.
pub fn packing_number(_kind: MotifKind, n: usize) -> usize {
    if n.is_multiple_of(2) {
        exact_div(n * n.saturating_sub(2), 4)
    } else {
        exact_div((n - 1) * (n - 1), 4)
    }
}

/// Motif counts of the mixed decomposition; defined for admissible `n` only.
pub fn mixed_counts(n: usize) -> Result<MotifCounts> {
    let total = match decomposition_size(n) {
        Some(total) if n >= 1 => total,
        _ => return Err(Error::NotAdmissible(n)),
    };
    let chains = (n - 1) / 2;
    let colliders = n / 4;
    Ok(MotifCounts {
        chains,
        colliders,
        forks: total - chains - colliders,
    })
}

/// Largest number of `kind` motifs that can share a centre with the given
/// in- and out-degree.
pub fn capacity_from_degrees(kind: MotifKind, in_degree: usize, out_degree: usize) -> usize {
    match kind {
        MotifKind::Chain => in_degree.min(out_degree),
        MotifKind::Collider => in_degree / 2,
        MotifKind::Fork => out_degree / 2,
    }
}

/// [`capacity_from_degrees`] at vertex `t` of the full `TT_n`.
pub fn center_capacity(kind: MotifKind, n: usize, t: usize) -> usize {
    debug_assert!((1..=n).contains(&t), "vertex {t} outside 1..={n}");
    capacity_from_degrees(kind, t.saturating_sub(1), n.saturating_sub(t))
}

pub fn capacity_sum(kind: MotifKind, n: usize) -> usize {
    (1..=n).map(|t| center_capacity(kind, n, t)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingNumberTable {
    pub n: usize,
    pub per_kind: Vec<(MotifKind, usize)>,
    pub total_motif_slots: Option<usize>,
}

impl PackingNumberTable {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            per_kind: MotifKind::ALL.iter().map(|&k| (k, packing_number(k, n))).collect(),
            total_motif_slots: decomposition_size(n),
        }
    }

    pub fn get(&self, kind: MotifKind) -> usize {
        self.per_kind
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, v)| *v)
            .expect("all kinds present")
    }
}

/// One problem found by [`verify`]. Motif indices are 0-based positions in
/// the collection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    /// The same arc appears in two motifs, or twice in one.
    DuplicateArc { arc: Arc, first: usize, second: usize },
    /// A motif (or the declared unused list, `motif: None`) names a vertex
    /// pair that is not an arc of `TT_n`.
    ForeignArc { motif: Option<usize>, arc: Arc },
    /// The stored kind and triple do not re-derive to the same canonical motif.
    Misclassified { motif: usize, stored: Motif, derived: Option<Motif> },
    /// The declared unused arcs disagree with what the motifs cover.
    CoverageGap { arc: Arc, declared_unused: bool, covered: bool },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DuplicateArc { arc, first, second } => {
                write!(f, "duplicate arc {arc} in motifs #{first} and #{second}")
            }
            Violation::ForeignArc { motif: Some(m), arc } => {
                write!(f, "foreign arc {arc} in motif #{m}")
            }
            Violation::ForeignArc { motif: None, arc } => {
                write!(f, "foreign arc {arc} in the unused-arc list")
            }
            Violation::Misclassified { motif, stored, derived } => match derived {
                Some(d) => write!(
                    f,
                    "misclassified motif #{motif}: stored {} {:?}, arcs form {} {:?}",
                    stored.kind, stored.vertices, d.kind, d.vertices
                ),
                None => write!(
                    f,
                    "misclassified motif #{motif}: {} {:?} is not in canonical form",
                    stored.kind, stored.vertices
                ),
            },
            Violation::CoverageGap { arc, declared_unused, covered } => match (declared_unused, covered) {
                (true, true) => write!(f, "coverage gap: arc {arc} is declared unused but covered"),
                (false, false) => write!(f, "coverage gap: arc {arc} is neither covered nor declared unused"),
                _ => write!(f, "coverage gap: arc {arc} is declared unused twice"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub is_decomposition: bool,
    pub counts: MotifCounts,
    pub unused_arcs: Vec<Arc>,
    pub violations: Vec<Violation>,
}

/// Checks a collection against the packing and decomposition definitions.
///
/// Motif kinds are re-derived from their arcs, never trusted. Problems are
/// collected, not raised.
pub fn verify(collection: &MotifCollection) -> VerificationReport {
    let n = collection.order();
    let mut violations = Vec::new();
    let mut owner: HashMap<Arc, usize> = HashMap::new();
    // Real arcs named by rejected motifs; kept out of the coverage check so
    // one bad motif is reported once.
    let mut claimed: BTreeSet<Arc> = BTreeSet::new();

    let tt = TransitiveTournament::new(n).ok();
    let in_tt = |arc: Arc| tt.is_some_and(|t| t.contains(arc));

    for (idx, motif) in collection.motifs().iter().enumerate() {
        let arcs = motif.arcs();

        let out_of_range: Vec<Arc> = arcs
            .iter()
            .copied()
            .filter(|a| a.tail == 0 || a.head == 0 || a.tail > n || a.head > n)
            .collect();
        if !out_of_range.is_empty() {
            claimed.extend(arcs.iter().copied().filter(|&a| in_tt(a)));
            violations.extend(out_of_range.into_iter().map(|arc| Violation::ForeignArc { motif: Some(idx), arc }));
            continue;
        }

        // Vertices are in range; a reversed pair means the triple is not a
        // motif of the stated kind in this orientation.
        let derived = match tt {
            Some(t) if arcs.iter().all(|&a| in_tt(a)) && arcs[0] != arcs[1] => {
                t.classify_pair(arcs[0], arcs[1]).ok().flatten()
            }
            _ => None,
        };
        if derived != Some(*motif) {
            violations.push(Violation::Misclassified { motif: idx, stored: *motif, derived });
            claimed.extend(arcs.iter().copied().filter(|&a| in_tt(a)));
            continue;
        }

        for arc in arcs {
            if let Some(&first) = owner.get(&arc) {
                violations.push(Violation::DuplicateArc { arc, first, second: idx });
            } else {
                owner.insert(arc, idx);
            }
        }
    }

    let mut declared = BTreeSet::new();
    for &arc in collection.unused_arcs() {
        if !in_tt(arc) {
            violations.push(Violation::ForeignArc { motif: None, arc });
        } else if !declared.insert(arc) {
            violations.push(Violation::CoverageGap { arc, declared_unused: true, covered: false });
        }
    }

    let mut uncovered = Vec::new();
    if let Some(t) = tt {
        for arc in t.arcs() {
            let covered = owner.contains_key(&arc);
            let declared_unused = declared.contains(&arc);
            if !covered {
                uncovered.push(arc);
            }
            if covered == declared_unused && !(claimed.contains(&arc) && !covered) {
                violations.push(Violation::CoverageGap { arc, declared_unused, covered });
            }
        }
    }

    let valid = violations.is_empty();
    VerificationReport {
        valid,
        is_decomposition: valid && uncovered.is_empty(),
        counts: collection.counts(),
        unused_arcs: uncovered,
        violations,
    }
}

/// Total arcs covered by a valid collection plus its unused arcs equals
/// `n(n-1)/2`.
pub fn arc_balance_holds(collection: &MotifCollection) -> bool {
    2 * collection.len() + collection.unused_arcs().len() == arc_count(collection.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn admissibility() {
        assert!(is_admissible(8));
        assert!(is_admissible(9));
        assert!(!is_admissible(6));
        assert!(!is_admissible(7));
        assert!(is_admissible(1));
    }

    #[test]
    fn packing_numbers() {
        assert_eq!(packing_number(MotifKind::Chain, 8), 12);
        assert_eq!(packing_number(MotifKind::Collider, 9), 16);
        assert_eq!(packing_number(MotifKind::Fork, 5), 4);
        assert_eq!(packing_number(MotifKind::Fork, 1), 0);
        assert_eq!(packing_number(MotifKind::Fork, 2), 0);
        assert_eq!(packing_number(MotifKind::Chain, 13), 36);
    }

    #[test]
    fn mixed_counts_values() {
        assert_eq!(mixed_counts(8).unwrap(), MotifCounts { chains: 3, colliders: 2, forks: 9 });
        assert_eq!(mixed_counts(4).unwrap(), MotifCounts { chains: 1, colliders: 1, forks: 1 });
        assert_eq!(mixed_counts(5).unwrap(), MotifCounts { chains: 2, colliders: 1, forks: 2 });
        assert_eq!(mixed_counts(13).unwrap(), MotifCounts { chains: 6, colliders: 3, forks: 30 });
        assert_eq!(mixed_counts(6), Err(Error::NotAdmissible(6)));
    }

    #[test]
    fn center_capacities() {
        assert_eq!(center_capacity(MotifKind::Chain, 8, 1), 0);
        assert_eq!(center_capacity(MotifKind::Collider, 8, 8), 3);
        assert_eq!(center_capacity(MotifKind::Fork, 9, 1), 4);
        assert_eq!(capacity_sum(MotifKind::Collider, 8), 12);
        assert_eq!(capacity_sum(MotifKind::Fork, 9), 16);
        assert_eq!(capacity_sum(MotifKind::Chain, 6), 1 + 2 + 2 + 1);
    }

    #[test]
    fn capacity_sum_matches_packing_number() {
        for n in 1..=500 {
            for kind in MotifKind::ALL {
                assert_eq!(capacity_sum(kind, n), packing_number(kind, n), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn table_is_kind_independent() {
        let t = PackingNumberTable::new(8);
        assert_eq!(t.total_motif_slots, Some(14));
        assert!(t.per_kind.iter().all(|&(_, v)| v == 12));
        assert_eq!(PackingNumberTable::new(6).total_motif_slots, None);
    }

    #[test]
    fn verify_fork_max_tt8() {
        let r = verify(&construct_fork_max(8));
        assert!(r.valid && r.is_decomposition);
        assert_eq!(r.counts, MotifCounts { chains: 0, colliders: 2, forks: 12 });
    }

    #[test]
    fn verify_chain_max_tt6_is_a_packing() {
        let r = verify(&construct_chain_max(6));
        assert!(r.valid);
        assert!(!r.is_decomposition);
        assert_eq!(r.unused_arcs.len(), 1);
    }

    #[test]
    fn verify_flags_duplicate() {
        let m = Motif::chain(1, 2, 3).unwrap();
        let r = verify(&MotifCollection::new(4, vec![m, m]));
        assert!(!r.valid);
        assert!(r.violations.contains(&Violation::DuplicateArc { arc: Arc::new(1, 2), first: 0, second: 1 }));
        assert_eq!(r.violations[0].to_string(), "duplicate arc (1,2) in motifs #0 and #1");
    }

    #[test]
    fn verify_flags_non_canonical_fork() {
        let r = verify(&MotifCollection::new(3, vec![Motif::raw(MotifKind::Fork, [2, 1, 3])]));
        assert!(!r.valid);
        assert!(matches!(r.violations[0], Violation::Misclassified { motif: 0, derived: None, .. }));
    }

    #[test]
    fn verify_flags_mislabelled_kind() {
        // arcs (1,3),(2,3) form a collider, not a fork with heads 2,3
        let r = verify(&MotifCollection::new(3, vec![Motif::raw(MotifKind::Collider, [2, 1, 3])]));
        assert!(matches!(
            r.violations[0],
            Violation::Misclassified { derived: Some(d), .. } if d == Motif::collider(1, 2, 3).unwrap()
        ));
    }

    #[test]
    fn verify_flags_foreign_vertices() {
        let r = verify(&MotifCollection::new(3, vec![Motif::raw(MotifKind::Chain, [1, 2, 4])]));
        assert_eq!(r.violations, vec![Violation::ForeignArc { motif: Some(0), arc: Arc::new(2, 4) }]);
    }

    #[test]
    fn verify_flags_stale_unused_list() {
        let c = construct_fork_max(5);
        let stale = MotifCollection::from_parts(5, c.motifs()[1..].to_vec(), c.unused_arcs().to_vec());
        let r = verify(&stale);
        assert!(!r.valid);
        assert!(r.violations.iter().all(|v| matches!(v, Violation::CoverageGap { .. })));
        assert_eq!(r.violations.len(), 2);
    }

    #[test]
    fn empty_collection_of_tt2_is_a_packing() {
        let r = verify(&construct_mixed(2));
        assert!(r.valid && !r.is_decomposition);
        assert!(arc_balance_holds(&construct_mixed(2)));
    }
}
