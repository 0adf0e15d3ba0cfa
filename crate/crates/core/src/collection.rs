// SPDX-License-Identifier: Apache-2.0
//! Motif collections: packings and decompositions of `TT_n`.

use std::collections::HashSet;

use serde::Serialize;

use crate::tournament::{Arc, Motif, MotifKind, TransitiveTournament};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MotifCounts {
    pub chains: usize,
    pub colliders: usize,
    pub forks: usize,
}

impl MotifCounts {
    pub fn total(&self) -> usize {
        self.chains + self.colliders + self.forks
    }

    pub fn get(&self, kind: MotifKind) -> usize {
        match kind {
            MotifKind::Chain => self.chains,
            MotifKind::Collider => self.colliders,
            MotifKind::Fork => self.forks,
        }
    }

    pub fn tally<'a>(motifs: impl IntoIterator<Item = &'a Motif>) -> Self {
        let mut counts = Self::default();
        for m in motifs {
            match m.kind {
                MotifKind::Chain => counts.chains += 1,
                MotifKind::Collider => counts.colliders += 1,
                MotifKind::Fork => counts.forks += 1,
            }
        }
        counts
    }
}

/// An ordered list of motifs over one `TT_n` together with the arcs they
/// leave uncovered.
///
/// [`MotifCollection::new`] derives `unused_arcs`; [`MotifCollection::from_parts`]
/// stores whatever it is given so that externally supplied collections can be
/// checked by [`crate::analysis::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotifCollection {
    n: usize,
    motifs: Vec<Motif>,
    unused_arcs: Vec<Arc>,
}

impl MotifCollection {
    pub fn new(n: usize, motifs: Vec<Motif>) -> Self {
        let unused_arcs = uncovered_arcs(n, &motifs);
        Self { n, motifs, unused_arcs }
    }

    pub fn from_parts(n: usize, motifs: Vec<Motif>, unused_arcs: Vec<Arc>) -> Self {
        Self { n, motifs, unused_arcs }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn motifs(&self) -> &[Motif] {
        &self.motifs
    }

    pub fn unused_arcs(&self) -> &[Arc] {
        &self.unused_arcs
    }

    pub fn len(&self) -> usize {
        self.motifs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.motifs.is_empty()
    }

    pub fn counts(&self) -> MotifCounts {
        MotifCounts::tally(&self.motifs)
    }

    pub fn count_of(&self, kind: MotifKind) -> usize {
        self.motifs.iter().filter(|m| m.kind == kind).count()
    }

    /// True when no arc is left over. Only meaningful for collections that
    /// pass verification.
    pub fn covers_all_arcs(&self) -> bool {
        self.unused_arcs.is_empty()
    }

    pub fn into_motifs(self) -> Vec<Motif> {
        self.motifs
    }
}

/// Arcs of `TT_n` (lexicographic order) not named by any motif.
fn uncovered_arcs(n: usize, motifs: &[Motif]) -> Vec<Arc> {
    let used: HashSet<Arc> = motifs.iter().flat_map(|m| m.arcs()).collect();
    match TransitiveTournament::new(n) {
        Ok(tt) => tt.arcs().filter(|a| !used.contains(a)).collect(),
        Err(_) => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unused_arcs_are_derived() {
        let c = MotifCollection::new(3, vec![Motif::collider(1, 2, 3).unwrap()]);
        assert_eq!(c.unused_arcs(), &[Arc::new(1, 2)]);
        assert_eq!(c.counts(), MotifCounts { chains: 0, colliders: 1, forks: 0 });
        assert!(!c.covers_all_arcs());
    }

    #[test]
    fn empty_orders() {
        assert!(MotifCollection::new(0, vec![]).covers_all_arcs());
        assert!(MotifCollection::new(1, vec![]).covers_all_arcs());
        assert_eq!(MotifCollection::new(2, vec![]).unused_arcs().len(), 1);
    }
}
