// SPDX-License-Identifier: Apache-2.0
//! Exact maximum packings of small `TT_n` by branch and bound.
//!
//! The solver knows nothing about the closed forms in [`crate::analysis`];
//! it only borrows the per-centre capacity rule and applies it to the
//! residual instance at each node, which is what makes `n = 8` tractable.
//!
//! Candidates are enumerated in lexicographic canonical order. Each node
//! branches on the first remaining candidate whose arcs are both free:
//! include it, then exclude it. A node is cut when
//! `current + bound(residual) <= best`.
//!
//! `TT_n` has a trivial automorphism group, so no symmetry breaking is
//! applied.

use std::time::{Duration, Instant};

use crate::analysis::{capacity_from_degrees, is_admissible};
use crate::collection::MotifCollection;
use crate::error::{Error, Result};
use crate::tournament::{Motif, MotifKind, TransitiveTournament};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// `None` is unlimited.
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self { max_nodes: None, max_time: None }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self { max_nodes: Some(max_nodes), max_time: None }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::nodes(DEFAULT_MAX_NODES)
    }
}

/// Which motifs the search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Pure(MotifKind),
    /// Any connected two-arc motif: the orientation-blind `P_3` packing.
    AnyMotif,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Size of the best packing found. A lower bound unless `exhausted`.
    pub optimum: usize,
    pub witness: MotifCollection,
    pub exhausted: bool,
    pub nodes: u64,
}

pub fn max_packing(kind: MotifKind, n: usize, budget: &SearchBudget) -> OracleResult {
    solve(Target::Pure(kind), n, budget)
}

pub fn max_p3_packing_undirected(n: usize, budget: &SearchBudget) -> OracleResult {
    solve(Target::AnyMotif, n, budget)
}

/// Whether `TT_n` splits entirely into copies of `kind`. Requires
/// admissible `n`; returns [`Error::Inconclusive`] if the budget runs out
/// before the answer is certain.
pub fn pure_decomposition_exists(kind: MotifKind, n: usize, budget: &SearchBudget) -> Result<bool> {
    if n == 0 || !is_admissible(n) {
        return Err(Error::NotAdmissible(n));
    }
    let target = n * (n - 1) / 4;
    let result = max_packing(kind, n, budget);
    if result.optimum == target {
        Ok(true)
    } else if result.exhausted {
        Ok(false)
    } else {
        Err(Error::Inconclusive { lower_bound: result.optimum })
    }
}

pub fn solve(target: Target, n: usize, budget: &SearchBudget) -> OracleResult {
    let mut search = Search::new(target, n, *budget);
    let mut current = Vec::new();
    if !search.candidates.is_empty() {
        search.descend(0, &mut current);
    }
    let motifs: Vec<Motif> = search.best.iter().map(|&c| search.candidates[c].motif).collect();
    OracleResult {
        optimum: motifs.len(),
        witness: MotifCollection::new(n, motifs),
        exhausted: !search.aborted,
        nodes: search.nodes,
    }
}

struct Candidate {
    motif: Motif,
    center: usize,
    arcs: [usize; 2],
    /// For each arc: does it enter the centre (true) or leave it (false)?
    enters_center: [bool; 2],
}

struct Search {
    target: Target,
    n: usize,
    candidates: Vec<Candidate>,
    used: Vec<bool>,
    best: Vec<usize>,
    nodes: u64,
    aborted: bool,
    budget: SearchBudget,
    started: Instant,
    // scratch for the bound
    seen: Vec<u32>,
    epoch: u32,
    in_live: Vec<usize>,
    out_live: Vec<usize>,
}

impl Search {
    fn new(target: Target, n: usize, budget: SearchBudget) -> Self {
        let candidates = enumerate_candidates(target, n);
        let arc_count = n * n.saturating_sub(1) / 2;
        Self {
            target,
            n,
            candidates,
            used: vec![false; arc_count],
            best: Vec::new(),
            nodes: 0,
            aborted: false,
            budget,
            started: Instant::now(),
            seen: vec![0; 3 * arc_count],
            epoch: 0,
            in_live: vec![0; n + 1],
            out_live: vec![0; n + 1],
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes >= cap {
                return true;
            }
        }
        if let Some(limit) = self.budget.max_time {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn is_free(&self, c: &Candidate) -> bool {
        !self.used[c.arcs[0]] && !self.used[c.arcs[1]]
    }

    fn descend(&mut self, mut pos: usize, current: &mut Vec<usize>) {
        if self.aborted {
            return;
        }
        if self.out_of_budget() {
            self.aborted = true;
            return;
        }
        self.nodes += 1;

        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        while pos < self.candidates.len() && !self.is_free(&self.candidates[pos]) {
            pos += 1;
        }
        if pos == self.candidates.len() {
            return;
        }
        if current.len() + self.bound(pos) <= self.best.len() {
            return;
        }

        let [a, b] = self.candidates[pos].arcs;
        self.used[a] = true;
        self.used[b] = true;
        current.push(pos);
        self.descend(pos + 1, current);
        current.pop();
        self.used[a] = false;
        self.used[b] = false;

        self.descend(pos + 1, current);
    }

    /// Upper bound on how many more motifs fit, using only candidates from
    /// `pos` on whose arcs are both free. An arc counts toward a centre's
    /// residual degree when some such candidate uses it at that centre.
    fn bound(&mut self, pos: usize) -> usize {
        self.epoch += 1;
        let epoch = self.epoch;
        self.in_live.iter_mut().for_each(|d| *d = 0);
        self.out_live.iter_mut().for_each(|d| *d = 0);
        let arc_slots = self.used.len();
        let mut live_arcs = 0;

        for c in &self.candidates[pos..] {
            if self.used[c.arcs[0]] || self.used[c.arcs[1]] {
                continue;
            }
            for k in 0..2 {
                let arc = c.arcs[k];
                if self.seen[2 * arc_slots + arc] != epoch {
                    self.seen[2 * arc_slots + arc] = epoch;
                    live_arcs += 1;
                }
                let role = if c.enters_center[k] { arc } else { arc_slots + arc };
                if self.seen[role] != epoch {
                    self.seen[role] = epoch;
                    if c.enters_center[k] {
                        self.in_live[c.center] += 1;
                    } else {
                        self.out_live[c.center] += 1;
                    }
                }
            }
        }

        let per_center: usize = (1..=self.n)
            .map(|v| {
                let (i, o) = (self.in_live[v], self.out_live[v]);
                match self.target {
                    Target::Pure(kind) => capacity_from_degrees(kind, i, o),
                    Target::AnyMotif => (i + o) / 2,
                }
            })
            .sum();
        per_center.min(live_arcs / 2)
    }
}

fn enumerate_candidates(target: Target, n: usize) -> Vec<Candidate> {
    let Ok(tt) = TransitiveTournament::new(n) else {
        return Vec::new();
    };
    let kinds: &[MotifKind] = match target {
        Target::Pure(kind) => match kind {
            MotifKind::Chain => &[MotifKind::Chain],
            MotifKind::Collider => &[MotifKind::Collider],
            MotifKind::Fork => &[MotifKind::Fork],
        },
        Target::AnyMotif => &MotifKind::ALL,
    };
    let mut motifs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for &kind in kinds {
                    motifs.push(Motif::raw(kind, [a, b, c]));
                }
            }
        }
    }
    motifs.sort();
    motifs
        .into_iter()
        .map(|motif| {
            let arcs = motif.arcs();
            let center = motif.center();
            Candidate {
                motif,
                center,
                arcs: arcs.map(|a| tt.arc_index(a)),
                enters_center: arcs.map(|a| a.head == center),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::verify;

    #[test]
    fn tiny_instances() {
        let budget = SearchBudget::default();
        for kind in MotifKind::ALL {
            assert_eq!(max_packing(kind, 1, &budget).optimum, 0);
            assert_eq!(max_packing(kind, 2, &budget).optimum, 0);
        }
        let r = max_packing(MotifKind::Collider, 3, &budget);
        assert_eq!(r.optimum, 1);
        assert!(r.exhausted);
        assert_eq!(max_p3_packing_undirected(3, &budget).optimum, 1);
    }

    #[test]
    fn witnesses_verify() {
        let budget = SearchBudget::default();
        for n in 3..=6 {
            for kind in MotifKind::ALL {
                let r = max_packing(kind, n, &budget);
                let report = verify(&r.witness);
                assert!(report.valid);
                assert_eq!(r.witness.len(), r.optimum);
                assert_eq!(r.witness.count_of(kind), r.optimum);
            }
        }
    }

    #[test]
    fn fork_tt6_and_p3_small() {
        let budget = SearchBudget::default();
        assert_eq!(max_packing(MotifKind::Fork, 6, &budget).optimum, 6);
        let r = max_p3_packing_undirected(4, &budget);
        assert_eq!(r.optimum, 3);
        assert!(verify(&r.witness).is_decomposition);
        assert_eq!(max_p3_packing_undirected(5, &budget).optimum, 5);
    }

    #[test]
    fn tiny_budget_is_flagged() {
        let r = max_packing(MotifKind::Fork, 8, &SearchBudget::nodes(5));
        assert!(!r.exhausted);
        assert!(verify(&r.witness).valid);
        assert_eq!(r.witness.len(), r.optimum);
    }

    #[test]
    fn pure_decomposition_queries() {
        let budget = SearchBudget::default();
        assert_eq!(pure_decomposition_exists(MotifKind::Chain, 4, &budget), Ok(false));
        assert_eq!(pure_decomposition_exists(MotifKind::Fork, 5, &budget), Ok(false));
        assert_eq!(
            pure_decomposition_exists(MotifKind::Fork, 6, &budget),
            Err(Error::NotAdmissible(6))
        );
        assert!(matches!(
            pure_decomposition_exists(MotifKind::Chain, 8, &SearchBudget::nodes(3)),
            Err(Error::Inconclusive { .. })
        ));
    }

    #[test]
    fn deterministic_node_counts() {
        let budget = SearchBudget::default();
        let a = max_packing(MotifKind::Chain, 7, &budget);
        let b = max_packing(MotifKind::Chain, 7, &budget);
        assert_eq!(a, b);
    }
}
