// SPDX-License-Identifier: Apache-2.0
//! Packings and decompositions of the transitive tournament `TT_n` into the
//! three connected two-arc motifs: chains (`i -> j -> k`), colliders
//! (`i -> j <- k`) and forks (`j <- i -> k`).
//!
//! * [`tournament`]: `TT_n`, arcs, motifs and pair classification.
//! * [`diagram`]: the dots-in-cells view of `TT_n`.
//! * [`constructions`]: the mixed and the three motif-maximising constructions.
//! * [`analysis`]: closed-form counts and the collection verifier.
//! * [`oracle`]: an exact branch-and-bound packer for small `n`.

pub mod analysis;
pub mod collection;
pub mod constructions;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod tournament;

pub use analysis::{
    capacity_sum, center_capacity, is_admissible, mixed_counts, packing_number, verify, PackingNumberTable,
    VerificationReport, Violation,
};
pub use collection::{MotifCollection, MotifCounts};
pub use constructions::{construct_chain_max, construct_collider_max, construct_fork_max, construct_mixed};
pub use diagram::{Cell, Diagram};
pub use error::{Error, Result};
pub use oracle::{max_p3_packing_undirected, max_packing, pure_decomposition_exists, OracleResult, SearchBudget};
pub use tournament::{Arc, DegreeProfile, Motif, MotifKind, TransitiveTournament};

/// The four deterministic constructions, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Mixed,
    ChainMax,
    ColliderMax,
    ForkMax,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Mixed, Strategy::ChainMax, Strategy::ColliderMax, Strategy::ForkMax];

    pub fn construct(self, n: usize) -> MotifCollection {
        match self {
            Strategy::Mixed => construct_mixed(n),
            Strategy::ChainMax => construct_chain_max(n),
            Strategy::ColliderMax => construct_collider_max(n),
            Strategy::ForkMax => construct_fork_max(n),
        }
    }

    /// The motif kind a max construction maximises.
    pub fn dominant_kind(self) -> Option<MotifKind> {
        match self {
            Strategy::Mixed => None,
            Strategy::ChainMax => Some(MotifKind::Chain),
            Strategy::ColliderMax => Some(MotifKind::Collider),
            Strategy::ForkMax => Some(MotifKind::Fork),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Mixed => "mixed",
            Strategy::ChainMax => "chain-max",
            Strategy::ColliderMax => "collider-max",
            Strategy::ForkMax => "fork-max",
        }
    }
}
