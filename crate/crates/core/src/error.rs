// SPDX-License-Identifier: Apache-2.0
//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::tournament::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a transitive tournament needs at least one vertex")]
    EmptyTournament,

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("({tail},{head}) is not an arc of TT_{n}")]
    NotAnArc { tail: usize, head: usize, n: usize },

    #[error("arc {0} was given twice; a motif needs two distinct arcs")]
    IdenticalArcs(Arc),

    #[error("cell ({row},{col}) is outside the diagram of TT_{n}")]
    CellOutOfRange { row: usize, col: usize, n: usize },

    #[error("cell ({row},{col}) holds no dot")]
    EmptyCell { row: usize, col: usize },

    #[error("the same cell ({row},{col}) was selected twice")]
    IdenticalCells { row: usize, col: usize },

    #[error("vertices {0:?} do not form a motif of the requested kind")]
    MalformedMotif([usize; 3]),

    #[error("collection is over TT_{found} but the diagram is TT_{expected}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("ASCII diagrams are limited to n <= 99 (got {0}); use JSON output instead")]
    DiagramTooLarge(usize),

    #[error("n = {0} is not admissible (n mod 4 must be 0 or 1)")]
    NotAdmissible(usize),

    #[error("search budget exhausted before the question was settled (best packing found: {lower_bound})")]
    Inconclusive { lower_bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
