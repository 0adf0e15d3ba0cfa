// SPDX-License-Identifier: Apache-2.0
//! The transitive tournament `TT_n`, its arcs and the three two-arc motifs.
//!
//! Vertices are the integers `1..=n` in topological order, so the arc set is
//! `{(i, j) : i < j}` and never needs to be stored.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of arcs of `TT_n`.
pub fn arc_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitiveTournament {
    n: usize,
}

impl TransitiveTournament {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        Ok(Self { n })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        arc_count(self.n)
    }

    pub fn contains(&self, arc: Arc) -> bool {
        1 <= arc.tail && arc.tail < arc.head && arc.head <= self.n
    }

    /// Checked arc constructor.
    pub fn arc(&self, tail: usize, head: usize) -> Result<Arc> {
        let arc = Arc { tail, head };
        if self.contains(arc) {
            Ok(arc)
        } else {
            Err(Error::NotAnArc { tail, head, n: self.n })
        }
    }

    /// All arcs in lexicographic `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (1..=self.n).flat_map(move |tail| (tail + 1..=self.n).map(move |head| Arc { tail, head }))
    }

    /// Position of `arc` in the order produced by [`arcs`](Self::arcs).
    ///
    /// The caller must pass an arc of this tournament.
    pub fn arc_index(&self, arc: Arc) -> usize {
        debug_assert!(self.contains(arc));
        let before = arc.tail - 1;
        before * self.n - before * (before + 1) / 2 + (arc.head - arc.tail - 1)
    }

    pub fn degree_profile(&self, t: usize) -> Result<DegreeProfile> {
        self.check_vertex(t)?;
        Ok(DegreeProfile {
            vertex: t,
            out_degree: self.n - t,
            in_degree: t - 1,
        })
    }

    /// Classifies two distinct arcs: `None` when they share no vertex,
    /// otherwise the canonical motif they form.
    pub fn classify_pair(&self, a: Arc, b: Arc) -> Result<Option<Motif>> {
        for arc in [a, b] {
            if !self.contains(arc) {
                return Err(Error::NotAnArc {
                    tail: arc.tail,
                    head: arc.head,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(Error::IdenticalArcs(a));
        }
        // Two different arcs of a tournament never join the same vertex pair.
        assert!(
            !(a.tail == b.head && a.head == b.tail),
            "antiparallel arcs cannot occur in TT_n"
        );
        let motif = if a.head == b.tail {
            Some(Motif::chain(a.tail, a.head, b.head)?)
        } else if b.head == a.tail {
            Some(Motif::chain(b.tail, b.head, a.head)?)
        } else if a.head == b.head {
            Some(Motif::collider(a.tail, b.tail, a.head)?)
        } else if a.tail == b.tail {
            Some(Motif::fork(a.tail, a.head, b.head)?)
        } else {
            None
        };
        Ok(motif)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// An ordered pair `tail -> head`. Inside `TT_n`, `tail < head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MotifKind {
    Chain,
    Collider,
    Fork,
}

impl MotifKind {
    pub const ALL: [MotifKind; 3] = [MotifKind::Chain, MotifKind::Collider, MotifKind::Fork];

    pub fn name(self) -> &'static str {
        match self {
            MotifKind::Chain => "chain",
            MotifKind::Collider => "collider",
            MotifKind::Fork => "fork",
        }
    }
}

impl fmt::Display for MotifKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MotifKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "chain" => Ok(MotifKind::Chain),
            "collider" => Ok(MotifKind::Collider),
            "fork" => Ok(MotifKind::Fork),
            other => Err(format!("unknown motif kind `{other}`")),
        }
    }
}

/// A chain, collider or fork over three vertices.
///
/// Canonical vertex triples are always strictly increasing:
///
/// * `Chain (i, j, k)` is `i -> j -> k`, centre `j`;
/// * `Collider (i, k, j)` is `i -> j <- k`, centre `j` (the largest);
/// * `Fork (i, j, k)` is `j <- i -> k`, centre `i` (the smallest).
///
/// The checked constructors only produce canonical motifs. [`Motif::raw`]
/// accepts anything, which is what deserialized input needs; the verifier
/// then reports whatever is wrong with it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Motif {
    pub kind: MotifKind,
    pub vertices: [usize; 3],
}

impl Motif {
    /// `a -> b -> c`.
    pub fn chain(a: usize, b: usize, c: usize) -> Result<Self> {
        if a < b && b < c {
            Ok(Self::raw(MotifKind::Chain, [a, b, c]))
        } else {
            Err(Error::MalformedMotif([a, b, c]))
        }
    }

    /// `t1 -> head <- t2`, tails in either order.
    pub fn collider(t1: usize, t2: usize, head: usize) -> Result<Self> {
        let (lo, hi) = (t1.min(t2), t1.max(t2));
        if lo < hi && hi < head {
            Ok(Self::raw(MotifKind::Collider, [lo, hi, head]))
        } else {
            Err(Error::MalformedMotif([t1, t2, head]))
        }
    }

    /// `h1 <- tail -> h2`, heads in either order.
    pub fn fork(tail: usize, h1: usize, h2: usize) -> Result<Self> {
        let (lo, hi) = (h1.min(h2), h1.max(h2));
        if tail < lo && lo < hi {
            Ok(Self::raw(MotifKind::Fork, [tail, lo, hi]))
        } else {
            Err(Error::MalformedMotif([tail, h1, h2]))
        }
    }

    pub fn raw(kind: MotifKind, vertices: [usize; 3]) -> Self {
        Self { kind, vertices }
    }

    pub fn is_canonical(&self) -> bool {
        let [a, b, c] = self.vertices;
        a < b && b < c
    }

    /// The two vertex pairs the kind prescribes for the stored triple. For a
    /// non-canonical motif these need not be arcs of any tournament.
    pub fn arcs(&self) -> [Arc; 2] {
        let [a, b, c] = self.vertices;
        match self.kind {
            MotifKind::Chain => [Arc::new(a, b), Arc::new(b, c)],
            MotifKind::Collider => [Arc::new(a, c), Arc::new(b, c)],
            MotifKind::Fork => [Arc::new(a, b), Arc::new(a, c)],
        }
    }

    pub fn center(&self) -> usize {
        let [a, b, c] = self.vertices;
        match self.kind {
            MotifKind::Chain => b,
            MotifKind::Collider => c,
            MotifKind::Fork => a,
        }
    }
}

/// Arrow notation: `v1 -> v2 -> v3`, `v1 -> v3 <- v2`, `v2 <- v1 -> v3`.
impl fmt::Display for Motif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices;
        match self.kind {
            MotifKind::Chain => write!(f, "v{a} -> v{b} -> v{c}"),
            MotifKind::Collider => write!(f, "v{a} -> v{c} <- v{b}"),
            MotifKind::Fork => write!(f, "v{b} <- v{a} -> v{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub vertex: usize,
    pub out_degree: usize,
    pub in_degree: usize,
}
