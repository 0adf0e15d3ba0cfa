// SPDX-License-Identifier: Apache-2.0
//! JSON form of a motif collection.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "n": 3,
//!   "kind": "packing",
//!   "motifs": [ { "type": "collider", "vertices": [1, 2, 3] } ],
//!   "unused_arcs": [ [1, 2] ]
//! }
//! ```
//!
//! Vertices are 1-based and triples are in canonical form. `kind` is
//! `"decomposition"` exactly when `unused_arcs` is empty.

use serde::{Deserialize, Serialize};
use ttpack_core::{Arc, Motif, MotifCollection, MotifKind};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Decomposition,
    Packing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotifEntry {
    #[serde(rename = "type")]
    pub kind: MotifKind,
    pub vertices: [usize; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionDocument {
    pub schema_version: String,
    pub n: usize,
    pub kind: DocumentKind,
    pub motifs: Vec<MotifEntry>,
    pub unused_arcs: Vec<[usize; 2]>,
}

#[derive(Debug)]
pub enum ParseError {
    Json(serde_json::Error),
    SchemaVersion(String),
    ZeroOrder,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Json(e) => write!(f, "malformed document: {e}"),
            ParseError::SchemaVersion(v) => {
                write!(f, "unsupported schema_version {v:?} (expected {SCHEMA_VERSION:?})")
            }
            ParseError::ZeroOrder => f.write_str("malformed document: n must be at least 1"),
        }
    }
}

impl std::error::Error for ParseError {}

impl CollectionDocument {
    pub fn from_collection(c: &MotifCollection) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            n: c.order(),
            kind: if c.unused_arcs().is_empty() {
                DocumentKind::Decomposition
            } else {
                DocumentKind::Packing
            },
            motifs: c
                .motifs()
                .iter()
                .map(|m| MotifEntry { kind: m.kind, vertices: m.vertices })
                .collect(),
            unused_arcs: c.unused_arcs().iter().map(|a| [a.tail, a.head]).collect(),
        }
    }

    /// The collection as written, without any repair; pass it to
    /// [`ttpack_core::verify`] to find out whether it is consistent.
    pub fn to_collection(&self) -> MotifCollection {
        MotifCollection::from_parts(
            self.n,
            self.motifs.iter().map(|e| Motif::raw(e.kind, e.vertices)).collect(),
            self.unused_arcs.iter().map(|&[t, h]| Arc::new(t, h)).collect(),
        )
    }

    /// Whether `kind` agrees with the declared unused arcs.
    pub fn kind_is_consistent(&self) -> bool {
        (self.kind == DocumentKind::Decomposition) == self.unused_arcs.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let doc: Self = serde_json::from_str(text).map_err(ParseError::Json)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(ParseError::SchemaVersion(doc.schema_version));
        }
        if doc.n == 0 {
            return Err(ParseError::ZeroOrder);
        }
        Ok(doc)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
