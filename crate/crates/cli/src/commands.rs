// SPDX-License-Identifier: Apache-2.0
//! Subcommand implementations. Each returns its full output and exit code
//! instead of printing, so tests can drive them directly.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use ttpack_core::analysis::{capacity_sum, center_capacity, decomposition_size};
use ttpack_core::oracle::{max_packing, SearchBudget};
use ttpack_core::{
    is_admissible, mixed_counts, packing_number, verify, Diagram, MotifCounts, MotifKind, Strategy,
    VerificationReport,
};

use crate::document::CollectionDocument;
use crate::notation;

/// Exit codes shared by every subcommand.
pub mod exit {
    /// Valid decomposition (or, for `oracle`, MATCH).
    pub const OK: i32 = 0;
    /// Invalid collection (or MISMATCH).
    pub const INVALID: i32 = 1;
    /// Usage error or unreadable input.
    pub const USAGE: i32 = 2;
    /// Valid packing that leaves arcs unused (or INCONCLUSIVE).
    pub const PACKING: i32 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            stdout: String::new(),
            stderr: message.into() + "\n",
            code: exit::USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Diagram,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn decompose(n: usize, strategy: Strategy, format: Format) -> Outcome {
    if n == 0 {
        return Outcome::usage("error: --n must be at least 1");
    }
    let collection = strategy.construct(n);
    let report = verify(&collection);

    let stdout = match format {
        Format::Json => CollectionDocument::from_collection(&collection).to_json(),
        Format::Text => notation::render(&collection),
        Format::Diagram => {
            match Diagram::new(n).and_then(|d| d.render_ascii(Some(&collection))) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(format!("error: {e}")),
            }
        }
    };

    let (code, stderr) = if !report.valid {
        let mut msg = String::from("error: construction failed verification\n");
        for v in &report.violations {
            writeln!(msg, "  {v}").unwrap();
        }
        (exit::INVALID, msg)
    } else if report.is_decomposition {
        (exit::OK, String::new())
    } else {
        (
            exit::PACKING,
            format!(
                "warning: TT_{n} has no decomposition; this is a packing with {} unused arc(s)\n",
                report.unused_arcs.len()
            ),
        )
    };
    Outcome { stdout, stderr, code }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentreCapacity {
    pub vertex: usize,
    pub chain: usize,
    pub collider: usize,
    pub fork: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountsTable {
    pub n: usize,
    pub admissible: bool,
    pub arcs: usize,
    pub decomposition_size: Option<usize>,
    pub packing_number: PerKind,
    pub capacity_sum: PerKind,
    pub mixed_counts: Option<MotifCounts>,
    pub centre_capacities: Vec<CentreCapacity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PerKind {
    pub chain: usize,
    pub collider: usize,
    pub fork: usize,
}

impl PerKind {
    fn from_fn(f: impl Fn(MotifKind) -> usize) -> Self {
        Self {
            chain: f(MotifKind::Chain),
            collider: f(MotifKind::Collider),
            fork: f(MotifKind::Fork),
        }
    }
}

pub fn counts_table(n: usize) -> CountsTable {
    CountsTable {
        n,
        admissible: is_admissible(n),
        arcs: n * n.saturating_sub(1) / 2,
        decomposition_size: decomposition_size(n),
        packing_number: PerKind::from_fn(|k| packing_number(k, n)),
        capacity_sum: PerKind::from_fn(|k| capacity_sum(k, n)),
        mixed_counts: mixed_counts(n).ok(),
        centre_capacities: (1..=n)
            .map(|t| CentreCapacity {
                vertex: t,
                chain: center_capacity(MotifKind::Chain, n, t),
                collider: center_capacity(MotifKind::Collider, n, t),
                fork: center_capacity(MotifKind::Fork, n, t),
            })
            .collect(),
    }
}

pub fn counts(n: usize, format: Format) -> Outcome {
    if n == 0 {
        return Outcome::usage("error: --n must be at least 1");
    }
    let table = counts_table(n);
    let stdout = match format {
        Format::Json => to_json(&table),
        Format::Text => render_counts(&table),
        Format::Diagram => return Outcome::usage("error: counts supports --format json or text"),
    };
    Outcome { stdout, stderr: String::new(), code: exit::OK }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_counts(t: &CountsTable) -> String {
    let mut s = String::new();
    writeln!(s, "n: {}", t.n).unwrap();
    writeln!(s, "admissible: {}", yes_no(t.admissible)).unwrap();
    writeln!(s, "arcs: {}", t.arcs).unwrap();
    match t.decomposition_size {
        Some(d) => writeln!(s, "motifs in a decomposition: {d}").unwrap(),
        None => writeln!(s, "motifs in a decomposition: none (arc count is odd)").unwrap(),
    }
    let p = t.packing_number;
    writeln!(s, "packing number: chain {}, collider {}, fork {}", p.chain, p.collider, p.fork).unwrap();
    match t.mixed_counts {
        Some(m) => writeln!(
            s,
            "mixed decomposition: {} chains, {} colliders, {} forks",
            m.chains, m.colliders, m.forks
        )
        .unwrap(),
        None => writeln!(s, "mixed decomposition: n is not admissible").unwrap(),
    }
    writeln!(s, "centre capacities:").unwrap();
    writeln!(s, "  vertex  chain  collider  fork").unwrap();
    for c in &t.centre_capacities {
        writeln!(s, "  {:>6}  {:>5}  {:>8}  {:>4}", c.vertex, c.chain, c.collider, c.fork).unwrap();
    }
    let c = t.capacity_sum;
    writeln!(s, "  {:>6}  {:>5}  {:>8}  {:>4}", "total", c.chain, c.collider, c.fork).unwrap();
    s
}

#[derive(Debug, Clone, Serialize)]
struct VerifyOutput {
    #[serde(flatten)]
    report: VerificationReport,
    kind_consistent: bool,
}

/// Verifies a serialized collection.
///
/// Exit codes: 0 valid decomposition, 3 valid packing, 1 invalid,
/// 2 unreadable document.
pub fn verify_document(input: &str, format: Format) -> Outcome {
    let doc = match CollectionDocument::parse(input) {
        Ok(doc) => doc,
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let mut report = verify(&doc.to_collection());
    let kind_consistent = doc.kind_is_consistent();
    let valid = report.valid && kind_consistent;
    report.valid = valid;
    report.is_decomposition &= valid;

    let stdout = match format {
        Format::Json => to_json(&VerifyOutput { report: report.clone(), kind_consistent }),
        Format::Text | Format::Diagram => {
            let mut s = String::new();
            writeln!(s, "valid: {}", yes_no(valid)).unwrap();
            writeln!(s, "decomposition: {}", yes_no(valid && report.is_decomposition)).unwrap();
            let c = report.counts;
            writeln!(s, "counts: {} chains, {} colliders, {} forks", c.chains, c.colliders, c.forks).unwrap();
            writeln!(s, "unused arcs: {}", report.unused_arcs.len()).unwrap();
            for v in &report.violations {
                writeln!(s, "violation: {v}").unwrap();
            }
            if !kind_consistent {
                writeln!(s, "violation: document kind {:?} disagrees with its unused_arcs", doc.kind).unwrap();
            }
            s
        }
    };
    let code = if !valid {
        exit::INVALID
    } else if report.is_decomposition {
        exit::OK
    } else {
        exit::PACKING
    };
    Outcome { stdout, stderr: String::new(), code }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
struct OracleOutput {
    kind: MotifKind,
    n: usize,
    optimum: usize,
    exhausted: bool,
    nodes: u64,
    packing_number: usize,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<CollectionDocument>,
}

/// Runs the exact search and compares it with the closed form.
///
/// `max_nodes = Some(0)` means no node cap. Exit codes: 0 MATCH,
/// 1 MISMATCH, 3 INCONCLUSIVE.
pub fn oracle(
    kind: MotifKind,
    n: usize,
    max_nodes: Option<u64>,
    max_time: Option<f64>,
    witness: bool,
    format: Format,
) -> Outcome {
    if n == 0 {
        return Outcome::usage("error: --n must be at least 1");
    }
    let max_time = match max_time {
        Some(secs) if !(secs > 0.0 && secs.is_finite()) => {
            return Outcome::usage("error: --max-time must be a positive number of seconds")
        }
        Some(secs) => Some(Duration::from_secs_f64(secs)),
        None => None,
    };
    let budget = SearchBudget {
        max_nodes: match max_nodes {
            Some(0) => None,
            Some(cap) => Some(cap),
            None => SearchBudget::default().max_nodes,
        },
        max_time,
    };
    let result = max_packing(kind, n, &budget);
    let formula = packing_number(kind, n);
    // A witness above the formula refutes it even from a partial search.
    let verdict = if result.optimum > formula {
        Verdict::Mismatch
    } else if !result.exhausted {
        Verdict::Inconclusive
    } else if result.optimum == formula {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };

    let stdout = match format {
        Format::Json => to_json(&OracleOutput {
            kind,
            n,
            optimum: result.optimum,
            exhausted: result.exhausted,
            nodes: result.nodes,
            packing_number: formula,
            verdict,
            witness: witness.then(|| CollectionDocument::from_collection(&result.witness)),
        }),
        Format::Text | Format::Diagram => {
            let mut s = String::new();
            writeln!(s, "kind: {kind}").unwrap();
            writeln!(s, "n: {n}").unwrap();
            if result.exhausted {
                writeln!(s, "optimum: {}", result.optimum).unwrap();
            } else {
                writeln!(s, "optimum: {} (lower bound)", result.optimum).unwrap();
            }
            writeln!(s, "exhausted: {}", yes_no(result.exhausted)).unwrap();
            writeln!(s, "nodes: {}", result.nodes).unwrap();
            writeln!(s, "packing number: {formula}").unwrap();
            writeln!(s, "result: {}", verdict_word(verdict)).unwrap();
            if witness {
                writeln!(s, "witness:").unwrap();
                for line in notation::render(&result.witness).lines() {
                    writeln!(s, "  {line}").unwrap();
                }
            }
            s
        }
    };
    let code = match verdict {
        Verdict::Match => exit::OK,
        Verdict::Mismatch => exit::INVALID,
        Verdict::Inconclusive => exit::PACKING,
    };
    Outcome { stdout, stderr: String::new(), code }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Match => "MATCH",
        Verdict::Mismatch => "MISMATCH",
        Verdict::Inconclusive => "INCONCLUSIVE",
    }
}
