// SPDX-License-Identifier: Apache-2.0
//! Arrow notation, one motif per line.
//!
//! | shape              | motif                     |
//! |--------------------|---------------------------|
//! | `va -> vb -> vc`   | chain `a -> b -> c`       |
//! | `va -> vc <- vb`   | collider at `c`           |
//! | `vb <- va -> vc`   | fork at `a`               |
//!
//! Leftover arcs of a packing are written `unused: va -> vb`.

use ttpack_core::{Arc, Motif, MotifCollection};

pub const UNUSED_PREFIX: &str = "unused: ";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Motif(Motif),
    Unused(Arc),
}

pub fn render(c: &MotifCollection) -> String {
    let mut out = String::new();
    for m in c.motifs() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    for a in c.unused_arcs() {
        out.push_str(&format!("{UNUSED_PREFIX}v{} -> v{}\n", a.tail, a.head));
    }
    out
}

fn vertex(token: &str) -> Result<usize, String> {
    token
        .strip_prefix('v')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| format!("expected a vertex like `v3`, found `{token}`"))
}

pub fn parse_line(line: &str) -> Result<Line, String> {
    let line = line.trim();
    if let Some(rest) = line.strip_prefix(UNUSED_PREFIX) {
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        return match tokens.as_slice() {
            [a, "->", b] => Ok(Line::Unused(Arc::new(vertex(a)?, vertex(b)?))),
            _ => Err(format!("cannot read unused arc `{rest}`")),
        };
    }
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let [a, op1, b, op2, c] = tokens.as_slice() else {
        return Err(format!("expected `vA op vB op vC`, found `{line}`"));
    };
    let (a, b, c) = (vertex(a)?, vertex(b)?, vertex(c)?);
    let motif = match (*op1, *op2) {
        ("->", "->") => Motif::chain(a, b, c),
        ("->", "<-") => Motif::collider(a, c, b),
        ("<-", "->") => Motif::fork(b, a, c),
        _ => return Err(format!("`{line}` is not a chain, collider or fork")),
    };
    motif.map(Line::Motif).map_err(|e| e.to_string())
}

/// Reads text produced by [`render`] back into a collection over `TT_n`.
pub fn parse(n: usize, text: &str) -> Result<MotifCollection, String> {
    let mut motifs = Vec::new();
    let mut unused = Vec::new();
    for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        match parse_line(line).map_err(|e| format!("line {}: {e}", no + 1))? {
            Line::Motif(m) => motifs.push(m),
            Line::Unused(a) => unused.push(a),
        }
    }
    Ok(MotifCollection::from_parts(n, motifs, unused))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ttpack_core::{MotifKind, Strategy};

    #[test]
    fn the_three_shapes() {
        assert_eq!(parse_line("v1 -> v7 -> v8"), Ok(Line::Motif(Motif::chain(1, 7, 8).unwrap())));
        assert_eq!(parse_line("v3 -> v8 <- v4"), Ok(Line::Motif(Motif::collider(3, 4, 8).unwrap())));
        assert_eq!(parse_line("v2 <- v1 -> v3"), Ok(Line::Motif(Motif::fork(1, 2, 3).unwrap())));
        // heads or tails listed in the other order still land on the canonical form
        assert_eq!(parse_line("v8 <- v6 -> v7"), Ok(Line::Motif(Motif::fork(6, 7, 8).unwrap())));
        assert_eq!(parse_line("unused: v5 -> v6"), Ok(Line::Unused(Arc::new(5, 6))));
    }

    #[test]
    fn rejects_nonsense() {
        assert!(parse_line("v1 <- v2 <- v3").is_err());
        assert!(parse_line("v3 -> v2 -> v1").is_err());
        assert!(parse_line("1 -> 2 -> 3").is_err());
        assert!(parse_line("v1 -> v2").is_err());
    }

    proptest! {
        #[test]
        fn render_then_parse_recovers_the_collection(n in 1usize..40, s in 0usize..4) {
            let c = Strategy::ALL[s].construct(n);
            let back = parse(n, &render(&c)).unwrap();
            prop_assert_eq!(back, c);
        }

        #[test]
        fn every_canonical_motif_round_trips(a in 1usize..30, b in 1usize..30, c in 1usize..30, k in 0usize..3) {
            let mut v = [a, b, c];
            v.sort();
            prop_assume!(v[0] < v[1] && v[1] < v[2]);
            let m = Motif::raw(MotifKind::ALL[k], v);
            prop_assert_eq!(parse_line(&m.to_string()), Ok(Line::Motif(m)));
        }
    }
}
