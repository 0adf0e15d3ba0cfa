// SPDX-License-Identifier: Apache-2.0
//! Dots-in-cells diagram of `TT_n`.
//!
//! Rows are labelled `1..n-1`, columns `2..n`; cell `(i, j)` carries a dot
//! iff `i < j`, and that dot is the arc `i -> j`. Two dots in one row form a
//! fork, two in one column a collider, and `(i, j)`, `(j, k)` a chain.
//!
//! The diagram is computed from `n` on demand and never stored.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::collection::MotifCollection;
use crate::error::{Error, Result};
use crate::tournament::{Arc, Motif, TransitiveTournament};

/// Largest order [`Diagram::render_ascii`] accepts.
pub const MAX_ASCII_ORDER: usize = 99;

const DOT: char = '·';

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    pub fn arc(self) -> Arc {
        Arc::new(self.row, self.col)
    }
}

impl From<Arc> for Cell {
    fn from(arc: Arc) -> Self {
        Cell::new(arc.tail, arc.head)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
}

impl Diagram {
    pub fn new(n: usize) -> Result<Self> {
        TransitiveTournament::new(n)?;
        Ok(Self { n })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if (1..self.n).contains(&c.row) && (2..=self.n).contains(&c.col) {
            Ok(())
        } else {
            Err(Error::CellOutOfRange {
                row: c.row,
                col: c.col,
                n: self.n,
            })
        }
    }

    pub fn dot_present(&self, c: Cell) -> Result<bool> {
        self.check_cell(c)?;
        Ok(c.row < c.col)
    }

    pub fn dot_count(&self) -> usize {
        self.dots().count()
    }

    /// Dotted cells, row by row.
    pub fn dots(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..self.n).flat_map(move |row| (row + 1..=self.n).map(move |col| Cell::new(row, col)))
    }

    pub fn row_dots(&self, row: usize) -> usize {
        if (1..self.n).contains(&row) {
            self.n - row
        } else {
            0
        }
    }

    pub fn col_dots(&self, col: usize) -> usize {
        if (2..=self.n).contains(&col) {
            col - 1
        } else {
            0
        }
    }

    /// Reads the motif selected by two dots. `Ok(None)` when the dots are in
    /// neither a row, a column nor a diagonal relation.
    pub fn motif_from_cells(&self, c1: Cell, c2: Cell) -> Result<Option<Motif>> {
        for c in [c1, c2] {
            if !self.dot_present(c)? {
                return Err(Error::EmptyCell { row: c.row, col: c.col });
            }
        }
        if c1 == c2 {
            return Err(Error::IdenticalCells { row: c1.row, col: c1.col });
        }
        let motif = if c1.row == c2.row {
            Some(Motif::fork(c1.row, c1.col, c2.col)?)
        } else if c1.col == c2.col {
            Some(Motif::collider(c1.row, c2.row, c1.col)?)
        } else if c1.col == c2.row {
            Some(Motif::chain(c1.row, c1.col, c2.col)?)
        } else if c2.col == c1.row {
            Some(Motif::chain(c2.row, c2.col, c1.col)?)
        } else {
            None
        };
        Ok(motif)
    }

    /// Text rendering: a header of column labels, then one line per row.
    ///
    /// Without a highlight every cell is two characters wide and shows `·`
    /// for a dot. With a highlight, dots covered by motif `k` (1-based,
    /// emission order) show `k`, and cells widen to fit the largest tag.
    /// Trailing blanks are trimmed from every line.
    pub fn render_ascii(&self, highlight: Option<&MotifCollection>) -> Result<String> {
        if self.n > MAX_ASCII_ORDER {
            return Err(Error::DiagramTooLarge(self.n));
        }
        let mut tags: HashMap<Cell, usize> = HashMap::new();
        if let Some(collection) = highlight {
            if collection.order() != self.n {
                return Err(Error::OrderMismatch {
                    expected: self.n,
                    found: collection.order(),
                });
            }
            for (k, motif) in collection.motifs().iter().enumerate() {
                for arc in motif.arcs() {
                    tags.insert(Cell::from(arc), k + 1);
                }
            }
        }
        let widest_tag = tags.values().max().map_or(1, |k| k.to_string().len());
        let width = (widest_tag + 1).max(2);

        let mut out = String::new();
        let mut line = String::from("  ");
        for col in 2..=self.n {
            write!(line, "{col:>width$}").unwrap();
        }
        push_line(&mut out, &line);
        for row in 1..self.n {
            let mut line = format!("{row:>2}");
            for col in 2..=self.n {
                let cell = Cell::new(row, col);
                let content = match tags.get(&cell) {
                    Some(k) => k.to_string(),
                    None if row < col => DOT.to_string(),
                    None => String::new(),
                };
                write!(line, "{content:>width$}").unwrap();
            }
            push_line(&mut out, &line);
        }
        Ok(out)
    }
}

fn push_line(out: &mut String, line: &str) {
    out.push_str(line.trim_end());
    out.push('\n');
}
