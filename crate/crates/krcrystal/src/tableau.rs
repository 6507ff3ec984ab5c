//! A plain filling of a Young diagram, stored row by row.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::letter::{letter_to_string, Letter};

/// A filling of a (straight) Young diagram given by its rows, top row first.
///
/// The ordering used for canonical vertex order compares shapes first and
/// then the row-major list of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Tableau {
    pub rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Self {
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau { rows: vec![] }
    }

    /// Builds a tableau from columns listed left to right, each top to bottom.
    pub fn from_columns(cols: &[Vec<Letter>]) -> Self {
        let height = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut rows = vec![Vec::new(); height];
        for c in cols {
            for (r, &x) in c.iter().enumerate() {
                rows[r].push(x);
            }
        }
        Tableau::new(rows)
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Whether the row lengths weakly decrease.
    pub fn is_straight(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    /// Height of column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > c).count()
    }

    /// Column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<Letter> {
        (0..self.column_height(c))
            .map(|r| self.rows[r][c])
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<Letter>> {
        (0..self.width()).map(|c| self.column(c)).collect()
    }

    /// Cells in column-reading order: columns left to right, each bottom to top.
    pub fn column_reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for c in 0..self.width() {
            for r in (0..self.column_height(c)).rev() {
                out.push((r, c));
            }
        }
        out
    }

    /// The column word.
    pub fn column_word(&self) -> Vec<Letter> {
        self.column_reading_cells()
            .into_iter()
            .map(|(r, c)| self.rows[r][c])
            .collect()
    }

    /// Replaces the letters in column-reading order.
    pub fn with_column_word(&self, word: &[Letter]) -> Tableau {
        let mut t = self.clone();
        for ((r, c), &x) in self.column_reading_cells().into_iter().zip(word) {
            t.rows[r][c] = x;
        }
        t
    }

    /// Letters in row-major order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| letter_to_string(x))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}
