//! Tableaux of type `C_2`, their starred signatures, the `ABCD` statistics and
//! the local relations between `e_1` and `e_2`.
//!
//! The alphabet is `1 < 2 < 2̄ < 1̄` (letters `1, 2, -2, -1`). A tableau has at
//! most two rows; its column word lists `bottom, top` for every two-cell
//! column, left to right, followed by the cells of the one-row columns.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::graph::CrystalGraph;
use crate::letter::{Alphabet, Letter};
use crate::signature::{act, acting_position, word_signature, Dir, Signature};
use crate::tableau::Tableau;
use crate::CrystalError;

/// The vector representation of `C_2`.
pub const C2: Alphabet = Alphabet {
    family: crate::letter::Family::C,
    n: 2,
};

fn c2_rank(x: Letter) -> Option<i32> {
    match x {
        1 => Some(1),
        2 => Some(2),
        -2 => Some(3),
        -1 => Some(4),
        _ => None,
    }
}

/// A validated `C_2` tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Tableau", into = "Tableau")]
pub struct C2Tableau(Tableau);

impl TryFrom<Tableau> for C2Tableau {
    type Error = CrystalError;
    fn try_from(t: Tableau) -> Result<Self, CrystalError> {
        C2Tableau::from_tableau(t)
    }
}

impl From<C2Tableau> for Tableau {
    fn from(t: C2Tableau) -> Tableau {
        t.0
    }
}

impl fmt::Display for C2Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checks the four tableau conditions; the error names the first failure.
pub fn validate_c2(t: &Tableau) -> Result<(), CrystalError> {
    let rows = &t.rows;
    if rows.len() > 2 {
        return Err(CrystalError::Shape(format!(
            "{} rows; at most 2 allowed",
            rows.len()
        )));
    }
    if !t.is_straight() {
        return Err(CrystalError::Shape(
            "second row longer than the first".into(),
        ));
    }
    for r in rows {
        for &x in r {
            if c2_rank(x).is_none() {
                return Err(CrystalError::Input(format!(
                    "letter {x} is not in the C2 alphabet"
                )));
            }
        }
        if r.windows(2).any(|w| c2_rank(w[0]) > c2_rank(w[1])) {
            return Err(CrystalError::Input("row not weakly increasing".into()));
        }
    }
    if rows.len() == 2 {
        let (top, bottom) = (&rows[0], &rows[1]);
        for c in 0..bottom.len() {
            if c2_rank(top[c]) >= c2_rank(bottom[c]) {
                return Err(CrystalError::Input(format!(
                    "column {} not strictly increasing",
                    c + 1
                )));
            }
            if top[c] == 1 && bottom[c] == -1 {
                return Err(CrystalError::Input(format!(
                    "column {} contains 1 and 1̄",
                    c + 1
                )));
            }
            if c + 1 < bottom.len() && top[c] == 2 && bottom[c + 1] == -2 {
                return Err(CrystalError::Input(format!(
                    "2 / 2̄ square configuration at columns {}–{}",
                    c + 1,
                    c + 2
                )));
            }
        }
    }
    Ok(())
}

impl C2Tableau {
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self, CrystalError> {
        Self::from_tableau(Tableau::new(rows))
    }

    pub fn from_tableau(t: Tableau) -> Result<Self, CrystalError> {
        validate_c2(&t)?;
        Ok(C2Tableau(t))
    }

    /// The highest weight tableau of shape `(l1, l2)`: 1s on top, 2s below.
    pub fn highest(l1: usize, l2: usize) -> Result<Self, CrystalError> {
        if l2 > l1 {
            return Err(CrystalError::Shape(format!(
                "({l1},{l2}) is not a partition"
            )));
        }
        Self::new(vec![vec![1; l1], vec![2; l2]])
    }

    pub fn tableau(&self) -> &Tableau {
        &self.0
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.0.rows
    }

    pub fn shape(&self) -> (usize, usize) {
        let s = self.0.shape();
        (
            s.first().copied().unwrap_or(0),
            s.get(1).copied().unwrap_or(0),
        )
    }

    fn top(&self) -> &[Letter] {
        self.0.rows.first().map_or(&[], |r| r.as_slice())
    }

    fn bottom(&self) -> &[Letter] {
        self.0.rows.get(1).map_or(&[], |r| r.as_slice())
    }

    /// Cell `(row, column)` of every position of the column word.
    pub fn column_word_cells(&self) -> Vec<(usize, usize)> {
        let (l1, l2) = self.shape();
        let mut cells = Vec::with_capacity(l1 + l2);
        for c in 0..l2 {
            cells.push((1, c));
            cells.push((0, c));
        }
        cells.extend((l2..l1).map(|c| (0, c)));
        cells
    }

    /// The column word.
    pub fn column_word(&self) -> Vec<Letter> {
        self.column_word_cells()
            .into_iter()
            .map(|(r, c)| self.0.rows[r][c])
            .collect()
    }

    /// The `i`-signature with `*` for letters on which color `i` does not act.
    pub fn signature(&self, i: usize) -> Signature {
        word_signature(&self.column_word(), i, &C2)
    }

    /// Weight in the ε-basis.
    pub fn weight(&self) -> Vec<i32> {
        C2.word_weight(&self.column_word())
    }

    /// Cell the operator acts on, if the result is not the zero element.
    pub fn acting_cell(&self, i: usize, dir: Dir) -> Option<(usize, usize)> {
        let pos = acting_position(&self.column_word(), i, dir, &C2)?;
        Some(self.column_word_cells()[pos])
    }

    /// `e_i` or `f_i` by the signature rule; `None` is the zero element.
    ///
    /// Panics if the result violates the tableau conditions, which would be a
    /// defect of the signature rule implementation.
    pub fn op(&self, i: usize, dir: Dir) -> Option<C2Tableau> {
        if i != 1 && i != 2 {
            return None;
        }
        let word = act(&self.column_word(), i, dir, &C2)?;
        let mut rows = self.0.rows.clone();
        for ((r, c), x) in self.column_word_cells().into_iter().zip(word) {
            rows[r][c] = x;
        }
        let t = Tableau { rows };
        assert!(
            validate_c2(&t).is_ok(),
            "operator produced an invalid C2 tableau: {t}"
        );
        Some(C2Tableau(t))
    }

    /// The `ABCD` statistics.
    pub fn abcd(&self) -> AbcdStats {
        let count = |row: &[Letter], x: Letter| row.iter().filter(|&&y| y == x).count() as u32;
        let c = count(self.top(), 2);
        AbcdStats {
            a: count(self.top(), -2),
            b: c + count(self.bottom(), -1),
            c,
            d: count(self.bottom(), -2),
        }
    }
}

/// `A` = #2̄ in the top row; `B` = #2 in the top row + #1̄ in the bottom row;
/// `C` = #2 in the top row; `D` = #2̄ in the bottom row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbcdStats {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl AbcdStats {
    /// The block `e_i` is predicted to act on.
    pub fn block(&self, i: usize) -> Option<Block> {
        match i {
            1 => Some(if self.a < self.b {
                Block::Left
            } else {
                Block::Right
            }),
            2 => Some(if self.c < self.d {
                Block::Left
            } else {
                Block::Right
            }),
            _ => None,
        }
    }

    /// The degree of the relation above a vertex with these statistics.
    pub fn relation_degree(&self) -> u8 {
        let (a, b) = (self.a as i64, self.b as i64);
        let col = if a < b {
            0
        } else if a == b {
            1
        } else if a == b + 1 {
            2
        } else {
            3
        };
        let row = match self.c.cmp(&self.d) {
            std::cmp::Ordering::Less => 0,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Greater => 2,
        };
        RELATION_TABLE[row][col]
    }
}

/// Rows `C<D`, `C=D`, `C>D`; columns `A<B`, `A=B`, `A=B+1`, `A>B+1`.
pub const RELATION_TABLE: [[u8; 4]; 3] = [[2, 2, 2, 2], [4, 7, 4, 2], [2, 5, 4, 2]];

/// The two groups of `+` symbols a raising operator can act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    Left,
    Right,
}

/// The block predicted by the statistics for the action of `e_i` on `t`.
pub fn block_of_action(t: &C2Tableau, i: usize) -> Result<Block, CrystalError> {
    if t.op(i, Dir::E).is_none() {
        return Err(CrystalError::Input(format!("e_{i} is zero on {t}")));
    }
    t.abcd()
        .block(i)
        .ok_or_else(|| CrystalError::Input(format!("color {i} is not 1 or 2")))
}

/// The block containing the `+` that `e_i` actually acts on, classified by
/// the letter and row of the acted cell.
pub fn acted_block(t: &C2Tableau, i: usize) -> Result<Block, CrystalError> {
    let (r, c) = t
        .acting_cell(i, Dir::E)
        .ok_or_else(|| CrystalError::Input(format!("e_{i} is zero on {t}")))?;
    let x = t.rows()[r][c];
    match (i, r, x) {
        (1, 0, 2) | (1, 1, -1) | (2, 1, -2) => Ok(Block::Left),
        (1, 0, -1) | (2, 0, -2) => Ok(Block::Right),
        _ => Err(CrystalError::Inconsistent(format!(
            "e_{i} acts on {x} in row {} of {t}",
            r + 1
        ))),
    }
}

/// The degree of the relation above `t` read off the statistics table.
pub fn predict_degree(t: &C2Tableau) -> Result<u8, CrystalError> {
    for i in [1, 2] {
        if t.op(i, Dir::E).is_none() {
            return Err(CrystalError::Input(format!("e_{i} is zero on {t}")));
        }
    }
    Ok(t.abcd().relation_degree())
}

/// `B(λ)` for `λ = (l1, l2)`: the closure of the highest weight tableau.
/// Every vertex is checked against the tableau conditions.
pub fn generate_c2(
    l1: usize,
    l2: usize,
    cap: usize,
) -> Result<CrystalGraph<C2Tableau>, CrystalError> {
    let seed = C2Tableau::highest(l1, l2)?;
    let g = CrystalGraph::generate(
        seed,
        &[1, 2],
        |t: &C2Tableau, i, dir| t.op(i, dir),
        |t| t.weight(),
        cap,
    )?;
    for t in &g.vertices {
        validate_c2(t.tableau())?;
    }
    Ok(g)
}

/// `dim V(λ)` for `C_2` by the Weyl dimension formula.
pub fn c2_dimension(l1: usize, l2: usize) -> u64 {
    let (a, b) = (l1 as u64, l2 as u64);
    // Positive roots e1−e2, e1+e2, 2e1, 2e2 with ρ = (2, 1).
    (a - b + 1) * (a + b + 3) * (a + 2) * (b + 1) / 6
}

/// Two raising sequences from the same vertex reaching the same vertex.
///
/// Sequences are stored in the order the operators are applied; `Display`
/// writes them as composed operators (rightmost applied first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub degree: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

/// Composed-operator notation, e.g. `[1,2,2,1]` applied left to right is
/// written `e1e2^2e1`.
pub fn operator_string(applied: &[usize]) -> String {
    let mut out = String::new();
    let mut k = applied.len();
    while k > 0 {
        let c = applied[k - 1];
        let mut run = 0;
        while k > 0 && applied[k - 1] == c {
            run += 1;
            k -= 1;
        }
        out.push_str(&format!("e{c}"));
        if run > 1 {
            out.push_str(&format!("^{run}"));
        }
    }
    out
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}",
            operator_string(&self.first),
            operator_string(&self.second)
        )
    }
}

/// Applies raising operators in the given order.
pub fn raise_along<P: Clone + Eq + Hash>(
    g: &CrystalGraph<P>,
    v: usize,
    applied: &[usize],
) -> Option<usize> {
    applied.iter().try_fold(v, |cur, &i| g.e_op(cur, i))
}

/// Endpoints of all defined raising sequences of length `len` starting with
/// `first`, with the sequence that reaches them first in lexicographic order.
fn endpoints<P: Clone + Eq + Hash>(
    g: &CrystalGraph<P>,
    v: usize,
    first: usize,
    colors: (usize, usize),
    len: usize,
) -> HashMap<usize, Vec<usize>> {
    let mut out = HashMap::new();
    let mut stack = vec![(vec![first], g.e_op(v, first))];
    // Depth-first in lexicographic order; the first sequence reaching an
    // endpoint is kept.
    while let Some((seq, cur)) = stack.pop() {
        let Some(cur) = cur else { continue };
        if seq.len() == len {
            out.entry(cur).or_insert(seq);
            continue;
        }
        for &c in [colors.1, colors.0].iter() {
            let mut next = seq.clone();
            next.push(c);
            stack.push((next, g.e_op(cur, c)));
        }
    }
    out
}

/// The shortest pair of raising sequences, the first starting with the
/// second color and the other with the first color, that reach the same
/// vertex from `v`. Both sequences then have the same color content.
pub fn find_min_relation<P: Clone + Eq + Hash>(
    g: &CrystalGraph<P>,
    v: usize,
    max_len: usize,
) -> Result<Relation, CrystalError> {
    if g.colors.len() != 2 {
        return Err(CrystalError::Input(format!(
            "expected two colors, found {}",
            g.colors.len()
        )));
    }
    let (i, j) = (g.colors[0], g.colors[1]);
    if g.e_op(v, i).is_none() || g.e_op(v, j).is_none() {
        return Err(CrystalError::Input(
            "both raising operators must be defined".into(),
        ));
    }
    for len in 1..=max_len {
        let from_j = endpoints(g, v, j, (i, j), len);
        let from_i = endpoints(g, v, i, (i, j), len);
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for (w, sj) in &from_j {
            if let Some(si) = from_i.get(w) {
                let cand = (sj.clone(), si.clone());
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        if let Some((first, second)) = best {
            return Ok(Relation {
                degree: len,
                first,
                second,
            });
        }
    }
    Err(CrystalError::Inconsistent(format!(
        "no relation of length at most {max_len} above vertex {v}"
    )))
}

/// The identities of each degree with `i`, `j` the two colors, written as
/// composed operators (rightmost applied first).
fn relation_forms(degree: usize) -> &'static [&'static str] {
    match degree {
        2 => &["ij", "ji"],
        4 => &["ijji", "jiij"],
        5 => &["ijjji", "jijij", "jjiij"],
        7 => &["ijjjiij", "ijjijij", "jiijjji", "jijijji"],
        _ => &[],
    }
}

/// Whether the listed identity of the given degree holds at `v` (all
/// sequences defined and equal) for one of the two assignments of colors.
pub fn relation_identity_holds<P: Clone + Eq + Hash>(
    g: &CrystalGraph<P>,
    v: usize,
    degree: usize,
) -> bool {
    let forms = relation_forms(degree);
    if forms.is_empty() || g.colors.len() != 2 {
        return false;
    }
    let (a, b) = (g.colors[0], g.colors[1]);
    [(a, b), (b, a)].into_iter().any(|(i, j)| {
        let ends: Vec<Option<usize>> = forms
            .iter()
            .map(|f| {
                let applied: Vec<usize> = f
                    .chars()
                    .rev()
                    .map(|ch| if ch == 'i' { i } else { j })
                    .collect();
                raise_along(g, v, &applied)
            })
            .collect();
        ends[0].is_some() && ends.iter().all(|e| *e == ends[0])
    })
}

/// Outcome of checking the relation table on every vertex of a crystal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationScan {
    /// Vertices with both raising operators defined.
    pub checked: usize,
    /// Count per degree found by the exhaustive search.
    pub by_degree: Vec<(usize, usize)>,
    /// Vertices where search and table disagree: (vertex, found, predicted).
    pub mismatches: Vec<(String, usize, u8)>,
    /// Vertices where the identity of the found degree does not hold.
    pub identity_failures: Vec<String>,
    /// Vertices where the block predicted by the statistics is not the block acted on.
    pub block_failures: Vec<String>,
}

impl RelationScan {
    pub fn passes(&self) -> bool {
        self.mismatches.is_empty()
            && self.identity_failures.is_empty()
            && self.block_failures.is_empty()
    }
}

/// Runs the relation search at every vertex of `B(λ)` and compares with the
/// statistics table and the block rule.
pub fn scan_relations(
    g: &CrystalGraph<C2Tableau>,
    max_len: usize,
) -> Result<RelationScan, CrystalError> {
    let mut scan = RelationScan::default();
    let mut by_degree: std::collections::BTreeMap<usize, usize> = Default::default();
    for v in 0..g.len() {
        let t = &g.vertices[v];
        for i in [1, 2] {
            if t.op(i, Dir::E).is_some() && block_of_action(t, i)? != acted_block(t, i)? {
                scan.block_failures.push(format!("{t} (e_{i})"));
            }
        }
        if g.e_op(v, 1).is_none() || g.e_op(v, 2).is_none() {
            continue;
        }
        scan.checked += 1;
        let rel = find_min_relation(g, v, max_len)?;
        *by_degree.entry(rel.degree).or_default() += 1;
        let predicted = predict_degree(t)?;
        if rel.degree != predicted as usize {
            scan.mismatches.push((t.to_string(), rel.degree, predicted));
        }
        if !relation_identity_holds(g, v, rel.degree) {
            scan.identity_failures.push(t.to_string());
        }
    }
    scan.by_degree = by_degree.into_iter().collect();
    Ok(scan)
}
