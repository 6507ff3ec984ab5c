//! Plactic relations of type D, height-two sliding, null configurations and
//! reduced forms of two-row tableaux.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::letter::{Alphabet, Letter};
use crate::tableau::Tableau;
use crate::words::rectify_word;
use crate::CrystalError;

/// `N(z)`: letters `x` of the column with `x ≤ z` or `x ≥ z̄`.
fn n_count(col: &[Letter], z: Letter, alpha: &Alphabet) -> usize {
    col.iter()
        .filter(|&&x| alpha.le(x, z) || alpha.le(-z, x))
        .count()
}

/// Whether a column (listed top to bottom) is strictly increasing in the
/// partial order, i.e. no entry is `≤` the entry above it.
pub fn is_column(col: &[Letter], n: usize) -> bool {
    let alpha = Alphabet::d(n);
    col.windows(2).all(|w| !alpha.le(w[1], w[0]))
}

/// Whether a column (top to bottom) is admissible: at most `n` letters and
/// `N(z) ≤ z` for every pair `z, z̄` it contains.
pub fn is_admissible_column(col: &[Letter], n: usize) -> bool {
    if col.len() > n || !is_column(col, n) {
        return false;
    }
    let alpha = Alphabet::d(n);
    (1..=n as Letter)
        .filter(|z| col.contains(z) && col.contains(&-z))
        .all(|z| n_count(col, z, &alpha) <= z as usize)
}

/// The contraction of a minimal non-admissible column word (bottom to top),
/// or `None` when the word is not such a column.
fn contract_column_word(word: &[Letter], n: usize) -> Option<Vec<Letter>> {
    let col: Vec<Letter> = word.iter().rev().copied().collect();
    if !is_column(&col, n) || is_admissible_column(&col, n) {
        return None;
    }
    let len = word.len();
    let minimal = (0..len).all(|start| {
        (start + 1..=len).all(|end| {
            end - start == len
                || is_admissible_column(
                    &word[start..end].iter().rev().copied().collect::<Vec<_>>(),
                    n,
                )
        })
    });
    if !minimal {
        return None;
    }
    let alpha = Alphabet::d(n);
    let nl = n as Letter;
    let z = (1..=nl).find(|z| {
        col.contains(z) && col.contains(&-z) && n_count(&col, *z, &alpha) > *z as usize
    })?;
    let mut out = word.to_vec();
    if z < nl {
        out.retain(|&x| x != z && x != -z);
    } else {
        let k = out
            .windows(2)
            .position(|w| w[0].abs() == nl && w[1] == -w[0])?;
        out.drain(k..k + 2);
    }
    Some(out)
}

/// Rewrites of a length-three factor by the relations (1)–(4), both ways.
fn triple_rewrites(w: [Letter; 3], n: usize) -> Vec<[Letter; 3]> {
    let alpha = Alphabet::d(n);
    let nl = n as Letter;
    let le = |a, b| alpha.le(a, b);
    let lt = |a, b| alpha.lt(a, b);
    let mut out = Vec::new();
    // Relation (1): x z y ≡ z x y for x ≤ y < z, and y z x ≡ y x z for x < y ≤ z, x ≠ z̄.
    let [a, b, c] = w;
    // a b c = x z y  ->  z x y
    if le(a, c) && lt(c, b) && a != -b {
        out.push([b, a, c]);
    }
    // a b c = z x y  ->  x z y
    if le(b, c) && lt(c, a) && b != -a {
        out.push([b, a, c]);
    }
    // a b c = y z x  ->  y x z
    if lt(c, a) && le(a, b) && c != -b {
        out.push([a, c, b]);
    }
    // a b c = y x z  ->  y z x
    if lt(b, a) && le(a, c) && b != -c {
        out.push([a, c, b]);
    }
    // Relation (2) with 1 < x < n and x ≤ y ≤ x̄.
    for x in 2..nl {
        let in_range = |y: Letter| le(x, y) && le(y, -x);
        if [a, b] == [x - 1, -(x - 1)] && in_range(c) {
            out.push([-x, x, c]);
        }
        if [a, b] == [-x, x] && in_range(c) {
            out.push([x - 1, -(x - 1), c]);
        }
        if [b, c] == [-x, x] && in_range(a) {
            out.push([a, x - 1, -(x - 1)]);
        }
        if [b, c] == [x - 1, -(x - 1)] && in_range(a) {
            out.push([a, -x, x]);
        }
    }
    // Relations (3) and (4) as explicit pairs.
    let mut pairs: Vec<([Letter; 3], [Letter; 3])> = Vec::new();
    for x in 1..nl {
        pairs.push(([nl, -x, -nl], [nl, -nl, -x]));
        pairs.push(([-nl, -x, nl], [-nl, nl, -x]));
        pairs.push(([x, nl, -nl], [nl, x, -nl]));
        pairs.push(([x, -nl, nl], [-nl, x, nl]));
    }
    let m = nl - 1;
    pairs.push(([-nl, -nl, nl], [-nl, m, -m]));
    pairs.push(([nl, nl, -nl], [nl, m, -m]));
    pairs.push(([m, -m, -nl], [nl, -nl, -nl]));
    pairs.push(([m, -m, nl], [-nl, nl, nl]));
    for (l, r) in pairs {
        if w == l {
            out.push(r);
        }
        if w == r {
            out.push(l);
        }
    }
    out.retain(|r| *r != w);
    out
}

/// Words reachable from `word` by the relations (1)–(4) in both directions
/// and the column contraction (5) in the contracting direction.
pub fn lecouvey_closure(
    word: &[Letter],
    n: usize,
    max_words: usize,
) -> Result<BTreeSet<Vec<Letter>>, CrystalError> {
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..w.len().saturating_sub(2) {
            for r in triple_rewrites([w[k], w[k + 1], w[k + 2]], n) {
                let mut v = w.clone();
                v[k..k + 3].copy_from_slice(&r);
                next.push(v);
            }
        }
        for start in 0..w.len() {
            for end in start + 2..=w.len() {
                if let Some(c) = contract_column_word(&w[start..end], n) {
                    let mut v = w[..start].to_vec();
                    v.extend(c);
                    v.extend_from_slice(&w[end..]);
                    next.push(v);
                }
            }
        }
        for v in next {
            if seen.insert(v.clone()) {
                if seen.len() > max_words {
                    return Err(CrystalError::Input(format!(
                        "closure exceeds {max_words} words"
                    )));
                }
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// A two-row skew tableau whose bottom row starts in the first column and
/// whose top row starts at column `offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTwoRow {
    pub offset: usize,
    pub top: Vec<Letter>,
    pub bottom: Vec<Letter>,
}

/// Why a local slide could not be completed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SlideError {
    #[error("the skew shape is not valid: {0}")]
    Shape(String),
    #[error("the slide needs a column contraction at column {0}")]
    NeedsContraction(usize),
    #[error("the slide produced an invalid filling")]
    Invalid,
}

impl SkewTwoRow {
    pub fn new(offset: usize, top: Vec<Letter>, bottom: Vec<Letter>) -> Self {
        SkewTwoRow {
            offset,
            top,
            bottom,
        }
    }

    /// A straight tableau viewed as a skew tableau with empty inner shape.
    pub fn from_tableau(t: &Tableau) -> Self {
        let top = t.rows.first().cloned().unwrap_or_default();
        let bottom = t.rows.get(1).cloned().unwrap_or_default();
        SkewTwoRow {
            offset: 0,
            top,
            bottom,
        }
    }

    fn top_end(&self) -> usize {
        self.offset + self.top.len()
    }

    fn top_at(&self, c: usize) -> Option<Letter> {
        (c >= self.offset)
            .then(|| self.top.get(c - self.offset).copied())
            .flatten()
    }

    /// Whether the cells form a skew shape with weakly increasing rows and
    /// strictly increasing columns.
    pub fn check(&self, n: usize) -> Result<(), SlideError> {
        let alpha = Alphabet::d(n);
        if self.top_end() < self.bottom.len() {
            return Err(SlideError::Shape(
                "the bottom row is longer than the top row".into(),
            ));
        }
        for row in [&self.top, &self.bottom] {
            if row.windows(2).any(|w| !alpha.le(w[0], w[1])) {
                return Err(SlideError::Shape("row is not weakly increasing".into()));
            }
        }
        for (c, &b) in self.bottom.iter().enumerate() {
            if let Some(a) = self.top_at(c) {
                if alpha.le(b, a) {
                    return Err(SlideError::Shape(format!("column {c} is not increasing")));
                }
            }
        }
        Ok(())
    }

    /// Column word: columns left to right, each bottom to top.
    pub fn column_word(&self) -> Vec<Letter> {
        let width = self.top_end().max(self.bottom.len());
        let mut out = Vec::new();
        for c in 0..width {
            if let Some(&b) = self.bottom.get(c) {
                out.push(b);
            }
            if let Some(a) = self.top_at(c) {
                out.push(a);
            }
        }
        out
    }

    /// The straight tableau, when the offset is zero.
    pub fn to_tableau(&self) -> Option<Tableau> {
        (self.offset == 0).then(|| Tableau::new(vec![self.top.clone(), self.bottom.clone()]))
    }

    /// Moves the top row one column to the right, keeping the plactic class.
    ///
    /// Every top letter jumps over the bottom letter that ends up below its
    /// left neighbour. Scanning left to right, a top letter `a` facing a
    /// bottom letter `ā` is replaced using the relations
    /// `(x−1)(x−1)‾y ≡ x̄xy` (and their `n`, `n̄` analogues), where `y` is
    /// the next top letter.
    pub fn shift_top_right(&self, n: usize) -> Result<SkewTwoRow, SlideError> {
        self.check(n)?;
        let alpha = Alphabet::d(n);
        let nl = n as Letter;
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        let l = bottom.len();
        let a0 = self.offset;
        for j in a0..l.saturating_sub(1) {
            let k = j - a0;
            let a = top[k];
            let b = bottom[j + 1];
            let y = self.top[k + 1];
            if a > 0 && a == -b {
                if a + 1 < nl {
                    let x = a + 1;
                    if !(alpha.le(x, y) && alpha.le(y, -x)) {
                        return Err(SlideError::Invalid);
                    }
                    top[k] = x;
                    bottom[j + 1] = -x;
                } else if a + 1 == nl {
                    if y.abs() != nl {
                        return Err(SlideError::Invalid);
                    }
                    top[k] = y;
                    bottom[j + 1] = -y;
                } else {
                    return Err(SlideError::Invalid);
                }
            }
        }
        let out = SkewTwoRow {
            offset: a0 + 1,
            top,
            bottom,
        };
        out.check(n).map_err(|_| SlideError::Invalid)?;
        Ok(out)
    }

    /// Inverse of [`shift_top_right`](Self::shift_top_right). Letters below
    /// `low` are outside the working alphabet; a move that would need them
    /// requires a column contraction and is reported as such.
    pub fn shift_top_left(&self, n: usize, low: Letter) -> Result<SkewTwoRow, SlideError> {
        self.check(n)?;
        if self.offset == 0 {
            return Err(SlideError::Shape(
                "the top row already starts in the first column".into(),
            ));
        }
        let alpha = Alphabet::d(n);
        let nl = n as Letter;
        let a0 = self.offset - 1;
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        let l = bottom.len();
        if l > 0 && a0 + 1 >= l && self.top_end() - 1 < l {
            return Err(SlideError::Shape(
                "shifting left would leave the bottom row longer".into(),
            ));
        }
        for j in (a0..l.saturating_sub(1)).rev() {
            let k = j - a0;
            let a = top[k];
            let b = bottom[j + 1];
            let y = top[k + 1];
            let special_unbarred = a > 0 && a < nl && b == -a && alpha.le(a, y) && alpha.le(y, -a);
            let special_spin = a.abs() == nl && b == -a && y == a;
            if special_unbarred {
                if a - 1 < low {
                    return Err(SlideError::NeedsContraction(j));
                }
                top[k] = a - 1;
                bottom[j + 1] = -(a - 1);
            } else if special_spin {
                top[k] = nl - 1;
                bottom[j + 1] = -(nl - 1);
            }
        }
        let out = SkewTwoRow {
            offset: a0,
            top,
            bottom,
        };
        out.check(n).map_err(|_| SlideError::Invalid)?;
        Ok(out)
    }
}

/// Rectification by the crystal: the tableau in the same position of an
/// isomorphic component as the column word, computed in the subalphabet
/// `low..=n` (relabelled to a crystal of rank `n − low + 1`).
pub fn rectify_in_subalphabet(
    word: &[Letter],
    n: usize,
    low: Letter,
) -> Result<Tableau, CrystalError> {
    let shift = low - 1;
    let rank = n - shift as usize;
    if rank < 2 {
        return Err(CrystalError::Input("subalphabet too small".into()));
    }
    let relabel: Vec<Letter> = word
        .iter()
        .map(|&x| {
            if x.abs() < low {
                Err(CrystalError::Input(format!(
                    "letter {x} is outside the subalphabet"
                )))
            } else {
                Ok(x.signum() * (x.abs() - shift))
            }
        })
        .collect::<Result<_, _>>()?;
    let t = rectify_word(&relabel, &Alphabet::d(rank))?;
    Ok(Tableau::new(
        t.rows
            .iter()
            .map(|r| r.iter().map(|&x| x.signum() * (x.abs() + shift)).collect())
            .collect(),
    ))
}

/// Whether two length-three factors are equal or related by one of the
/// relations (1)–(4).
fn related(from: [Letter; 3], to: [Letter; 3], n: usize) -> bool {
    from == to || triple_rewrites(from, n).contains(&to)
}

/// Cells of a two-row skew tableau during a slide; `None` marks the hole or
/// an absent cell.
#[derive(Clone)]
struct SlideState {
    top: Vec<Option<Letter>>,
    bottom: Vec<Option<Letter>>,
}

/// Where the hole currently is.
#[derive(Clone, Copy)]
enum Hole {
    Top(usize),
    Bottom(usize),
}

/// Possible next states of a slide, in order of preference, each reached by
/// rewriting at most three consecutive letters of the column word by one of
/// the relations (1)–(4). `Ok(None)` means the hole has left the shape.
fn slide_moves(
    st: &SlideState,
    hole: Hole,
    n: usize,
    low: Letter,
) -> Result<Option<Vec<(SlideState, Hole)>>, SlideError> {
    let alpha = Alphabet::d(n);
    let nl = n as Letter;
    let at = |v: &Vec<Option<Letter>>, c: usize| v.get(c).copied().flatten();
    let mut out = Vec::new();
    match hole {
        Hole::Top(j) => {
            let (b, r, c) = (at(&st.bottom, j), at(&st.top, j + 1), at(&st.bottom, j + 1));
            let move_up = |st: &SlideState, b| {
                let mut s = st.clone();
                s.top[j] = Some(b);
                s.bottom[j] = None;
                (s, Hole::Bottom(j))
            };
            let move_left = |st: &SlideState, r, c: Option<Letter>| {
                let mut s = st.clone();
                s.top[j] = Some(r);
                s.top[j + 1] = None;
                if let Some(c) = c {
                    s.bottom[j + 1] = Some(c);
                }
                (s, Hole::Top(j + 1))
            };
            match (b, r) {
                (None, None) => return Ok(None),
                (None, Some(r)) => out.push(move_left(st, r, None)),
                (Some(b), None) => out.push(move_up(st, b)),
                (Some(b), Some(r)) => match c {
                    None => {
                        if alpha.le(b, r) {
                            out.push(move_up(st, b));
                        } else {
                            out.push(move_left(st, r, None));
                        }
                    }
                    Some(c) => {
                        if c == -r && r > 0 && r < nl {
                            if r - 1 < low {
                                return Err(SlideError::NeedsContraction(j + 1));
                            }
                            if related([b, c, r], [b, r - 1, -(r - 1)], n) {
                                out.push(move_left(st, r - 1, Some(-(r - 1))));
                            }
                        }
                        if c == -r && r.abs() == nl && related([b, c, r], [b, nl - 1, -(nl - 1)], n)
                        {
                            out.push(move_left(st, nl - 1, Some(-(nl - 1))));
                        }
                        if alpha.le(b, r) {
                            out.push(move_up(st, b));
                        }
                        if related([b, c, r], [b, r, c], n) {
                            out.push(move_left(st, r, Some(c)));
                        }
                    }
                },
            }
        }
        Hole::Bottom(k) => {
            let Some(d) = at(&st.bottom, k + 1) else {
                return Ok(None);
            };
            let q = at(&st.top, k).ok_or(SlideError::Invalid)?;
            let q2 = at(&st.top, k + 1).ok_or(SlideError::Invalid)?;
            let mut candidates = Vec::new();
            if d == -q && q > 0 && q + 1 < nl {
                candidates.push((-(q + 1), q + 1));
            }
            if d == -q && q + 1 == nl && q2.abs() == nl {
                candidates.push((-q2, q2));
            }
            candidates.push((d, q));
            for (nb, nt) in candidates {
                if related([q, d, q2], [nb, nt, q2], n) {
                    let mut s = st.clone();
                    s.top[k] = Some(nt);
                    s.bottom[k] = Some(nb);
                    s.bottom[k + 1] = None;
                    out.push((s, Hole::Bottom(k + 1)));
                }
            }
        }
    }
    Ok(Some(out))
}

/// Depth-first search for a sequence of moves that carries the hole out of
/// the shape and leaves a skew tableau.
fn finish_slide(
    st: SlideState,
    hole: Hole,
    offset: usize,
    n: usize,
    low: Letter,
) -> Result<SkewTwoRow, SlideError> {
    let moves = match slide_moves(&st, hole, n, low)? {
        None => {
            let top: Vec<Letter> = st.top.iter().flatten().copied().collect();
            let bottom: Vec<Letter> = st.bottom.iter().flatten().copied().collect();
            let out = SkewTwoRow {
                offset,
                top,
                bottom,
            };
            out.check(n).map_err(|_| SlideError::Invalid)?;
            return Ok(out);
        }
        Some(m) => m,
    };
    let mut last = SlideError::Invalid;
    for (s, h) in moves {
        match finish_slide(s, h, offset, n, low) {
            Ok(out) => return Ok(out),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// One forward slide into the inner corner at the end of the inner row.
///
/// The hole travels right along the top row and may drop to the bottom row.
/// Every move rewrites at most three consecutive letters of the column word
/// and is only made when they are related by one of the relations (1)–(4);
/// moves that meet a letter next to its bar rewrite the pair as
/// `x̄x ≡ (x−1)(x−1)‾` (or the `n`, `n̄` analogue). When the preferred move
/// leads to a dead end the next admissible move is tried.
pub fn forward_slide(skew: &SkewTwoRow, n: usize, low: Letter) -> Result<SkewTwoRow, SlideError> {
    skew.check(n)?;
    if skew.offset == 0 {
        return Err(SlideError::Shape("no inner corner".into()));
    }
    let st = SlideState {
        top: (0..skew.top_end()).map(|c| skew.top_at(c)).collect(),
        bottom: skew.bottom.iter().map(|&b| Some(b)).collect(),
    };
    finish_slide(st, Hole::Top(skew.offset - 1), skew.offset - 1, n, low)
}

/// Rectifies a two-row skew tableau by forward slides.
///
/// Letters below `low` lie outside the working alphabet: a slide that would
/// create them needs a column contraction and is reported as an error. The
/// crystal rectification [`rectify_in_subalphabet`] agrees with this
/// function whenever it returns a tableau.
pub fn slide_two_row(skew: &SkewTwoRow, n: usize, low: Letter) -> Result<Tableau, SlideError> {
    let mut cur = skew.clone();
    cur.check(n)?;
    while cur.offset > 0 {
        cur = forward_slide(&cur, n, low)?;
    }
    let t = cur.to_tableau().expect("offset is zero");
    // Judge the result inside the working alphabet, relabelled to start at 1.
    let shift = low - 1;
    let rank = n - shift as usize;
    let relabel = |x: Letter| x.signum() * (x.abs() - shift);
    let inner = Tableau::new(
        t.rows
            .iter()
            .map(|r| r.iter().map(|&x| relabel(x)).collect())
            .collect(),
    );
    if let Some(c) = (0..inner.width()).find(|&c| !is_admissible_column(&inner.column(c), rank)) {
        return Err(SlideError::NeedsContraction(c));
    }
    if rank >= 4 && !crate::dtableau::is_valid_d(&inner, rank) {
        return Err(SlideError::Invalid);
    }
    Ok(t)
}

/// A null configuration inside a two-row tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NullConfiguration {
    pub size: usize,
    /// First column (from 0).
    pub start: usize,
}

impl NullConfiguration {
    /// The columns `(top, bottom)` of a null configuration of size `k`.
    pub fn columns(size: usize) -> Vec<(Letter, Letter)> {
        let half = size / 2;
        let mut cols = vec![(1, -2); half];
        if size % 2 == 1 {
            cols.push((2, -2));
        }
        cols.extend(std::iter::repeat((2, -1)).take(half));
        cols
    }
}

fn row(t: &Tableau, r: usize) -> Vec<Letter> {
    t.rows.get(r).cloned().unwrap_or_default()
}

/// Locates the longest null configuration that sits directly after the
/// leading `1`s of the top row and leaves only `1̄`s to its right in the
/// bottom row.
pub fn find_null_configuration(t: &Tableau) -> Option<NullConfiguration> {
    let top = row(t, 0);
    let bottom = row(t, 1);
    let ones = top.iter().take_while(|&&x| x == 1).count();
    let width = bottom.len();
    for size in (1..=width).rev() {
        let half = size / 2;
        if half > ones {
            continue;
        }
        let start = ones - half;
        if start + size > width {
            continue;
        }
        let pattern = NullConfiguration::columns(size);
        let matches = pattern
            .iter()
            .enumerate()
            .all(|(k, &(a, b))| top[start + k] == a && bottom[start + k] == b);
        let tail_ok = bottom[start + size..].iter().all(|&x| x == -1) || size == 1;
        if matches && tail_ok {
            return Some(NullConfiguration { size, start });
        }
    }
    None
}

/// The reduced form of a two-row tableau and the bookkeeping of what was removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedForm {
    pub skew: SkewTwoRow,
    /// Leading `1`s of the top row outside the null configuration.
    pub r1: usize,
    /// Size of the null configuration.
    pub r2: usize,
    /// Trailing `1̄`s of the bottom row outside the null configuration.
    pub r3: usize,
}

impl ReducedForm {
    /// Number of `+` marks: `r1 + r2`.
    pub fn t1(&self) -> usize {
        self.r1 + self.r2
    }

    /// Number of `−` marks: `r2 + r3`.
    pub fn t2(&self) -> usize {
        self.r2 + self.r3
    }
}

/// Removes the `1`s, the `1̄`s and the null configuration of a two-row tableau.
pub fn reduced_form(t: &Tableau) -> ReducedForm {
    let top = row(t, 0);
    let bottom = row(t, 1);
    let ones = top.iter().take_while(|&&x| x == 1).count();
    let bars = bottom.iter().rev().take_while(|&&x| x == -1).count();
    match find_null_configuration(t) {
        Some(nc) => {
            let (start, size) = (nc.start, nc.size);
            let half = size / 2;
            let r1 = start;
            let r3 = bars - if size >= 2 { half } else { 0 };
            let skew_top = top[start + size..].to_vec();
            let mut skew_bottom = bottom[..start].to_vec();
            skew_bottom.extend_from_slice(&bottom[start + size..bottom.len() - r3]);
            ReducedForm {
                skew: SkewTwoRow::new(r1 + size, skew_top, skew_bottom),
                r1,
                r2: size,
                r3,
            }
        }
        None => {
            let skew_top = top[ones..].to_vec();
            let skew_bottom = bottom[..bottom.len() - bars].to_vec();
            ReducedForm {
                skew: SkewTwoRow::new(ones, skew_top, skew_bottom),
                r1: ones,
                r2: 0,
                r3: bars,
            }
        }
    }
}

/// Rebuilds a two-row tableau of width `width` from a skew tableau of shape
/// `(width, width − t2) / (t1)` over letters `≥ 2` by adding `1`s, `1̄`s and,
/// when `t1 + t2 > width`, a null configuration.
pub fn refill(skew: &SkewTwoRow, width: usize) -> Result<Tableau, CrystalError> {
    let t1 = skew.offset;
    if skew.top_end() != width || skew.bottom.len() > width {
        return Err(CrystalError::Input(
            "skew tableau does not fit the width".into(),
        ));
    }
    let t2 = width - skew.bottom.len();
    let r2 = (t1 + t2).saturating_sub(width);
    let r1 = t1 - r2;
    let r3 = t2 - r2;
    let nc = NullConfiguration::columns(r2);
    let mut top = vec![1; r1];
    top.extend(nc.iter().map(|c| c.0));
    top.extend_from_slice(&skew.top);
    let mut bottom = skew.bottom[..r1].to_vec();
    bottom.extend(nc.iter().map(|c| c.1));
    bottom.extend_from_slice(&skew.bottom[r1..]);
    bottom.extend(std::iter::repeat(-1).take(r3));
    Ok(Tableau::new(vec![top, bottom]))
}

/// The completely reduced form: the reduced form rectified over the
/// letters `2..=n`, by sliding when the slides go through and through the
/// crystal otherwise.
pub fn completely_reduced_form(t: &Tableau, n: usize) -> Result<Tableau, CrystalError> {
    let red = reduced_form(t);
    match slide_two_row(&red.skew, n, 2) {
        Ok(s) => Ok(s),
        Err(_) => rectify_in_subalphabet(&red.skew.column_word(), n, 2),
    }
}
