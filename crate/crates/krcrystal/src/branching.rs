//! Branching from `D_n` to `D_{n−1}`: ±-diagrams, their highest weight
//! tableaux, and branching component graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::dtableau::{is_valid_d, kashiwara};
use crate::graph::CrystalGraph;
use crate::letter::Letter;
use crate::signature::Dir;
use crate::tableau::Tableau;
use crate::CrystalError;

/// Mark of a cell of a ±-diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mark {
    Empty,
    Plus,
    Minus,
}

/// A chain `inner ⊂ middle ⊂ outer` of partitions with `middle/inner` and
/// `outer/middle` horizontal strips; `+` fills `middle/inner` and `−` fills
/// `outer/middle`. All three are stored with the length of `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlusMinusDiagram {
    pub outer: Vec<usize>,
    pub middle: Vec<usize>,
    pub inner: Vec<usize>,
}

fn is_horizontal_strip(big: &[usize], small: &[usize]) -> bool {
    big.len() == small.len()
        && (0..big.len())
            .all(|i| small[i] <= big[i] && (i + 1 >= big.len() || big[i + 1] <= small[i]))
}

fn trim(p: &[usize]) -> Vec<usize> {
    p.iter().copied().filter(|&x| x > 0).collect()
}

impl PlusMinusDiagram {
    pub fn new(
        outer: Vec<usize>,
        middle: Vec<usize>,
        inner: Vec<usize>,
    ) -> Result<Self, CrystalError> {
        let len = outer.len();
        let pad = |mut v: Vec<usize>| {
            v.resize(len.max(v.len()), 0);
            v
        };
        let (middle, inner) = (pad(middle), pad(inner));
        if middle.len() != len || inner.len() != len {
            return Err(CrystalError::Shape(
                "inner shapes are longer than the outer shape".into(),
            ));
        }
        if !is_horizontal_strip(&outer, &middle) || !is_horizontal_strip(&middle, &inner) {
            return Err(CrystalError::Shape(
                "the marked cells do not form horizontal strips".into(),
            ));
        }
        Ok(PlusMinusDiagram {
            outer,
            middle,
            inner,
        })
    }

    pub fn mark(&self, r: usize, c: usize) -> Option<Mark> {
        let len = *self.outer.get(r)?;
        if c >= len {
            None
        } else if c < self.inner[r] {
            Some(Mark::Empty)
        } else if c < self.middle[r] {
            Some(Mark::Plus)
        } else {
            Some(Mark::Minus)
        }
    }

    pub fn plus_count(&self) -> usize {
        self.middle
            .iter()
            .zip(&self.inner)
            .map(|(m, i)| m - i)
            .sum()
    }

    pub fn minus_count(&self) -> usize {
        self.outer
            .iter()
            .zip(&self.middle)
            .map(|(o, m)| o - m)
            .sum()
    }

    /// `#(+) − #(−)`, the stratum of the component the diagram labels.
    pub fn height(&self) -> i32 {
        self.plus_count() as i32 - self.minus_count() as i32
    }

    pub fn inner_partition(&self) -> Vec<usize> {
        trim(&self.inner)
    }

    pub fn outer_partition(&self) -> Vec<usize> {
        trim(&self.outer)
    }

    /// Cells `(row, column)` marked `−`, rightmost column first.
    fn minus_cells_from_right(&self) -> Vec<(usize, usize)> {
        let mut cells: Vec<(usize, usize)> = (0..self.outer.len())
            .flat_map(|r| (self.middle[r]..self.outer[r]).map(move |c| (r, c)))
            .collect();
        cells.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        cells
    }
}

impl fmt::Display for PlusMinusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.outer.iter().all(|&x| x == 0) {
            return write!(f, "∅");
        }
        let rows: Vec<String> = (0..self.outer.len())
            .filter(|&r| self.outer[r] > 0)
            .map(|r| {
                (0..self.outer[r])
                    .map(|c| match self.mark(r, c) {
                        Some(Mark::Plus) => '+',
                        Some(Mark::Minus) => '-',
                        _ => '.',
                    })
                    .collect()
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Whether every column of `outer` has height congruent to `r` modulo 2,
/// i.e. the complement in an `r`-row rectangle can be tiled by vertical dominos.
pub fn fits_domino_rule(outer: &[usize], r: usize) -> bool {
    let outer = trim(outer);
    if outer.len() > r {
        return false;
    }
    let width = outer.first().copied().unwrap_or(0);
    (0..width).all(|c| outer.iter().filter(|&&x| x > c).count() % 2 == r % 2)
}

/// All ±-diagrams of outer shape `outer`. With `r` given, outer shapes whose
/// columns do not all have the parity of `r` have no diagrams.
pub fn enumerate_pm_diagrams(outer: &[usize], r: Option<usize>) -> Vec<PlusMinusDiagram> {
    let outer = trim(outer);
    if let Some(r) = r {
        if !fits_domino_rule(&outer, r) {
            return Vec::new();
        }
    }
    let len = outer.len();
    let mut out = Vec::new();
    // Rows of `middle` satisfy outer[i+1] ≤ middle[i] ≤ outer[i].
    fn strips(big: &[usize], row: usize, cur: &mut Vec<usize>, acc: &mut Vec<Vec<usize>>) {
        if row == big.len() {
            acc.push(cur.clone());
            return;
        }
        let lo = big.get(row + 1).copied().unwrap_or(0);
        for x in lo..=big[row] {
            cur.push(x);
            strips(big, row + 1, cur, acc);
            cur.pop();
        }
    }
    let mut middles = Vec::new();
    strips(&outer, 0, &mut Vec::new(), &mut middles);
    for middle in middles {
        let mut inners = Vec::new();
        strips(&middle, 0, &mut Vec::new(), &mut inners);
        for inner in inners {
            out.push(PlusMinusDiagram {
                outer: outer.clone(),
                middle: middle.clone(),
                inner,
            });
        }
    }
    debug_assert!(out.iter().all(|d| d.outer.len() == len));
    out.sort();
    out
}

/// The `D_{n−1}` highest weight tableau of shape `outer(D)` attached to a
/// ±-diagram.
///
/// Letters are placed in increasing order: first as many `1`s (top row) and
/// `1̄`s (cells marked `−`, from the right) as possible with `#1 − #1̄` equal
/// to the height of the diagram; then, for each `i ≥ 2`, the empty cells of
/// row `i − 1` receive `i`, and as many `i`s (row `i`) and `ī`s (cells
/// marked `−`, from the right) as possible are added so that `#i − #ī`
/// equals the `(i−1)`-th part of the inner shape. "As many as possible" is
/// subject to the final filling being a legal tableau; when the greedy
/// choice cannot be completed the next smaller one is tried.
pub fn pm_to_hw_tableau(d: &PlusMinusDiagram, n: usize) -> Result<Tableau, CrystalError> {
    let outer = d.outer_partition();
    crate::dtableau::check_partition(&outer, n)?;
    if outer.is_empty() {
        return Ok(Tableau::empty());
    }
    let grid: Vec<Vec<Option<Letter>>> = outer.iter().map(|&l| vec![None; l]).collect();
    let minus = d.minus_cells_from_right();
    let mut target = vec![d.height()];
    target.extend((1..n).map(|i| d.inner.get(i - 1).copied().unwrap_or(0) as i32));
    place(grid, 1, &target, &minus, n).ok_or_else(|| {
        CrystalError::Inconsistent(format!("no highest weight filling for the diagram {d}"))
    })
}

fn count(grid: &[Vec<Option<Letter>>], x: Letter) -> i32 {
    grid.iter().flatten().filter(|&&c| c == Some(x)).count() as i32
}

/// Adjacent filled cells must be weakly increasing along rows and strictly
/// increasing down columns.
fn partially_ordered(grid: &[Vec<Option<Letter>>], n: usize) -> bool {
    let alpha = crate::letter::Alphabet::d(n);
    for (r, row) in grid.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            let Some(x) = x else { continue };
            if let Some(Some(y)) = row.get(c + 1) {
                if !alpha.le(x, *y) {
                    return false;
                }
            }
            if let Some(Some(y)) = grid.get(r + 1).and_then(|next| next.get(c)) {
                if alpha.le(*y, x) {
                    return false;
                }
            }
        }
    }
    true
}

fn place(
    grid: Vec<Vec<Option<Letter>>>,
    i: usize,
    target: &[i32],
    minus: &[(usize, usize)],
    n: usize,
) -> Option<Tableau> {
    if i > n {
        if grid.iter().flatten().any(|c| c.is_none()) {
            return None;
        }
        let t = Tableau::new(
            grid.iter()
                .map(|r| r.iter().map(|c| c.unwrap()).collect())
                .collect(),
        );
        let hw = (2..=n).all(|j| kashiwara(&t, n, j, Dir::E).is_none());
        return (is_valid_d(&t, n) && hw).then_some(t);
    }
    let x = i as Letter;
    let mut grid = grid;
    if i >= 2 {
        if let Some(row) = grid.get_mut(i - 2) {
            for c in row.iter_mut().filter(|c| c.is_none()) {
                *c = Some(x);
            }
        }
    }
    let already = count(&grid, x);
    let free_minus: Vec<(usize, usize)> = minus
        .iter()
        .copied()
        .filter(|&(r, c)| grid[r][c].is_none())
        .collect();
    let row_free: Vec<usize> = grid
        .get(i - 1)
        .map(|row| (0..row.len()).filter(|&c| row[c].is_none()).collect())
        .unwrap_or_default();
    for bars in (0..=free_minus.len()).rev() {
        let plain = target[i - 1] - already + bars as i32;
        if plain < 0 || plain as usize > row_free.len() {
            continue;
        }
        let mut g = grid.clone();
        let mut clash = false;
        for &c in &row_free[..plain as usize] {
            g[i - 1][c] = Some(x);
        }
        for &(r, c) in &free_minus[..bars] {
            if g[r][c].is_some() {
                clash = true;
            }
            g[r][c] = Some(-x);
        }
        if clash || !partially_ordered(&g, n) {
            continue;
        }
        if let Some(t) = place(g, i + 1, target, minus, n) {
            return Some(t);
        }
    }
    None
}

/// A vertex of a branching component graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BCVertex {
    pub id: usize,
    /// `D_{n−1}` highest weight in the coordinates `2..n`, trailing zeros removed.
    pub label: Vec<i32>,
    /// Multiplicity of the letter `1` minus that of `1̄`, constant on the component.
    pub stratum: i32,
    /// Number of crystal vertices in the component (0 for predicted graphs).
    pub size: usize,
}

/// A branching component graph: one vertex per `D_{n−1}` component, with an
/// edge `v → w` when some `b ∈ B(v)` has `f_1(b) ∈ B(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BCGraph {
    pub vertices: Vec<BCVertex>,
    pub edges: BTreeSet<(usize, usize)>,
}

fn trim_label(w: &[i32]) -> Vec<i32> {
    let mut v = w.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Sum of absolute differences of two labels.
pub fn label_distance(a: &[i32], b: &[i32]) -> i32 {
    let len = a.len().max(b.len());
    (0..len)
        .map(|k| (a.get(k).copied().unwrap_or(0) - b.get(k).copied().unwrap_or(0)).abs())
        .sum()
}

impl BCGraph {
    /// Vertex labels per stratum, sorted; strata in decreasing order.
    pub fn strata(&self) -> BTreeMap<i32, Vec<Vec<i32>>> {
        let mut out: BTreeMap<i32, Vec<Vec<i32>>> = BTreeMap::new();
        for v in &self.vertices {
            out.entry(v.stratum).or_default().push(v.label.clone());
        }
        for labels in out.values_mut() {
            labels.sort();
        }
        out
    }

    /// Multiset of labels with multiplicities.
    pub fn label_multiplicities(&self) -> BTreeMap<Vec<i32>, usize> {
        let mut out = BTreeMap::new();
        for v in &self.vertices {
            *out.entry(v.label.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Whether stratum `j` and stratum `−j` carry the same labels.
    pub fn is_symmetric(&self) -> bool {
        let strata = self.strata();
        strata
            .iter()
            .all(|(j, labels)| strata.get(&-j) == Some(labels))
    }

    /// Edges that do not join adjacent strata with labels one box apart.
    pub fn one_box_violations(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                let (va, vb) = (&self.vertices[a], &self.vertices[b]);
                va.stratum != vb.stratum + 1 || label_distance(&va.label, &vb.label) != 1
            })
            .collect()
    }

    /// Disjoint union, with vertex ids renumbered.
    pub fn union(graphs: &[BCGraph]) -> BCGraph {
        let mut out = BCGraph::default();
        for g in graphs {
            let base = out.vertices.len();
            out.vertices.extend(g.vertices.iter().map(|v| BCVertex {
                id: v.id + base,
                ..v.clone()
            }));
            out.edges
                .extend(g.edges.iter().map(|&(a, b)| (a + base, b + base)));
        }
        out
    }

    /// Isomorphism of graphs whose vertices carry `(stratum, label)`.
    pub fn is_isomorphic(&self, other: &BCGraph) -> bool {
        let key = |v: &BCVertex| (v.stratum, v.label.clone());
        let degrees = |g: &BCGraph| {
            let mut d = vec![(0usize, 0usize); g.vertices.len()];
            for &(a, b) in &g.edges {
                d[a].0 += 1;
                d[b].1 += 1;
            }
            d
        };
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let (da, db) = (degrees(self), degrees(other));
        let mut ka: Vec<_> = self.vertices.iter().map(|v| (key(v), da[v.id])).collect();
        let mut kb: Vec<_> = other.vertices.iter().map(|v| (key(v), db[v.id])).collect();
        ka.sort();
        kb.sort();
        if ka != kb {
            return false;
        }
        let n = self.vertices.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            a: &BCGraph,
            b: &BCGraph,
            k: usize,
            map: &mut [usize],
            used: &mut [bool],
            da: &[(usize, usize)],
            db: &[(usize, usize)],
        ) -> bool {
            if k == a.vertices.len() {
                return true;
            }
            let va = &a.vertices[k];
            for cand in 0..b.vertices.len() {
                let vb = &b.vertices[cand];
                if used[cand]
                    || vb.stratum != va.stratum
                    || vb.label != va.label
                    || da[k] != db[cand]
                {
                    continue;
                }
                let consistent = (0..k).all(|u| {
                    a.edges.contains(&(k, u)) == b.edges.contains(&(cand, map[u]))
                        && a.edges.contains(&(u, k)) == b.edges.contains(&(map[u], cand))
                });
                if !consistent {
                    continue;
                }
                map[k] = cand;
                used[cand] = true;
                if extend(a, b, k + 1, map, used, da, db) {
                    return true;
                }
                used[cand] = false;
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used, &da, &db)
    }

    /// Graphviz rendering with one rank per stratum.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=TB;\n  node [shape=box];\n");
        for (j, _) in self.strata().iter().rev() {
            let ids: Vec<String> = self
                .vertices
                .iter()
                .filter(|v| v.stratum == *j)
                .map(|v| format!("v{}", v.id))
                .collect();
            s.push_str(&format!("  {{ rank=same; {} }}\n", ids.join("; ")));
        }
        for v in &self.vertices {
            let label = if v.label.is_empty() {
                "∅".to_string()
            } else {
                format!(
                    "({})",
                    v.label
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            s.push_str(&format!(
                "  v{} [label=\"{} | {}\"];\n",
                v.id, label, v.stratum
            ));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  v{a} -> v{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Components of the colors `2..=n` of a crystal over the colors `1..=n`,
/// with their `D_{n−1}` highest weights and strata, joined by the 1-arrows.
pub fn branch_decompose<P: Clone + Eq + Hash>(
    g: &CrystalGraph<P>,
) -> Result<BCGraph, CrystalError> {
    if g.colors.first() != Some(&1) {
        return Err(CrystalError::Input("the crystal must carry color 1".into()));
    }
    let inner: Vec<usize> = g.colors[1..].to_vec();
    let comp = g.components(&inner);
    let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut hw = vec![usize::MAX; ncomp];
    let mut size = vec![0usize; ncomp];
    for v in 0..g.len() {
        let c = comp[v];
        size[c] += 1;
        if inner.iter().all(|&i| g.e_op(v, i).is_none()) {
            if hw[c] != usize::MAX {
                return Err(CrystalError::Inconsistent(
                    "component with two highest weight vertices".into(),
                ));
            }
            hw[c] = v;
        }
        if g.weights[v][0] != g.weights[comp_first(&comp, c)][0] {
            return Err(CrystalError::Inconsistent(
                "stratum is not constant on a component".into(),
            ));
        }
    }
    let mut order: Vec<usize> = (0..ncomp).collect();
    let label_of = |c: usize| trim_label(&g.weights[hw[c]][1..]);
    order.sort_by(|&a, &b| {
        g.weights[hw[b]][0]
            .cmp(&g.weights[hw[a]][0])
            .then(label_of(b).cmp(&label_of(a)))
            .then(hw[a].cmp(&hw[b]))
    });
    let mut id_of = vec![0; ncomp];
    for (k, &c) in order.iter().enumerate() {
        id_of[c] = k;
    }
    let vertices = order
        .iter()
        .enumerate()
        .map(|(k, &c)| BCVertex {
            id: k,
            label: label_of(c),
            stratum: g.weights[hw[c]][0],
            size: size[c],
        })
        .collect();
    let mut edges = BTreeSet::new();
    for v in 0..g.len() {
        if let Some(w) = g.f_op(v, 1) {
            edges.insert((id_of[comp[v]], id_of[comp[w]]));
        }
    }
    Ok(BCGraph { vertices, edges })
}

fn comp_first(comp: &[usize], c: usize) -> usize {
    comp.iter().position(|&x| x == c).unwrap()
}

/// Predicted branching component graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedBC {
    pub graph: BCGraph,
    /// True when the shape is not a rectangle, so the edges come from the
    /// conjectured product rule.
    pub conjectural: bool,
    /// Whether the product rule's hypothesis on the pieces holds.
    pub hypothesis_holds: bool,
}

fn adjacent(a: &[i32], b: &[i32]) -> bool {
    label_distance(a, b) == 1
}

fn to_label(p: &[usize]) -> Vec<i32> {
    trim_label(&p.iter().map(|&x| x as i32).collect::<Vec<_>>())
}

fn from_strata(
    strata: &BTreeMap<i32, Vec<Vec<i32>>>,
    edge: impl Fn(&BCVertex, &BCVertex) -> bool,
) -> BCGraph {
    let mut vertices = Vec::new();
    for (j, labels) in strata.iter().rev() {
        let mut labels = labels.clone();
        labels.sort_by(|a, b| b.cmp(a));
        for label in labels {
            vertices.push(BCVertex {
                id: vertices.len(),
                label,
                stratum: *j,
                size: 0,
            });
        }
    }
    let mut edges = BTreeSet::new();
    for a in &vertices {
        for b in &vertices {
            if a.stratum == b.stratum + 1 && edge(a, b) {
                edges.insert((a.id, b.id));
            }
        }
    }
    BCGraph { vertices, edges }
}

/// The graph of a `k × s` rectangle: stratum `s` holds the `(k−1) × s`
/// rectangle; stratum `j − 1` holds one copy of each partition inside the
/// rectangle whose first `k − 2` parts equal `s` and which is one box away
/// from a label of stratum `j`; negative strata mirror the positive ones;
/// labels one box apart in consecutive strata are joined.
pub fn rectangle_bc(k: usize, s: usize) -> BCGraph {
    if k == 0 || s == 0 {
        return from_strata(&BTreeMap::from([(0, vec![vec![]])]), |_, _| false);
    }
    let mut strata: BTreeMap<i32, Vec<Vec<i32>>> = BTreeMap::new();
    let top = to_label(&vec![s; k - 1]);
    strata.insert(s as i32, vec![top]);
    // Candidates: partitions inside k × s with the first k − 2 parts equal to s.
    let mut candidates = Vec::new();
    for a in 0..=s {
        for b in 0..=a {
            let mut p = vec![s; k.saturating_sub(2)];
            if k >= 2 {
                p.push(a);
                p.push(b);
            } else if b == 0 {
                p.push(a);
            } else {
                continue;
            }
            candidates.push(to_label(&p));
        }
    }
    candidates.sort();
    candidates.dedup();
    for j in (1..=s as i32).rev() {
        let above = strata[&j].clone();
        let next: Vec<Vec<i32>> = candidates
            .iter()
            .filter(|c| above.iter().any(|a| adjacent(a, c)))
            .cloned()
            .collect();
        strata.insert(j - 1, next);
    }
    for j in 1..=s as i32 {
        let mirrored = strata[&j].clone();
        strata.insert(-j, mirrored);
    }
    from_strata(&strata, |a, b| adjacent(&a.label, &b.label))
}

/// Cartesian product of two graphs: strata add, labels add row by row.
pub fn bc_product(a: &BCGraph, b: &BCGraph) -> BCGraph {
    let nb = b.vertices.len();
    let add = |x: &[i32], y: &[i32]| {
        let len = x.len().max(y.len());
        trim_label(
            &(0..len)
                .map(|k| x.get(k).copied().unwrap_or(0) + y.get(k).copied().unwrap_or(0))
                .collect::<Vec<_>>(),
        )
    };
    let mut pairs: Vec<(usize, usize)> = (0..a.vertices.len())
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .collect();
    let key = |&(i, j): &(usize, usize)| {
        let (va, vb) = (&a.vertices[i], &b.vertices[j]);
        (
            -(va.stratum + vb.stratum),
            std::cmp::Reverse(add(&va.label, &vb.label)),
            i,
            j,
        )
    };
    pairs.sort_by_key(key);
    let pos: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let vertices = pairs
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| BCVertex {
            id: k,
            label: add(&a.vertices[i].label, &b.vertices[j].label),
            stratum: a.vertices[i].stratum + b.vertices[j].stratum,
            size: 0,
        })
        .collect();
    let mut edges = BTreeSet::new();
    for &(x, y) in &a.edges {
        for j in 0..nb {
            edges.insert((pos[&(x, j)], pos[&(y, j)]));
        }
    }
    for &(x, y) in &b.edges {
        for i in 0..a.vertices.len() {
            edges.insert((pos[&(i, x)], pos[&(i, y)]));
        }
    }
    BCGraph { vertices, edges }
}

/// Splits a partition into its tallest rectangle and the remainder.
fn split_tallest(shape: &[usize]) -> ((usize, usize), Vec<usize>) {
    let k = shape.len();
    let s = shape[k - 1];
    let rest: Vec<usize> = shape.iter().map(|&x| x - s).filter(|&x| x > 0).collect();
    ((k, s), rest)
}

/// The predicted branching component graph of `B(shape)`: the rectangle
/// rule for rectangles, and the product of the pieces (tallest rectangle
/// first) otherwise.
pub fn predicted_bc(shape: &[usize]) -> PredictedBC {
    let shape = trim(shape);
    if shape.is_empty() {
        return PredictedBC {
            graph: rectangle_bc(0, 0),
            conjectural: false,
            hypothesis_holds: true,
        };
    }
    let ((k, s), rest) = split_tallest(&shape);
    if rest.is_empty() {
        return PredictedBC {
            graph: rectangle_bc(k, s),
            conjectural: false,
            hypothesis_holds: true,
        };
    }
    let inner = predicted_bc(&rest);
    let hypothesis = rest.len() + 2 <= k && inner.hypothesis_holds;
    PredictedBC {
        graph: bc_product(&rectangle_bc(k, s), &inner.graph),
        conjectural: true,
        hypothesis_holds: hypothesis,
    }
}

/// σ̌ on ±-diagrams of outer shape inside an `r × s` rectangle, column by
/// column (columns of height 0 included): empty columns of height `i < r`
/// become columns of height `i + 2` with a `±` pair, `±` columns of height
/// `i + 2` become empty columns of height `i`, `+` and `−` are exchanged,
/// and empty columns of full height `r` are kept.
pub fn pm_sigma(
    d: &PlusMinusDiagram,
    r: usize,
    s: usize,
) -> Result<PlusMinusDiagram, CrystalError> {
    let outer = d.outer_partition();
    if !fits_domino_rule(&outer, r) || outer.first().copied().unwrap_or(0) > s {
        return Err(CrystalError::Shape(format!(
            "{d} does not fit the {r} × {s} domino rule"
        )));
    }
    // Column data (height, has +, has −); + and − can only sit at the bottom two cells.
    let col_height = |p: &[usize], c: usize| p.iter().filter(|&&x| x > c).count();
    let mut cols: Vec<(usize, bool, bool)> = (0..s)
        .map(|c| {
            let h = col_height(&d.outer, c);
            let hm = col_height(&d.middle, c);
            let hi = col_height(&d.inner, c);
            (h, hm > hi, h > hm)
        })
        .collect();
    // Transform each column, then rebuild the partitions by sorting columns.
    for col in cols.iter_mut() {
        let (h, plus, minus) = *col;
        *col = match (plus, minus) {
            (false, false) if h == r => (h, false, false),
            (false, false) => (h + 2, true, true),
            (true, true) => (h - 2, false, false),
            (true, false) => (h, false, true),
            (false, true) => (h, true, false),
        };
    }
    // Rebuild the three partitions from the column heights, sorting columns
    // so that the partitions are read off by conjugation.
    let mut triples: Vec<(usize, usize, usize)> = cols
        .iter()
        .map(|&(h, plus, minus)| {
            let hm = if minus { h - 1 } else { h };
            let hi = if plus { hm - 1 } else { hm };
            (h, hm, hi)
        })
        .collect();
    triples.sort_by(|a, b| b.cmp(a));
    let rows = triples.iter().map(|t| t.0).max().unwrap_or(0);
    let conj = |sel: &dyn Fn(&(usize, usize, usize)) -> usize| -> Vec<usize> {
        (0..rows)
            .map(|row| triples.iter().filter(|t| sel(t) > row).count())
            .collect()
    };
    let outer = conj(&|t| t.0);
    let middle = conj(&|t| t.1);
    let inner = conj(&|t| t.2);
    PlusMinusDiagram::new(outer, middle, inner)
}
