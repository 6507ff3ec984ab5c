//! The affine crystals `B̃^{2,s}` of type `D_n^{(1)}`.
//!
//! Vertices are `2 × s` tableaux that satisfy the row, column and spin-pair
//! rules but may contain runs of columns `a/ā`. Dropping the maximal such run
//! identifies them with the classical crystal `⊕_{k=0}^{s} B(kϖ₂)`, and
//! filling inverts the drop. The zero arrows are `f₀ = σ f₁ σ`, where the
//! involution `σ` combines the embeddings `ι` between the components
//! `B(kϖ₂)` with the involution `⋄` that flips the stratum of a tableau.
//!
//! Tensor products follow the convention `b₂ ⊗ b₁`: `f_i` acts on `b₂` when
//! `ε_i(b₂) ≥ φ_i(b₁)` and on `b₁` otherwise. This is the opposite of the
//! order used by Kashiwara.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::dtableau::{generate_b_default, is_valid_d, kashiwara, weight};
use crate::graph::CrystalGraph;
use crate::letter::{Alphabet, Letter};
use crate::plactic::{reduced_form, refill};
use crate::signature::Dir;
use crate::tableau::Tableau;
use crate::CrystalError;

/// A vertex of `B̃^{2,s}`: a tableau with two rows of length `s` (or the
/// empty tableau when `s = 0`).
pub type AffineTableau = Tableau;

fn rows_of(t: &Tableau) -> (Vec<Letter>, Vec<Letter>) {
    (
        t.rows.first().cloned().unwrap_or_default(),
        t.rows.get(1).cloned().unwrap_or_default(),
    )
}

fn from_rows(top: Vec<Letter>, bottom: Vec<Letter>) -> Tableau {
    Tableau::new(vec![top, bottom])
}

/// The tableau `(1/1̄)^s`.
pub fn empty_configuration(s: usize) -> AffineTableau {
    from_rows(vec![1; s], vec![-1; s])
}

/// The classical highest weight vector `u_k = (1/2)^k (1/1̄)^{s−k}` of
/// `B(kϖ₂) ⊂ B̃^{2,s}`.
pub fn u_k(k: usize, s: usize) -> AffineTableau {
    let mut bottom = vec![2; k];
    bottom.extend(std::iter::repeat(-1).take(s - k));
    from_rows(vec![1; s], bottom)
}

fn check_grid(t: &Tableau, n: usize, s: usize) -> Result<(), CrystalError> {
    let (top, bottom) = rows_of(t);
    if t.rows.len() > 2 || top.len() != s || bottom.len() != s {
        return Err(CrystalError::Shape(format!("{t} is not a 2 × {s} grid")));
    }
    let alpha = Alphabet::d(n);
    if let Some(&x) = top.iter().chain(&bottom).find(|&&x| !alpha.contains(x)) {
        return Err(CrystalError::Input(format!(
            "letter {x} is outside the rank {n} alphabet"
        )));
    }
    Ok(())
}

/// A broken tableau condition and the columns (from 0) involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineViolation {
    /// 1: rows weakly increase; 2: columns increase; 3: no `a` next to
    /// `a/ā` and no `a/ā` next to `ā`; 4: no `(n−1)/n … n/(n−1)‾` or
    /// `(n−1)/n̄ … n̄/(n−1)‾`; 5: no column `1/1̄`.
    pub condition: u8,
    pub columns: Vec<usize>,
}

/// Result of [`validate_affine`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AffineReport {
    /// Violations of conditions 1, 2 and 4, which affine tableaux satisfy.
    pub affine: Vec<AffineViolation>,
    /// Violations of conditions 3 and 5, which only classical tableaux satisfy.
    pub classical_only: Vec<AffineViolation>,
}

impl AffineReport {
    pub fn is_affine(&self) -> bool {
        self.affine.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.affine.is_empty() && self.classical_only.is_empty()
    }
}

/// Checks the affine tableau conditions of a `2 × s` grid.
///
/// Condition 4 is checked for columns at any distance: without condition 3
/// a column `(n−1)/(n−1)‾` may sit between the two offending columns, so the
/// adjacent form of the rule is not enough.
pub fn validate_affine(t: &Tableau, n: usize, s: usize) -> Result<AffineReport, CrystalError> {
    check_grid(t, n, s)?;
    let alpha = Alphabet::d(n);
    let (top, bottom) = rows_of(t);
    let nl = n as Letter;
    let mut rep = AffineReport::default();
    for c in 0..s.saturating_sub(1) {
        if !alpha.le(top[c], top[c + 1]) || !alpha.le(bottom[c], bottom[c + 1]) {
            rep.affine.push(AffineViolation {
                condition: 1,
                columns: vec![c, c + 1],
            });
        }
    }
    for c in 0..s {
        if alpha.le(bottom[c], top[c]) {
            rep.affine.push(AffineViolation {
                condition: 2,
                columns: vec![c],
            });
        }
    }
    let spin_pairs = [
        ((nl - 1, nl), (nl, -(nl - 1))),
        ((nl - 1, -nl), (-nl, -(nl - 1))),
    ];
    for (left, right) in spin_pairs {
        for i in 0..s {
            for j in i + 1..s {
                if (top[i], bottom[i]) == left && (top[j], bottom[j]) == right {
                    rep.affine.push(AffineViolation {
                        condition: 4,
                        columns: vec![i, j],
                    });
                }
            }
        }
    }
    for c in 0..s.saturating_sub(1) {
        let a = top[c + 1];
        if top[c] == a && bottom[c + 1] == -a {
            rep.classical_only.push(AffineViolation {
                condition: 3,
                columns: vec![c, c + 1],
            });
        }
        let a = top[c];
        if bottom[c] == -a && bottom[c + 1] == -a {
            rep.classical_only.push(AffineViolation {
                condition: 3,
                columns: vec![c, c + 1],
            });
        }
    }
    for c in 0..s {
        if top[c] == 1 && bottom[c] == -1 {
            rep.classical_only.push(AffineViolation {
                condition: 5,
                columns: vec![c],
            });
        }
    }
    Ok(rep)
}

/// Which flank makes a run of `a/ā` columns an `a`-configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AConfigShape {
    /// The column on the left has top letter `a`.
    LeftFlank,
    /// The column on the right has bottom letter `ā`.
    RightFlank,
    /// Neither flank matches; one column of the run stays behind.
    Interior,
}

/// The removable run of `a/ā` columns of an affine tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AConfiguration {
    /// The letter `a` (one of `1..n` or `n̄`).
    pub letter: Letter,
    /// Number `m` of columns removed by the drop map.
    pub size: usize,
    /// First removed column (from 0).
    pub start: usize,
    pub shape: AConfigShape,
}

/// The unique `a`-configuration of an affine tableau that is neither
/// classical nor `(1/1̄)^s`; `None` for those two cases.
pub fn find_a_configuration(t: &Tableau, n: usize) -> Result<Option<AConfiguration>, CrystalError> {
    let (top, bottom) = rows_of(t);
    let s = top.len();
    check_grid(t, n, s)?;
    if s == 0 || t == &empty_configuration(s) || is_valid_d(t, n) {
        return Ok(None);
    }
    let mut found = Vec::new();
    let mut c = 0;
    while c < s {
        let a = top[c];
        if bottom[c] != -a {
            c += 1;
            continue;
        }
        let start = c;
        while c < s && top[c] == a && bottom[c] == -a {
            c += 1;
        }
        let len = c - start;
        let left = start > 0 && top[start - 1] == a;
        let right = c < s && bottom[c] == -a;
        let (size, shape) = if left {
            (len, AConfigShape::LeftFlank)
        } else if right {
            (len, AConfigShape::RightFlank)
        } else if len >= 2 {
            (len - 1, AConfigShape::Interior)
        } else {
            continue;
        };
        found.push(AConfiguration {
            letter: a,
            size,
            start,
            shape,
        });
    }
    match found.len() {
        1 => Ok(Some(found[0])),
        0 => Err(CrystalError::Inconsistent(format!(
            "{t} has no a-configuration"
        ))),
        _ => Err(CrystalError::Inconsistent(format!(
            "{t} has {} a-configurations",
            found.len()
        ))),
    }
}

/// The drop map from affine tableaux to `⊕_k B(kϖ₂)`.
pub fn drop(t: &AffineTableau, n: usize) -> Result<Tableau, CrystalError> {
    let s = t.width();
    check_grid(t, n, s)?;
    if s == 0 || t == &empty_configuration(s) {
        return Ok(Tableau::empty());
    }
    let Some(cfg) = find_a_configuration(t, n)? else {
        return Ok(t.clone());
    };
    let (mut top, mut bottom) = rows_of(t);
    top.drain(cfg.start..cfg.start + cfg.size);
    bottom.drain(cfg.start..cfg.start + cfg.size);
    let out = from_rows(top, bottom);
    if !out.is_empty() && !is_valid_d(&out, n) {
        return Err(CrystalError::Inconsistent(format!(
            "dropping {t} gave the invalid tableau {out}"
        )));
    }
    Ok(out)
}

fn insert_columns(t: &Tableau, at: usize, col: (Letter, Letter), count: usize) -> Tableau {
    let (mut top, mut bottom) = rows_of(t);
    top.splice(at..at, std::iter::repeat(col.0).take(count));
    bottom.splice(at..at, std::iter::repeat(col.1).take(count));
    from_rows(top, bottom)
}

/// Every tableau produced by inserting `s − k` columns at a filling location
/// of `t`, scanning left to right; empty when `t` has no filling location.
pub fn fill_candidates(t: &Tableau, s: usize, n: usize) -> Vec<AffineTableau> {
    let alpha = Alphabet::d(n);
    let (a, b) = rows_of(t);
    let k = a.len();
    let m = s.saturating_sub(k);
    let mut out: Vec<AffineTableau> = Vec::new();
    for i in 0..k.saturating_sub(1) {
        if alpha.le(b[i], -a[i]) && alpha.le(-a[i], b[i + 1]) {
            out.push(insert_columns(t, i + 1, (a[i], -a[i]), m));
        }
        if alpha.le(a[i], -b[i + 1]) && alpha.le(-b[i + 1], a[i + 1]) {
            out.push(insert_columns(t, i + 1, (-b[i + 1], b[i + 1]), m));
        }
    }
    out
}

/// The fill map, inverse of [`drop`]: widens a classical tableau of width
/// `k ≤ s` to an affine tableau of width `s`.
pub fn fill(t: &Tableau, s: usize, n: usize) -> Result<AffineTableau, CrystalError> {
    let k = t.width();
    if k > s {
        return Err(CrystalError::Input(format!("{t} is wider than {s}")));
    }
    if k == s {
        return Ok(t.clone());
    }
    if k == 0 {
        return Ok(empty_configuration(s));
    }
    let (a, b) = rows_of(t);
    let m = s - k;
    let mut candidates = fill_candidates(t, s, n);
    candidates.push(insert_columns(t, 0, (-b[0], b[0]), m));
    candidates.push(insert_columns(t, k, (a[k - 1], -a[k - 1]), m));
    for c in candidates {
        if validate_affine(&c, n, s)?.is_affine() && drop(&c, n).ok().as_ref() == Some(t) {
            return Ok(c);
        }
    }
    Err(CrystalError::Inconsistent(format!(
        "no filling location for {t} at width {s}"
    )))
}

/// `Υ_{s'}^{s} = F_{2,s} ∘ D_{2,s'}`: the inclusion of `B̃^{2,s'}` in `B̃^{2,s}`.
pub fn upsilon(
    t: &AffineTableau,
    s_from: usize,
    s: usize,
    n: usize,
) -> Result<AffineTableau, CrystalError> {
    if s_from > s {
        return Err(CrystalError::Input(format!(
            "cannot include width {s_from} in width {s}"
        )));
    }
    check_grid(t, n, s_from)?;
    fill(&drop(t, n)?, s, n)
}

/// Stratum of a tableau: its `ε₁`-coordinate `#1 − #1̄`.
pub fn stratum_of(t: &Tableau, n: usize) -> i32 {
    if t.is_empty() {
        0
    } else {
        weight(t, n)[0]
    }
}

fn iota_up(t: &Tableau, d: usize, n: usize) -> Result<Tableau, CrystalError> {
    let width = t.width() + d;
    let mut skew = reduced_form(t).skew;
    for _ in 0..d {
        skew = skew
            .shift_top_right(n)
            .map_err(|e| CrystalError::Inconsistent(format!("embedding {t}: {e}")))?;
    }
    let out = refill(&skew, width)?;
    if !is_valid_d(&out, n) {
        return Err(CrystalError::Inconsistent(format!(
            "embedding {t} gave the invalid tableau {out}"
        )));
    }
    Ok(out)
}

/// The embedding `ι_{i₁}^{i₂}` between the classical components
/// `B(i₁ϖ₂)` and `B(i₂ϖ₂)`, computed from the tableau by reduced forms and
/// two-row slides.
///
/// For `i₂ > i₁` the `1`s, `1̄`s and null configuration are stripped, the
/// remaining skew tableau slides `i₂ − i₁` steps and is refilled to width
/// `i₂`. For `i₂ < i₁` the steps run backwards, and `None` means that `t` is
/// not in the image of `ι_{i₂}^{i₁}`.
pub fn iota(t: &Tableau, i1: usize, i2: usize, n: usize) -> Result<Option<Tableau>, CrystalError> {
    if t.width() != i1 || !(t.is_empty() || is_valid_d(t, n)) {
        return Err(CrystalError::Input(format!(
            "{t} is not a tableau of B({i1}ϖ₂)"
        )));
    }
    if i2 >= i1 {
        return iota_up(t, i2 - i1, n).map(Some);
    }
    let d = i1 - i2;
    let red = reduced_form(t);
    if red.t1() < d || red.t2() < d {
        return Ok(None);
    }
    let mut skew = red.skew;
    for _ in 0..d {
        match skew.shift_top_left(n, 2) {
            Ok(next) => skew = next,
            Err(_) => return Ok(None),
        }
    }
    let Ok(cand) = refill(&skew, i2) else {
        return Ok(None);
    };
    if !(cand.is_empty() || is_valid_d(&cand, n)) {
        return Ok(None);
    }
    Ok((iota_up(&cand, d, n)? == *t).then_some(cand))
}

/// How [`B2s`] computes the embeddings `ι`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum IotaMethod {
    /// Reduced forms and slides ([`iota`]).
    #[default]
    Slides,
    /// Transport along the `{2..n}`-components of the classical crystals.
    Transport,
}

/// The classical crystals `B(kϖ₂)`, `k ≤ s`, and the operations of `B̃^{2,s}`.
pub struct B2s {
    pub n: usize,
    pub s: usize,
    pub method: IotaMethod,
    /// `classical[k]` is `B(kϖ₂)`.
    pub classical: Vec<CrystalGraph<Tableau>>,
    /// For each `k`, the `{2..n}`-highest weight vertices of `B(kϖ₂)` by weight.
    inner_hw: Vec<HashMap<Vec<i32>, usize>>,
}

impl fmt::Debug for B2s {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("B2s")
            .field("n", &self.n)
            .field("s", &self.s)
            .field("method", &self.method)
            .finish()
    }
}

impl B2s {
    pub fn new(n: usize, s: usize) -> Result<Self, CrystalError> {
        Self::with_method(n, s, IotaMethod::default())
    }

    pub fn with_method(n: usize, s: usize, method: IotaMethod) -> Result<Self, CrystalError> {
        if n < 4 {
            return Err(CrystalError::Input(format!(
                "B^(2,s) needs rank at least 4, got {n}"
            )));
        }
        let inner: Vec<usize> = (2..=n).collect();
        let mut classical = Vec::with_capacity(s + 1);
        let mut inner_hw = Vec::with_capacity(s + 1);
        for k in 0..=s {
            let shape = if k == 0 { vec![] } else { vec![k, k] };
            let g = generate_b_default(&shape, n)?;
            let mut by_weight = HashMap::new();
            for v in g.highest_weight_vertices(&inner) {
                if by_weight.insert(g.weights[v].clone(), v).is_some() {
                    return Err(CrystalError::Inconsistent(format!(
                        "weight {:?} labels two {{2..n}}-components of B({k}ϖ₂)",
                        g.weights[v]
                    )));
                }
            }
            classical.push(g);
            inner_hw.push(by_weight);
        }
        Ok(B2s {
            n,
            s,
            method,
            classical,
            inner_hw,
        })
    }

    fn inner_colors(&self) -> Vec<usize> {
        (2..=self.n).collect()
    }

    fn locate(&self, t: &Tableau) -> Result<(usize, usize), CrystalError> {
        let k = t.width();
        let g = self.classical.get(k).ok_or(CrystalError::UnknownVertex)?;
        let v = g.index_of(t).ok_or(CrystalError::UnknownVertex)?;
        Ok((k, v))
    }

    /// Moves `t` to the `{2..n}`-component of `B(k₂ϖ₂)` whose highest weight
    /// is `target(weight)`, keeping its position in the component.
    fn transport<F>(
        &self,
        t: &Tableau,
        k2: usize,
        target: F,
    ) -> Result<Option<Tableau>, CrystalError>
    where
        F: Fn(&[i32]) -> Vec<i32>,
    {
        let (k, v) = self.locate(t)?;
        let g = &self.classical[k];
        let (path, hw) = g.raise_to_highest(v, &self.inner_colors());
        let w = target(&g.weights[hw]);
        let g2 = &self.classical[k2];
        let Some(&hw2) = self.inner_hw[k2].get(&w) else {
            return Ok(None);
        };
        let out = g2.lower_along(hw2, &path).ok_or_else(|| {
            CrystalError::Inconsistent(format!("components of {t} and {w:?} differ"))
        })?;
        Ok(Some(g2.vertices[out].clone()))
    }

    /// `ι_{i₁}^{i₂}` by transport: the vertex in the same position of the
    /// `{2..n}`-component of `B(i₂ϖ₂)` with the same highest weight.
    pub fn iota_transport(
        &self,
        t: &Tableau,
        i1: usize,
        i2: usize,
    ) -> Result<Option<Tableau>, CrystalError> {
        if t.width() != i1 || i2 > self.s {
            return Err(CrystalError::Input(format!(
                "{t} cannot be embedded from {i1} to {i2}"
            )));
        }
        self.transport(t, i2, |w| w.to_vec())
    }

    /// `ι_{i₁}^{i₂}` by the configured method.
    pub fn iota(&self, t: &Tableau, i1: usize, i2: usize) -> Result<Option<Tableau>, CrystalError> {
        match self.method {
            IotaMethod::Slides => iota(t, i1, i2, self.n),
            IotaMethod::Transport => self.iota_transport(t, i1, i2),
        }
    }

    /// The involution `⋄` on `B(kϖ₂)`: the vertex in the same position of
    /// the complementary `{2..n}`-component, which has the same label and
    /// the opposite stratum.
    pub fn bcdual(&self, t: &Tableau) -> Result<Tableau, CrystalError> {
        let k = t.width();
        self.transport(t, k, |w| {
            let mut w = w.to_vec();
            w[0] = -w[0];
            w
        })?
        .ok_or_else(|| {
            CrystalError::Inconsistent(format!("the component of {t} has no complement"))
        })
    }

    /// Smallest `ℓ` with `ι_k^ℓ(t) ≠ 0`: the first part of the label of the
    /// `{2..n}`-component of `t`.
    pub fn min_iota_index(&self, t: &Tableau) -> Result<usize, CrystalError> {
        let k = t.width();
        let mut l = k;
        while l > 0 && self.iota(t, k, l - 1)?.is_some() {
            l -= 1;
        }
        Ok(l)
    }

    /// The involution `σ` of `B̃^{2,s}`: `σ(T) = ι_k^{s+ℓ−k}(D(T)^⋄)`, filled back to width `s`.
    pub fn sigma(&self, t: &AffineTableau) -> Result<AffineTableau, CrystalError> {
        let d = drop(t, self.n)?;
        let k = d.width();
        let l = self.min_iota_index(&d)?;
        let target = self.s + l - k;
        let dual = self.bcdual(&d)?;
        let image = self
            .iota(&dual, k, target)?
            .ok_or_else(|| CrystalError::Inconsistent(format!("σ is undefined on {t}")))?;
        fill(&image, self.s, self.n)
    }

    /// `e_i` or `f_i` for `i = 0..=n`; color 0 is `σ ∘ (e₁ or f₁) ∘ σ`.
    pub fn op(
        &self,
        t: &AffineTableau,
        i: usize,
        dir: Dir,
    ) -> Result<Option<AffineTableau>, CrystalError> {
        if i > self.n {
            return Err(CrystalError::Input(format!(
                "color {i} is outside 0..={}",
                self.n
            )));
        }
        if i == 0 {
            let Some(x) = self.classical_op(&self.sigma(t)?, 1, dir)? else {
                return Ok(None);
            };
            return self.sigma(&x).map(Some);
        }
        self.classical_op(t, i, dir)
    }

    fn classical_op(
        &self,
        t: &AffineTableau,
        i: usize,
        dir: Dir,
    ) -> Result<Option<AffineTableau>, CrystalError> {
        let d = drop(t, self.n)?;
        match kashiwara(&d, self.n, i, dir) {
            Some(x) => fill(&x, self.s, self.n).map(Some),
            None => Ok(None),
        }
    }

    /// All vertices of `B̃^{2,s}`: the filled vertices of every `B(kϖ₂)`.
    pub fn vertices(&self) -> Result<Vec<(usize, AffineTableau)>, CrystalError> {
        let mut out = Vec::new();
        for (k, g) in self.classical.iter().enumerate() {
            for t in &g.vertices {
                out.push((k, fill(t, self.s, self.n)?));
            }
        }
        Ok(out)
    }

    /// The tableau `T_λ` with `ε(T_λ) = φ(T_λ) = λ` for a level-`s` dominant
    /// weight given by its coordinates `⟨h_i, λ⟩`, `i = 0..=n`.
    ///
    /// The middle columns carry `⟨h_{n−1}, λ⟩` and `⟨h_n, λ⟩`, flanked by
    /// `(i−1)/i` columns on the left and their bars on the right; the result
    /// is widened by the fill map and embedded by `ι` to absorb `⟨h₁, λ⟩`.
    pub fn construct_minimal(&self, lambda: &[u32]) -> Result<AffineTableau, CrystalError> {
        let n = self.n;
        if lambda.len() != n + 1 {
            return Err(CrystalError::Input(format!(
                "a weight of rank {n} has {} coordinates",
                n + 1
            )));
        }
        if level_of(lambda) != self.s as u32 {
            return Err(CrystalError::Input(format!(
                "{lambda:?} does not have level {}",
                self.s
            )));
        }
        let k: Vec<usize> = lambda.iter().map(|&x| x as usize).collect();
        let nl = n as Letter;
        let (mut km1, mut kn, mut spin) = (k[n - 1], k[n], nl);
        if kn < km1 {
            std::mem::swap(&mut km1, &mut kn);
            spin = -nl;
        }
        let mut cols: Vec<(Letter, Letter)> = Vec::new();
        for i in 2..=n - 2 {
            cols.extend(std::iter::repeat((i as Letter - 1, i as Letter)).take(k[i]));
        }
        let half = (kn - km1) / 2;
        cols.extend(std::iter::repeat((nl - 2, nl - 1)).take(km1));
        cols.extend(std::iter::repeat((nl - 1, spin)).take(half));
        if (kn + km1) % 2 == 1 {
            cols.push((-spin, spin));
        }
        cols.extend(std::iter::repeat((-spin, -(nl - 1))).take(half));
        cols.extend(std::iter::repeat((-(nl - 1), -(nl - 2))).take(km1));
        for i in (2..=n - 2).rev() {
            cols.extend(std::iter::repeat((-(i as Letter), -(i as Letter - 1))).take(k[i]));
        }
        let core = from_rows(
            cols.iter().map(|c| c.0).collect(),
            cols.iter().map(|c| c.1).collect(),
        );
        if !(core.is_empty() || is_valid_d(&core, n)) {
            return Err(CrystalError::Inconsistent(format!(
                "the middle-out filling {core} is not a tableau"
            )));
        }
        let w = core.width();
        let image = self
            .iota(&core, w, w + k[1])?
            .ok_or_else(|| CrystalError::Inconsistent(format!("cannot embed {core}")))?;
        fill(&image, self.s, n)
    }

    /// Builds the affine crystal with colors `0..=n`.
    pub fn build(&self) -> Result<AffineCrystal, CrystalError> {
        let mut verts = self.vertices()?;
        verts.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        let index: HashMap<&Tableau, usize> =
            verts.iter().enumerate().map(|(v, (_, t))| (t, v)).collect();
        if index.len() != verts.len() {
            return Err(CrystalError::Inconsistent(
                "the fill map is not injective".into(),
            ));
        }
        let colors: Vec<usize> = (0..=self.n).collect();
        let mut f = vec![vec![None; colors.len()]; verts.len()];
        for (v, (_, t)) in verts.iter().enumerate() {
            for &i in &colors {
                if let Some(x) = self.op(t, i, Dir::F)? {
                    let w = *index.get(&x).ok_or_else(|| {
                        CrystalError::Inconsistent(format!("f_{i}({t}) = {x} is not a vertex"))
                    })?;
                    if self.op(&x, i, Dir::E)?.as_ref() != Some(t) {
                        return Err(CrystalError::Inconsistent(format!(
                            "e_{i} f_{i} fails at {t}"
                        )));
                    }
                    f[v][i] = Some(w);
                }
            }
        }
        let weights = verts
            .iter()
            .map(|(_, t)| {
                if t.is_empty() {
                    vec![0; self.n]
                } else {
                    weight(t, self.n)
                }
            })
            .collect();
        let component: Vec<usize> = verts.iter().map(|(k, _)| *k).collect();
        let stratum = verts.iter().map(|(_, t)| stratum_of(t, self.n)).collect();
        let vertices = verts.into_iter().map(|(_, t)| t).collect();
        let graph = CrystalGraph::from_f_edges(colors, vertices, weights, f)?;
        Ok(AffineCrystal {
            n: self.n,
            s: self.s,
            graph,
            component,
            stratum,
        })
    }
}

/// `⟨c, λ⟩` for a weight given by its coordinates `⟨h_i, λ⟩`, `i = 0..=n`.
pub fn level_of(coords: &[u32]) -> u32 {
    let n = coords.len() - 1;
    coords
        .iter()
        .enumerate()
        .map(|(i, &x)| if i <= 1 || i + 1 >= n { x } else { 2 * x })
        .sum()
}

/// The dominant level-`ℓ` weights `(P_cl^+)_ℓ` of `D_n^{(1)}`, as coordinate vectors.
pub fn level_weights(n: usize, level: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i > n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let c = if i <= 1 || i + 1 >= n { 1 } else { 2 };
        for x in 0..=left / c {
            cur.push(x);
            go(i + 1, n, left - c * x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, level, &mut Vec::new(), &mut out);
    out
}

/// The affine crystal `B̃^{2,s}` with colors `0..=n`.
#[derive(Clone, Debug)]
pub struct AffineCrystal {
    pub n: usize,
    pub s: usize,
    /// Vertices in order of decreasing classical component, then tableau order;
    /// weights are classical (`ε`-coordinates).
    pub graph: CrystalGraph<AffineTableau>,
    /// The `k` with the vertex in `B(kϖ₂)`.
    pub component: Vec<usize>,
    /// The `ε₁`-coordinate of the weight.
    pub stratum: Vec<i32>,
}

/// Serialized vertex of an affine crystal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineVertexDoc {
    pub tableau: Tableau,
    pub component: usize,
    pub stratum: i32,
    pub energy: i32,
    pub weight: Vec<i32>,
}

/// Serialized affine crystal: vertices with their classical data and `f` edges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineDocument {
    pub n: usize,
    pub s: usize,
    pub vertices: Vec<AffineVertexDoc>,
    /// `(from, color, to)` for every `f` edge.
    pub edges: Vec<(usize, usize, usize)>,
}

impl AffineCrystal {
    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// `(ε_0, …, ε_n)`.
    pub fn eps(&self, v: usize) -> Vec<u32> {
        (0..=self.n).map(|i| self.graph.eps_phi(v, i).0).collect()
    }

    /// `(φ_0, …, φ_n)`.
    pub fn phi(&self, v: usize) -> Vec<u32> {
        (0..=self.n).map(|i| self.graph.eps_phi(v, i).1).collect()
    }

    /// `⟨c, ε(b)⟩ = ε₀ + ε₁ + 2(ε₂ + … + ε_{n−2}) + ε_{n−1} + ε_n`.
    pub fn level(&self, v: usize) -> u32 {
        level_of(&self.eps(v))
    }

    /// Vertices of minimal level.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let min = (0..self.len()).map(|v| self.level(v)).min().unwrap_or(0);
        (0..self.len()).filter(|&v| self.level(v) == min).collect()
    }

    /// `u(B) = u_s`, the classical highest weight vertex of `B(sϖ₂)`.
    pub fn u(&self) -> usize {
        self.graph
            .index_of(&u_k(self.s, self.s))
            .expect("u_s is a vertex")
    }

    /// The vertex `b♮` with `φ(b♮) = sΛ₀`.
    pub fn b_natural(&self) -> Result<usize, CrystalError> {
        let mut want = vec![0; self.n + 1];
        want[0] = self.s as u32;
        let hits: Vec<usize> = (0..self.len()).filter(|&v| self.phi(v) == want).collect();
        match hits.as_slice() {
            [v] => Ok(*v),
            _ => Err(CrystalError::Inconsistent(format!(
                "{} vertices have φ = sΛ₀",
                hits.len()
            ))),
        }
    }

    /// Energy `D(b) = −k` on `B(kϖ₂)`; with `shifted` the constant `s` is
    /// added, giving `s − k`.
    pub fn energy(&self, v: usize, shifted: bool) -> i32 {
        let d = -(self.component[v] as i32);
        if shifted {
            d + self.s as i32
        } else {
            d
        }
    }

    pub fn to_document(&self) -> AffineDocument {
        AffineDocument {
            n: self.n,
            s: self.s,
            vertices: (0..self.len())
                .map(|v| AffineVertexDoc {
                    tableau: self.graph.vertices[v].clone(),
                    component: self.component[v],
                    stratum: self.stratum[v],
                    energy: self.energy(v, false),
                    weight: self.graph.weights[v].clone(),
                })
                .collect(),
            edges: self.graph.edges(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("affine documents serialize")
    }

    /// Graphviz rendering; zero arrows are dashed.
    pub fn to_dot(&self, name: &str) -> String {
        crate::graph::dot_with(&self.graph, name, |t| t.to_string())
    }
}

/// Outcome of [`check_perfect`], one field per checkable item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectReport {
    pub level: u32,
    /// Item 1: `B ⊗ B` is connected.
    pub connected: bool,
    /// Item 2: a unique vertex of maximal weight, all weights below it.
    pub unique_maximal_weight: bool,
    /// Item 3 is about the existence of a module and is not checked.
    pub module_item: &'static str,
    /// Item 4: every level is at least `ℓ`, and `ℓ` is attained.
    pub level_bound: bool,
    /// Item 5: `ε` and `φ` map the minimal vertices bijectively onto `(P_cl^+)_ℓ`.
    pub minimal_bijection: bool,
    /// Smallest level over the crystal.
    pub min_level: u32,
}

impl PerfectReport {
    pub fn passes(&self) -> bool {
        self.connected && self.unique_maximal_weight && self.level_bound && self.minimal_bijection
    }
}

/// Checks items 1, 2, 4 and 5 of perfectness of level `ℓ`.
///
/// Item 4 is read together with item 5: the lower bound `ℓ` must be the
/// minimum, since a crystal of level `ℓ` has minimal vertices of level `ℓ`.
pub fn check_perfect(b: &AffineCrystal, level: u32) -> Result<PerfectReport, CrystalError> {
    let tp = TensorPair::new(b, b);
    let connected = tp.is_connected();
    let cartan = CartanData::d(b.n);
    let top = b.u();
    let lambda = &b.graph.weights[top];
    let mut unique_maximal_weight = true;
    for v in 0..b.len() {
        let diff: Vec<i32> = lambda
            .iter()
            .zip(&b.graph.weights[v])
            .map(|(x, y)| x - y)
            .collect();
        match cartan.root_coordinates(&diff) {
            Some(c) if c.iter().all(|&x| x >= 0) => {
                if v != top && c.iter().all(|&x| x == 0) {
                    unique_maximal_weight = false;
                }
            }
            _ => unique_maximal_weight = false,
        }
    }
    let min_level = (0..b.len()).map(|v| b.level(v)).min().unwrap_or(0);
    let level_bound = min_level == level;
    let targets: std::collections::BTreeSet<Vec<u32>> =
        level_weights(b.n, level).into_iter().collect();
    let mins = b.minimal_elements();
    let eps: std::collections::BTreeSet<Vec<u32>> = mins.iter().map(|&v| b.eps(v)).collect();
    let phi: std::collections::BTreeSet<Vec<u32>> = mins.iter().map(|&v| b.phi(v)).collect();
    let minimal_bijection =
        level_bound && mins.len() == targets.len() && eps == targets && phi == targets;
    Ok(PerfectReport {
        level,
        connected,
        unique_maximal_weight,
        module_item: "not machine-checkable",
        level_bound,
        minimal_bijection,
        min_level,
    })
}

/// The tensor product `B₂ ⊗ B₁` of two affine crystals; a vertex is a pair
/// `(b₂, b₁)` of indices.
#[derive(Clone, Copy, Debug)]
pub struct TensorPair<'a> {
    pub left: &'a AffineCrystal,
    pub right: &'a AffineCrystal,
}

type Pair = (usize, usize);

impl<'a> TensorPair<'a> {
    pub fn new(left: &'a AffineCrystal, right: &'a AffineCrystal) -> Self {
        TensorPair { left, right }
    }

    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn index(&self, p: Pair) -> usize {
        p.0 * self.right.len() + p.1
    }

    /// `e_i` or `f_i` on `b₂ ⊗ b₁`.
    pub fn op(&self, p: Pair, i: usize, dir: Dir) -> Option<Pair> {
        let (b2, b1) = p;
        let (e2, _) = self.left.graph.eps_phi(b2, i);
        let (_, f1) = self.right.graph.eps_phi(b1, i);
        let on_left = match dir {
            Dir::F => e2 >= f1,
            Dir::E => e2 > f1,
        };
        if on_left {
            self.left.graph.op(b2, i, dir).map(|x| (x, b1))
        } else {
            self.right.graph.op(b1, i, dir).map(|x| (b2, x))
        }
    }

    /// `(ε_i, φ_i)` of `b₂ ⊗ b₁`.
    pub fn eps_phi(&self, p: Pair, i: usize) -> (u32, u32) {
        let (e2, f2) = self.left.graph.eps_phi(p.0, i);
        let (e1, f1) = self.right.graph.eps_phi(p.1, i);
        (e1 + e2.saturating_sub(f1), f2 + f1.saturating_sub(e2))
    }

    /// Classical weight of `b₂ ⊗ b₁`.
    pub fn weight(&self, p: Pair) -> Vec<i32> {
        self.left.graph.weights[p.0]
            .iter()
            .zip(&self.right.graph.weights[p.1])
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Whether the product is connected under the colors `0..=n`.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([(0, 0)]);
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = queue.pop_front() {
            for i in 0..=self.left.n {
                for dir in [Dir::F, Dir::E] {
                    if let Some(q) = self.op(p, i, dir) {
                        let k = self.index(q);
                        if !seen[k] {
                            seen[k] = true;
                            count += 1;
                            queue.push_back(q);
                        }
                    }
                }
            }
        }
        count == self.len()
    }
}

/// The combinatorial `R`-matrix `B₂ ⊗ B₁ → B₁ ⊗ B₂`.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub left_len: usize,
    pub right_len: usize,
    /// `map[b₂ · |B₁| + b₁] = (b₁', b₂')`.
    pub map: Vec<Pair>,
}

impl RMatrix {
    pub fn apply(&self, p: Pair) -> Pair {
        self.map[p.0 * self.right_len + p.1]
    }
}

/// Computes `R` by sending `u(B₂) ⊗ u(B₁)` to `u(B₁) ⊗ u(B₂)` and following
/// every colored edge; an edge that exists on one side only, or two
/// different images for one vertex, mean that no isomorphism exists.
pub fn combinatorial_r(b2: &AffineCrystal, b1: &AffineCrystal) -> Result<RMatrix, CrystalError> {
    let src = TensorPair::new(b2, b1);
    let dst = TensorPair::new(b1, b2);
    let mut map: Vec<Option<Pair>> = vec![None; src.len()];
    let seed = (b2.u(), b1.u());
    map[src.index(seed)] = Some((b1.u(), b2.u()));
    let mut queue = VecDeque::from([seed]);
    while let Some(p) = queue.pop_front() {
        let q = map[src.index(p)].expect("queued vertices are mapped");
        for i in 0..=b2.n {
            for dir in [Dir::F, Dir::E] {
                match (src.op(p, i, dir), dst.op(q, i, dir)) {
                    (None, None) => {}
                    (Some(p2), Some(q2)) => match map[src.index(p2)] {
                        None => {
                            map[src.index(p2)] = Some(q2);
                            queue.push_back(p2);
                        }
                        Some(old) if old == q2 => {}
                        Some(_) => {
                            return Err(CrystalError::Inconsistent(
                                "not a crystal isomorphism".into(),
                            ))
                        }
                    },
                    _ => {
                        return Err(CrystalError::Inconsistent(
                            "not a crystal isomorphism".into(),
                        ))
                    }
                }
            }
        }
    }
    let map = map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CrystalError::Inconsistent("the tensor product is not connected".into()))?;
    Ok(RMatrix {
        left_len: b2.len(),
        right_len: b1.len(),
        map,
    })
}

/// The local energy `H` on `B₂ ⊗ B₁`, normalized by `H(u ⊗ u) = 0`,
/// indexed like [`RMatrix::map`].
///
/// `H` is constant along classical edges, and `H(e₀ b) − H(b)` is `−1` when
/// `e₀` acts on the left factor both in `b` and in `R(b)`, `+1` when it acts
/// on the right factor in both, and `0` otherwise.
pub fn local_h(
    b2: &AffineCrystal,
    b1: &AffineCrystal,
    r: &RMatrix,
) -> Result<Vec<i32>, CrystalError> {
    let src = TensorPair::new(b2, b1);
    let step = |p: Pair| -> i32 {
        let q = r.apply(p);
        let left = b2.graph.eps_phi(p.0, 0).0 > b1.graph.eps_phi(p.1, 0).1;
        let left_r = b1.graph.eps_phi(q.0, 0).0 > b2.graph.eps_phi(q.1, 0).1;
        match (left, left_r) {
            (true, true) => -1,
            (false, false) => 1,
            _ => 0,
        }
    };
    let mut h: Vec<Option<i32>> = vec![None; src.len()];
    let seed = (b2.u(), b1.u());
    h[src.index(seed)] = Some(0);
    let mut queue = VecDeque::from([seed]);
    while let Some(p) = queue.pop_front() {
        let hp = h[src.index(p)].expect("queued vertices have a value");
        for i in 0..=b2.n {
            for dir in [Dir::F, Dir::E] {
                let Some(p2) = src.op(p, i, dir) else {
                    continue;
                };
                let v = match (i, dir) {
                    (0, Dir::E) => hp + step(p),
                    (0, Dir::F) => hp - step(p2),
                    _ => hp,
                };
                match h[src.index(p2)] {
                    None => {
                        h[src.index(p2)] = Some(v);
                        queue.push_back(p2);
                    }
                    Some(old) if old == v => {}
                    Some(_) => {
                        return Err(CrystalError::Inconsistent(
                            "the local energy is not well defined".into(),
                        ))
                    }
                }
            }
        }
    }
    h.into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CrystalError::Inconsistent("the tensor product is not connected".into()))
}

/// `D_B(b) = H(b ⊗ b♮) − H(u(B) ⊗ b♮)` for a single affine crystal.
pub fn intrinsic_energy(b: &AffineCrystal) -> Result<Vec<i32>, CrystalError> {
    let r = combinatorial_r(b, b)?;
    let h = local_h(b, b, &r)?;
    let nat = b.b_natural()?;
    let at = |v: usize| h[v * b.len() + nat];
    let base = at(b.u());
    Ok((0..b.len()).map(|v| at(v) - base).collect())
}

/// A Laurent polynomial in `q` with nonnegative coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial(pub BTreeMap<i32, u64>);

impl QPolynomial {
    pub fn add_term(&mut self, exponent: i32) {
        *self.0.entry(exponent).or_insert(0) += 1;
    }

    pub fn coefficient(&self, exponent: i32) -> u64 {
        self.0.get(&exponent).copied().unwrap_or(0)
    }

    /// Value at `q = 1`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .rev()
            .map(|(&e, &c)| match (e, c) {
                (0, c) => format!("{c}"),
                (e, 1) => format!("q^{e}"),
                (e, c) => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `X(B, λ; q) = Σ_{wt(b) = λ} q^{D(b)}` over a single affine crystal.
pub fn one_dim_sum(b: &AffineCrystal, lambda: &[i32], shifted: bool) -> QPolynomial {
    let mut out = QPolynomial::default();
    for v in 0..b.len() {
        if b.graph.weights[v] == lambda {
            out.add_term(b.energy(v, shifted));
        }
    }
    out
}

/// Energy of `b₂ ⊗ b₁`: `H(b₂ ⊗ b₁) + D_{B₁}(b₁) + D_{B₂}(b₂')`, where
/// `R(b₂ ⊗ b₁) = b₁' ⊗ b₂'`.
pub fn pair_energy(
    b2: &AffineCrystal,
    b1: &AffineCrystal,
    r: &RMatrix,
    h: &[i32],
    p: Pair,
    shifted: bool,
) -> i32 {
    let q = r.apply(p);
    h[p.0 * b1.len() + p.1] + b1.energy(p.1, shifted) + b2.energy(q.1, shifted)
}

/// `X(B₂ ⊗ B₁, λ; q)` with the two-factor energy of [`pair_energy`].
pub fn one_dim_sum_pair(
    b2: &AffineCrystal,
    b1: &AffineCrystal,
    lambda: &[i32],
    shifted: bool,
) -> Result<QPolynomial, CrystalError> {
    let r = combinatorial_r(b2, b1)?;
    let h = local_h(b2, b1, &r)?;
    let tp = TensorPair::new(b2, b1);
    let mut out = QPolynomial::default();
    for x in 0..b2.len() {
        for y in 0..b1.len() {
            if tp.weight((x, y)) == lambda {
                out.add_term(pair_energy(b2, b1, &r, &h, (x, y), shifted));
            }
        }
    }
    Ok(out)
}
