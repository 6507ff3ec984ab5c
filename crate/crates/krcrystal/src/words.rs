//! Crystals of words in the vector representation.
//!
//! Any word is a vertex of a tensor power of the vector representation; the
//! connected component of a highest weight word realizes `B(λ)` for every
//! dominant `λ` reachable this way, including weights involving the spin
//! nodes of type D that tableaux do not cover.

use crate::graph::CrystalGraph;
use crate::letter::{Alphabet, Letter};
use crate::signature::{act, word_eps_phi, Dir};
use crate::tableau::Tableau;
use crate::CrystalError;

/// Connected component of a word under all operators of the alphabet.
pub fn word_component(
    seed: Vec<Letter>,
    alphabet: Alphabet,
    cap: usize,
) -> Result<CrystalGraph<Vec<Letter>>, CrystalError> {
    if let Some(&x) = seed.iter().find(|&&x| !alphabet.contains(x)) {
        return Err(CrystalError::Input(format!(
            "letter {x} is outside the alphabet"
        )));
    }
    let colors: Vec<usize> = (1..=alphabet.n).collect();
    CrystalGraph::generate(
        seed,
        &colors,
        |w, i, dir| act(w, i, dir, &alphabet),
        |w| alphabet.word_weight(w),
        cap,
    )
}

/// Whether every raising operator kills the word.
pub fn is_highest_weight_word(word: &[Letter], alphabet: &Alphabet) -> bool {
    (1..=alphabet.n).all(|i| word_eps_phi(word, i, alphabet).0 == 0)
}

/// A highest weight word of weight `Σ parts_k ε_k` in type D: the column word
/// of the filling whose row `r` holds the letter `r`. The last coordinate
/// may be negative, which uses `n̄` in place of `n` in the bottom row.
pub fn highest_weight_word(
    weight: &[i32],
    alphabet: &Alphabet,
) -> Result<Vec<Letter>, CrystalError> {
    let n = alphabet.n;
    if weight.len() != n {
        return Err(CrystalError::Input(format!(
            "weight must have {n} coordinates"
        )));
    }
    let mut rows: Vec<usize> = weight.iter().map(|x| x.unsigned_abs() as usize).collect();
    let ok = rows.windows(2).all(|w| w[0] >= w[1]) && weight[..n - 1].iter().all(|&x| x >= 0);
    if !ok {
        return Err(CrystalError::Input(format!(
            "{weight:?} is not a dominant integral weight"
        )));
    }
    while rows.last() == Some(&0) {
        rows.pop();
    }
    let width = rows.first().copied().unwrap_or(0);
    let mut word = Vec::new();
    for c in 0..width {
        for r in (0..rows.len()).rev() {
            if rows[r] > c {
                let mut x = r as Letter + 1;
                if r + 1 == n && weight[n - 1] < 0 {
                    x = -x;
                }
                word.push(x);
            }
        }
    }
    debug_assert!(is_highest_weight_word(&word, alphabet));
    Ok(word)
}

/// Canonical raising path of a word: repeatedly apply the smallest `e_i`
/// that does not vanish. Returns the colors used and the highest weight word.
pub fn raise_word(
    word: &[Letter],
    alphabet: &Alphabet,
    colors: &[usize],
) -> (Vec<usize>, Vec<Letter>) {
    let mut path = Vec::new();
    let mut cur = word.to_vec();
    'outer: loop {
        for &i in colors {
            if let Some(next) = act(&cur, i, Dir::E, alphabet) {
                path.push(i);
                cur = next;
                continue 'outer;
            }
        }
        return (path, cur);
    }
}

/// The tableau in the same position of an isomorphic component as `word`.
///
/// The word is raised to its highest weight; the highest weight tableau of
/// that weight (row `r` holding `r`, or `n̄` in a bottom row of length `n`
/// for a negative last coordinate) is then lowered along the reversed path.
/// This is the rectification of the word up to plactic equivalence.
pub fn rectify_word(word: &[Letter], alphabet: &Alphabet) -> Result<Tableau, CrystalError> {
    let colors: Vec<usize> = (1..=alphabet.n).collect();
    let (path, top) = raise_word(word, alphabet, &colors);
    let weight = alphabet.word_weight(&top);
    let hw = highest_weight_tableau_of_weight(&weight, alphabet)?;
    let mut w = hw.column_word();
    for &i in path.iter().rev() {
        w = act(&w, i, Dir::F, alphabet)
            .ok_or_else(|| CrystalError::Inconsistent("rectification path broke".into()))?;
    }
    Ok(hw.with_column_word(&w))
}

/// The highest weight filling of a dominant weight (see [`highest_weight_word`]).
pub fn highest_weight_tableau_of_weight(
    weight: &[i32],
    alphabet: &Alphabet,
) -> Result<Tableau, CrystalError> {
    let word = highest_weight_word(weight, alphabet)?;
    let mut rows: Vec<usize> = weight.iter().map(|x| x.unsigned_abs() as usize).collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    let shape = Tableau::new(rows.iter().map(|&l| vec![0; l]).collect());
    Ok(shape.with_column_word(&word))
}

/// Applies an operator to a word.
pub fn word_op(word: &[Letter], alphabet: &Alphabet, i: usize, dir: Dir) -> Option<Vec<Letter>> {
    act(word, i, dir, alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanData;
    use crate::graph::DEFAULT_CAP;
    use crate::weyl::weyl_dimension;

    #[test]
    fn spin_weights_are_reachable_through_words() {
        let a = Alphabet::d(4);
        let w = highest_weight_word(&[1, 1, 1, 0], &a).unwrap();
        assert_eq!(w, vec![3, 2, 1]);
        let g = word_component(w, a, DEFAULT_CAP).unwrap();
        assert_eq!(g.len(), 56);
        let w = highest_weight_word(&[1, 1, 1, 1], &a).unwrap();
        let g = word_component(w, a, DEFAULT_CAP).unwrap();
        assert_eq!(
            g.len() as u128,
            weyl_dimension(&CartanData::d(4), &[1, 1, 1, 1])
        );
        let w = highest_weight_word(&[1, 1, 1, -1], &a).unwrap();
        assert_eq!(w, vec![-4, 3, 2, 1]);
        assert!(is_highest_weight_word(&w, &a));
    }

    #[test]
    fn non_dominant_weights_are_rejected() {
        assert!(highest_weight_word(&[0, 1, 0, 0], &Alphabet::d(4)).is_err());
    }
}
