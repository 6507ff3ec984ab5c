//! The signature rule.
//!
//! A signature is a word over `{+, −, *}`. Reduction repeatedly replaces a
//! substring `+ *^k −` by `*^{k+2}`; the surviving symbols have the shape
//! `−…− +…+` once the stars are ignored. Each symbol remembers the position of
//! the word letter it came from, so operators can be applied in place.

use std::fmt;

use crate::letter::{Alphabet, Letter};

/// One signature symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sym {
    Plus,
    Minus,
    Star,
}

impl Sym {
    fn as_char(self) -> char {
        match self {
            Sym::Plus => '+',
            Sym::Minus => '−',
            Sym::Star => '*',
        }
    }
}

/// A signature together with the origin (letter position) of each symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    pub symbols: Vec<Sym>,
    pub origins: Vec<usize>,
}

/// Direction of a Kashiwara operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// Raising operator `e_i`.
    E,
    /// Lowering operator `f_i`.
    F,
}

impl Signature {
    /// Parses a string of `+`, `-` (or `−`) and `*`; origins are positions.
    pub fn parse(s: &str) -> Option<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '+' => Some(Sym::Plus),
                '-' | '−' => Some(Sym::Minus),
                '*' => Some(Sym::Star),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        let origins = (0..symbols.len()).collect();
        Some(Signature { symbols, origins })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The fixpoint of the cancellation `+ *^k − → *^{k+2}`.
    ///
    /// Implemented with a stack of unmatched `+` positions; every `−` cancels
    /// against the nearest unmatched `+` to its left, which is exactly the
    /// bracket matching produced by any order of cancellations.
    pub fn reduce(&self) -> Signature {
        let mut symbols = self.symbols.clone();
        let mut open: Vec<usize> = Vec::new();
        for k in 0..symbols.len() {
            match symbols[k] {
                Sym::Plus => open.push(k),
                Sym::Minus => {
                    if let Some(p) = open.pop() {
                        symbols[p] = Sym::Star;
                        symbols[k] = Sym::Star;
                    }
                }
                Sym::Star => {}
            }
        }
        Signature {
            symbols,
            origins: self.origins.clone(),
        }
    }

    /// The string with all stars removed.
    pub fn compact(&self) -> String {
        self.symbols
            .iter()
            .filter(|s| **s != Sym::Star)
            .map(|s| s.as_char())
            .collect()
    }

    /// Origin of the rightmost `−` (of this signature as given).
    pub fn rightmost_minus(&self) -> Option<usize> {
        self.symbols
            .iter()
            .rposition(|s| *s == Sym::Minus)
            .map(|k| self.origins[k])
    }

    /// Origin of the leftmost `+` (of this signature as given).
    pub fn leftmost_plus(&self) -> Option<usize> {
        self.symbols
            .iter()
            .position(|s| *s == Sym::Plus)
            .map(|k| self.origins[k])
    }

    /// Number of `−` and `+` symbols, i.e. `(φ, ε)` once reduced.
    pub fn counts(&self) -> (u32, u32) {
        let m = self.symbols.iter().filter(|s| **s == Sym::Minus).count() as u32;
        let p = self.symbols.iter().filter(|s| **s == Sym::Plus).count() as u32;
        (m, p)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// Per-letter data of a crystal whose elements are single letters.
pub trait LetterCrystal {
    fn letter_eps(&self, x: Letter, i: usize) -> u32;
    fn letter_phi(&self, x: Letter, i: usize) -> u32;
    fn letter_f(&self, x: Letter, i: usize) -> Option<Letter>;
    fn letter_e(&self, x: Letter, i: usize) -> Option<Letter>;
    /// Whether letters with `ε = φ = 0` contribute a `*` (true) or nothing.
    fn uses_stars(&self) -> bool {
        false
    }
}

impl LetterCrystal for Alphabet {
    fn letter_eps(&self, x: Letter, i: usize) -> u32 {
        self.eps(x, i)
    }
    fn letter_phi(&self, x: Letter, i: usize) -> u32 {
        self.phi(x, i)
    }
    fn letter_f(&self, x: Letter, i: usize) -> Option<Letter> {
        self.f(x, i)
    }
    fn letter_e(&self, x: Letter, i: usize) -> Option<Letter> {
        self.e(x, i)
    }
    fn uses_stars(&self) -> bool {
        self.family == crate::letter::Family::C
    }
}

/// The `i`-signature of a word: each letter contributes `−^φ +^ε`.
pub fn word_signature<C: LetterCrystal + ?Sized>(
    word: &[Letter],
    i: usize,
    rules: &C,
) -> Signature {
    let mut sig = Signature::default();
    for (pos, &x) in word.iter().enumerate() {
        let phi = rules.letter_phi(x, i);
        let eps = rules.letter_eps(x, i);
        for _ in 0..phi {
            sig.symbols.push(Sym::Minus);
            sig.origins.push(pos);
        }
        for _ in 0..eps {
            sig.symbols.push(Sym::Plus);
            sig.origins.push(pos);
        }
        if phi == 0 && eps == 0 && rules.uses_stars() {
            sig.symbols.push(Sym::Star);
            sig.origins.push(pos);
        }
    }
    sig
}

/// `(ε_i, φ_i)` of a word under the signature rule.
pub fn word_eps_phi<C: LetterCrystal + ?Sized>(word: &[Letter], i: usize, rules: &C) -> (u32, u32) {
    let (phi, eps) = word_signature(word, i, rules).reduce().counts();
    (eps, phi)
}

/// Position of the letter an operator acts on, if any.
pub fn acting_position<C: LetterCrystal + ?Sized>(
    word: &[Letter],
    i: usize,
    dir: Dir,
    rules: &C,
) -> Option<usize> {
    let red = word_signature(word, i, rules).reduce();
    match dir {
        Dir::F => red.rightmost_minus(),
        Dir::E => red.leftmost_plus(),
    }
}

/// Applies `e_i` or `f_i` to a word by the signature rule; `None` is the zero element.
pub fn act<C: LetterCrystal + ?Sized>(
    word: &[Letter],
    i: usize,
    dir: Dir,
    rules: &C,
) -> Option<Vec<Letter>> {
    let pos = acting_position(word, i, dir, rules)?;
    let x = word[pos];
    let y = match dir {
        Dir::F => rules.letter_f(x, i),
        Dir::E => rules.letter_e(x, i),
    }?;
    let mut out = word.to_vec();
    out[pos] = y;
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn red(s: &str) -> String {
        Signature::parse(s).unwrap().reduce().to_string()
    }

    #[test]
    fn reductions_from_the_literature() {
        assert_eq!(Signature::parse("+-+--").unwrap().reduce().compact(), "−");
        assert_eq!(
            Signature::parse("-++-++").unwrap().reduce().compact(),
            "−+++"
        );
        assert_eq!(red("-*-*+-*-++*"), "−*−****−++*");
        assert_eq!(red("+-+--+++--+"), "****−+****+");
    }

    #[test]
    fn empty_signature_has_no_action() {
        let a = Alphabet::d(4);
        assert_eq!(act(&[], 1, Dir::F, &a), None);
        assert_eq!(act(&[], 1, Dir::E, &a), None);
    }

    #[test]
    fn operators_on_the_rank_four_column_word() {
        let a = Alphabet::d(4);
        let w = [3, 1, -4, 2, -4, 4, -2, -3, -1, -3];
        let f2 = act(&w, 2, Dir::F, &a).unwrap();
        assert_eq!(f2, vec![3, 1, -4, 2, -4, 4, -2, -3, -1, -2]);
        assert_eq!(act(&w, 2, Dir::E, &a), None);
        assert_eq!(word_signature(&w, 2, &a).reduce().compact(), "−");
        assert_eq!(word_signature(&w, 4, &a).reduce().compact(), "−+++");
    }

    #[test]
    fn eps_phi_of_single_letters() {
        let a = Alphabet::d(4);
        assert_eq!(word_eps_phi(&[2], 1, &a), (1, 0));
        assert_eq!(word_eps_phi(&[2], 2, &a), (0, 1));
    }
}
