//! Letters of the vector representation and their orders.
//!
//! A letter is a nonzero integer: `i` stands for the unbarred letter `i`
//! and `-i` for its bar. In type D the alphabet is ordered
//! `1 < 2 < ... < n-1 < {n, n̄} < (n-1)‾ < ... < 1̄` with `n` and `n̄`
//! incomparable; in type C the order is total.

use std::cmp::Ordering;

/// A letter of the vector representation (`i` or `-i` for `ī`).
pub type Letter = i32;

/// The family of the classical Lie algebra a letter belongs to.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum Family {
    /// Type `D_n` (orthogonal, even dimension).
    D,
    /// Type `C_n` (symplectic). Only rank 2 is used by the library.
    C,
}

/// Alphabet of the vector representation of `D_n` or `C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub family: Family,
    pub n: usize,
}

impl Alphabet {
    pub fn d(n: usize) -> Self {
        Alphabet {
            family: Family::D,
            n,
        }
    }

    pub fn c(n: usize) -> Self {
        Alphabet {
            family: Family::C,
            n,
        }
    }

    /// All letters in increasing rank.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.n as Letter;
        (1..=n).chain((1..=n).rev().map(|i| -i)).collect()
    }

    pub fn contains(&self, x: Letter) -> bool {
        x != 0 && x.unsigned_abs() as usize <= self.n
    }

    /// Position of a letter in the linear extension `1, ..., n, n̄, ..., 1̄`.
    pub fn rank(&self, x: Letter) -> i32 {
        if x > 0 {
            x
        } else {
            2 * self.n as i32 + 1 + x
        }
    }

    /// Whether `a` and `b` are incomparable (only `n` and `n̄` in type D).
    pub fn incomparable(&self, a: Letter, b: Letter) -> bool {
        self.family == Family::D && a != b && a.abs() == self.n as i32 && b.abs() == self.n as i32
    }

    /// Partial order `a ≤ b`.
    pub fn le(&self, a: Letter, b: Letter) -> bool {
        a == b || (self.rank(a) < self.rank(b) && !self.incomparable(a, b))
    }

    /// Strict partial order `a < b`.
    pub fn lt(&self, a: Letter, b: Letter) -> bool {
        a != b && self.le(a, b)
    }

    /// Comparison in the partial order; `None` for incomparable letters.
    pub fn cmp(&self, a: Letter, b: Letter) -> Option<Ordering> {
        if a == b {
            Some(Ordering::Equal)
        } else if self.incomparable(a, b) {
            None
        } else {
            Some(self.rank(a).cmp(&self.rank(b)))
        }
    }

    /// `f_i` on a single letter of the vector representation.
    pub fn f(&self, x: Letter, i: usize) -> Option<Letter> {
        let n = self.n as Letter;
        let i = i as Letter;
        if i < 1 || i > n {
            return None;
        }
        if i < n {
            if x == i {
                return Some(i + 1);
            }
            if x == -(i + 1) {
                return Some(-i);
            }
            return None;
        }
        match self.family {
            Family::D => {
                if x == n - 1 {
                    Some(-n)
                } else if x == n {
                    Some(-(n - 1))
                } else {
                    None
                }
            }
            Family::C => (x == n).then_some(-n),
        }
    }

    /// `e_i` on a single letter of the vector representation.
    pub fn e(&self, x: Letter, i: usize) -> Option<Letter> {
        let n = self.n as Letter;
        let i = i as Letter;
        if i < 1 || i > n {
            return None;
        }
        if i < n {
            if x == i + 1 {
                return Some(i);
            }
            if x == -i {
                return Some(-(i + 1));
            }
            return None;
        }
        match self.family {
            Family::D => {
                if x == -n {
                    Some(n - 1)
                } else if x == -(n - 1) {
                    Some(n)
                } else {
                    None
                }
            }
            Family::C => (x == -n).then_some(n),
        }
    }

    /// `φ_i` of a single letter (0 or 1).
    pub fn phi(&self, x: Letter, i: usize) -> u32 {
        self.f(x, i).is_some() as u32
    }

    /// `ε_i` of a single letter (0 or 1).
    pub fn eps(&self, x: Letter, i: usize) -> u32 {
        self.e(x, i).is_some() as u32
    }

    /// Weight of a letter in the ε-basis.
    pub fn weight(&self, x: Letter) -> Vec<i32> {
        let mut w = vec![0; self.n];
        w[x.unsigned_abs() as usize - 1] = x.signum();
        w
    }

    /// Weight of a word.
    pub fn word_weight(&self, word: &[Letter]) -> Vec<i32> {
        let mut w = vec![0; self.n];
        for &x in word {
            w[x.unsigned_abs() as usize - 1] += x.signum();
        }
        w
    }
}

/// Human-readable form of a letter, using a combining overline for bars.
pub fn letter_to_string(x: Letter) -> String {
    if x > 0 {
        x.to_string()
    } else {
        let digits = (-x).to_string();
        digits.chars().flat_map(|c| [c, '\u{0304}']).collect()
    }
}
