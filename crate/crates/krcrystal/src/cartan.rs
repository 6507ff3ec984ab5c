//! Cartan data for the classical types used by the library.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::letter::{Alphabet, Family};

/// Cartan data of `D_n` or `C_2`.
///
/// Weights are integer vectors in the ε-basis. The Cartan matrix is stored
/// with `cartan_matrix[i-1][j-1] = ⟨h_j, α_i⟩`, which is the convention under
/// which the Stembridge identity `Δ_i ε_j + Δ_i φ_j = a_ij` holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanData {
    pub family: Family,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i32>>,
    pub simple_roots: Vec<Vec<i32>>,
    /// Simple coroots in the dual ε-basis: `⟨h_i, w⟩ = coroots[i-1] · w`.
    pub simple_coroots: Vec<Vec<i32>>,
    pub fundamental_weights: Vec<Vec<Ratio<i32>>>,
    /// Coefficients of the canonical central element of `D_n^{(1)}`, indexed `0..=n`.
    pub central_coeffs: Option<Vec<i32>>,
}

impl CartanData {
    /// Cartan data of `D_n`, `n >= 3`.
    pub fn d(n: usize) -> Self {
        assert!(n >= 3, "type D requires rank at least 3");
        let mut roots = Vec::with_capacity(n);
        for i in 0..n - 1 {
            let mut a = vec![0; n];
            a[i] = 1;
            a[i + 1] = -1;
            roots.push(a);
        }
        let mut last = vec![0; n];
        last[n - 2] = 1;
        last[n - 1] = 1;
        roots.push(last);
        // Type D is simply laced, so coroots and roots coincide.
        let coroots = roots.clone();
        let half = Ratio::new(1, 2);
        let mut fws = Vec::with_capacity(n);
        for i in 1..=n - 2 {
            fws.push(
                (0..n)
                    .map(|k| Ratio::from_integer((k < i) as i32))
                    .collect(),
            );
        }
        fws.push(
            (0..n)
                .map(|k| if k + 1 < n { half } else { -half })
                .collect(),
        );
        fws.push(vec![half; n]);
        let mut central = vec![2; n + 1];
        for k in [0, 1, n - 1, n] {
            central[k] = 1;
        }
        Self::assemble(Family::D, roots, coroots, fws, Some(central))
    }

    /// Cartan data of `C_2` with `α_1 = ε_1 - ε_2`, `α_2 = 2ε_2`.
    pub fn c2() -> Self {
        let roots = vec![vec![1, -1], vec![0, 2]];
        let coroots = vec![vec![1, -1], vec![0, 1]];
        let one = Ratio::from_integer(1);
        let zero = Ratio::from_integer(0);
        let fws = vec![vec![one, zero], vec![one, one]];
        Self::assemble(Family::C, roots, coroots, fws, None)
    }

    fn assemble(
        family: Family,
        simple_roots: Vec<Vec<i32>>,
        simple_coroots: Vec<Vec<i32>>,
        fundamental_weights: Vec<Vec<Ratio<i32>>>,
        central_coeffs: Option<Vec<i32>>,
    ) -> Self {
        let rank = simple_roots.len();
        let cartan_matrix = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| dot(&simple_coroots[j], &simple_roots[i]))
                    .collect()
            })
            .collect();
        CartanData {
            family,
            rank,
            cartan_matrix,
            simple_roots,
            simple_coroots,
            fundamental_weights,
            central_coeffs,
        }
    }

    pub fn for_alphabet(alphabet: &Alphabet) -> Self {
        match alphabet.family {
            Family::D => Self::d(alphabet.n),
            Family::C => {
                assert_eq!(alphabet.n, 2, "only C_2 is supported");
                Self::c2()
            }
        }
    }

    /// `⟨h_i, w⟩` for a classical color `i` (1-based).
    pub fn pairing(&self, i: usize, w: &[i32]) -> i32 {
        dot(&self.simple_coroots[i - 1], w)
    }

    /// `a_ij` (1-based colors).
    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.cartan_matrix[i - 1][j - 1]
    }

    /// Integer weight `Σ m_i ϖ_i` in the ε-basis, or `None` if it is not integral
    /// (a spin weight in type D).
    pub fn weight_from_fundamental(&self, mults: &[i32]) -> Option<Vec<i32>> {
        assert_eq!(mults.len(), self.rank);
        let mut acc = vec![Ratio::from_integer(0); self.rank];
        for (m, fw) in mults.iter().zip(&self.fundamental_weights) {
            for (a, c) in acc.iter_mut().zip(fw) {
                *a += *c * *m;
            }
        }
        acc.iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }

    /// Coordinates `⟨h_i, w⟩` of `w` in the basis of fundamental weights.
    pub fn to_fundamental(&self, w: &[i32]) -> Vec<i32> {
        (1..=self.rank).map(|i| self.pairing(i, w)).collect()
    }

    /// Expresses `d` as `Σ c_i α_i`; `None` if the coefficients are not integers.
    pub fn root_coordinates(&self, d: &[i32]) -> Option<Vec<i32>> {
        let n = self.rank;
        let mut c = vec![0; n];
        match self.family {
            Family::D => {
                let mut partial = 0;
                for k in 0..n - 2 {
                    partial += d[k];
                    c[k] = partial;
                }
                let s = partial + d[n - 2];
                if (s + d[n - 1]) % 2 != 0 {
                    return None;
                }
                c[n - 1] = (s + d[n - 1]) / 2;
                c[n - 2] = (s - d[n - 1]) / 2;
            }
            Family::C => {
                c[0] = d[0];
                let r = d[0] + d[1];
                if r % 2 != 0 {
                    return None;
                }
                c[1] = r / 2;
            }
        }
        Some(c)
    }

    /// Whether `w` is dominant.
    pub fn is_dominant(&self, w: &[i32]) -> bool {
        (1..=self.rank).all(|i| self.pairing(i, w) >= 0)
    }

    /// Simple reflection `s_i` applied to a weight.
    pub fn reflect(&self, i: usize, w: &[i32]) -> Vec<i32> {
        let p = self.pairing(i, w);
        w.iter()
            .zip(&self.simple_roots[i - 1])
            .map(|(x, a)| x - p * a)
            .collect()
    }
}

pub(crate) fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
