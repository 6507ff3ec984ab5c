//! Weyl dimension formula, used as an independent count oracle.

use num_rational::Ratio;

use crate::cartan::CartanData;
use crate::letter::Family;

/// Positive roots in the ε-basis.
pub fn positive_roots(c: &CartanData) -> Vec<Vec<i32>> {
    let n = c.rank;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for sign in [-1, 1] {
                let mut r = vec![0; n];
                r[i] = 1;
                r[j] = sign;
                out.push(r);
            }
        }
    }
    if c.family == Family::C {
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 2;
            out.push(r);
        }
    }
    out
}

/// Half the sum of the positive roots, doubled to stay integral.
fn two_rho(c: &CartanData) -> Vec<i32> {
    let mut acc = vec![0; c.rank];
    for r in positive_roots(c) {
        for (a, x) in acc.iter_mut().zip(r) {
            *a += x;
        }
    }
    acc
}

/// Dimension of the irreducible module of dominant highest weight `lambda`
/// (ε-basis coordinates).
pub fn weyl_dimension(c: &CartanData, lambda: &[i32]) -> u128 {
    let rho2 = two_rho(c);
    let mut prod = Ratio::from_integer(1i128);
    for r in positive_roots(c) {
        let num: i128 = lambda
            .iter()
            .zip(&rho2)
            .zip(&r)
            .map(|((l, p), a)| (2 * l + p) as i128 * *a as i128)
            .sum();
        let den: i128 = rho2
            .iter()
            .zip(&r)
            .map(|(p, a)| *p as i128 * *a as i128)
            .sum();
        prod *= Ratio::new(num, den);
    }
    assert!(prod.is_integer(), "Weyl dimension must be an integer");
    prod.to_integer() as u128
}
