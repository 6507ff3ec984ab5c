//! The two-row slides against independent oracles: rectification through
//! the word crystal and the closure under the plactic relations.

use krcrystal::dtableau::{generate_b_default, kashiwara};
use krcrystal::plactic::{
    completely_reduced_form, lecouvey_closure, rectify_in_subalphabet, reduced_form, refill,
    slide_two_row, SkewTwoRow, SlideError,
};
use krcrystal::signature::word_eps_phi;
use krcrystal::words::{rectify_word, word_op};
use krcrystal::{Alphabet, Dir, Letter};

/// Every two-row skew tableau with bottom row starting in column 0, top row
/// starting at a positive offset, of total width at most `width`.
fn skews(n: usize, width: usize) -> Vec<SkewTwoRow> {
    let alpha = Alphabet::d(n);
    let letters = alpha.letters();
    let mut out = Vec::new();
    for offset in 1..width {
        for top_len in 1..=width - offset {
            for bottom_len in 0..=offset + top_len {
                let cells = top_len + bottom_len;
                let mut idx = vec![0usize; cells];
                loop {
                    let top: Vec<Letter> = idx[..top_len].iter().map(|&k| letters[k]).collect();
                    let bottom: Vec<Letter> = idx[top_len..].iter().map(|&k| letters[k]).collect();
                    let s = SkewTwoRow::new(offset, top, bottom);
                    if s.check(n).is_ok() {
                        out.push(s);
                    }
                    let mut k = 0;
                    while k < cells && idx[k] + 1 == letters.len() {
                        idx[k] = 0;
                        k += 1;
                    }
                    if k == cells {
                        break;
                    }
                    idx[k] += 1;
                }
            }
        }
    }
    out
}

#[test]
fn slides_agree_with_crystal_rectification() {
    for (n, width) in [(4, 3), (5, 3), (6, 3)] {
        let alpha = Alphabet::d(n);
        let (mut ok, mut contraction, mut invalid) = (0, 0, 0);
        for s in skews(n, width) {
            let expected = rectify_word(&s.column_word(), &alpha).unwrap();
            match slide_two_row(&s, n, 1) {
                Ok(t) => {
                    assert_eq!(t, expected, "rank {n}, skew {s:?}");
                    ok += 1;
                }
                Err(SlideError::NeedsContraction(_)) => {
                    assert!(
                        expected.size() < s.top.len() + s.bottom.len(),
                        "rank {n}, skew {s:?}"
                    );
                    contraction += 1;
                }
                Err(SlideError::Invalid) => {
                    // Only classes that do not rectify to a two-row tableau of the
                    // same size may get stuck.
                    let same_size = expected.size() == s.top.len() + s.bottom.len();
                    assert!(
                        expected.shape().len() > 2 || !same_size,
                        "rank {n}, skew {s:?}"
                    );
                    invalid += 1;
                }
                Err(e) => panic!("rank {n}, skew {s:?}: {e}"),
            }
        }
        println!("rank {n}: {ok} slid, {contraction} need a contraction, {invalid} get stuck");
        assert!(ok > 0);
    }
}

#[test]
fn slides_stay_in_the_relation_closure() {
    let n = 3;
    for s in skews(n, 2) {
        let word = s.column_word();
        let closure = lecouvey_closure(&word, n, 200_000).unwrap();
        let t = slide_two_row(&s, n, 1)
            .or_else(|_| rectify_word(&word, &Alphabet::d(n)).map_err(|_| ()))
            .unwrap();
        assert!(closure.contains(&t.column_word()), "skew {s:?} -> {t}");
    }
}

#[test]
fn slides_commute_with_kashiwara_operators() {
    for n in [4, 5] {
        let alpha = Alphabet::d(n);
        for s in skews(n, 3) {
            let Ok(t) = slide_two_row(&s, n, 1) else {
                continue;
            };
            for i in 1..=n {
                for dir in [Dir::E, Dir::F] {
                    let moved = word_op(&s.column_word(), &alpha, i, dir);
                    let image = kashiwara(&t, n, i, dir);
                    match (moved, image) {
                        (None, None) => {}
                        (Some(w), Some(u)) => {
                            let s2 = refill_skew(&s, &w);
                            if let Ok(t2) = slide_two_row(&s2, n, 1) {
                                assert_eq!(t2, u, "rank {n}, skew {s:?}, color {i}");
                            }
                        }
                        (a, b) => panic!("rank {n}, skew {s:?}, color {i}: {a:?} vs {b:?}"),
                    }
                }
            }
        }
    }
}

/// The skew tableau of the same shape as `s` with column word `w`.
fn refill_skew(s: &SkewTwoRow, w: &[Letter]) -> SkewTwoRow {
    let width = (s.offset + s.top.len()).max(s.bottom.len());
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    let mut it = w.iter();
    for c in 0..width {
        if c < s.bottom.len() {
            bottom.push(*it.next().unwrap());
        }
        if c >= s.offset && c < s.offset + s.top.len() {
            top.push(*it.next().unwrap());
        }
    }
    SkewTwoRow::new(s.offset, top, bottom)
}

fn two_row_tableaux(n: usize, width: usize) -> Vec<krcrystal::Tableau> {
    (0..=width)
        .flat_map(|k| {
            let shape: Vec<usize> = if k == 0 { vec![] } else { vec![k, k] };
            generate_b_default(&shape, n).unwrap().vertices
        })
        .collect()
}

#[test]
fn reduced_forms_keep_the_inner_statistics() {
    for (n, width) in [(4, 3), (5, 3)] {
        let alpha = Alphabet::d(n);
        let (mut slid_count, mut stuck) = (0, 0);
        for t in two_row_tableaux(n, width) {
            let red = reduced_form(&t);
            let word = red.skew.column_word();
            for i in 2..=n {
                assert_eq!(
                    word_eps_phi(&t.column_word(), i, &alpha),
                    word_eps_phi(&word, i, &alpha),
                    "{t}, color {i}"
                );
            }
            assert_eq!(refill(&red.skew, t.width()).unwrap(), t);
            let crf = completely_reduced_form(&t, n).unwrap();
            assert_eq!(crf, rectify_in_subalphabet(&word, n, 2).unwrap(), "{t}");
            match slide_two_row(&red.skew, n, 2) {
                Ok(slid) => {
                    assert_eq!(slid, crf, "{t}");
                    slid_count += 1;
                }
                Err(_) => stuck += 1,
            }
        }
        println!("rank {n}: {slid_count} reduced forms slid, {stuck} stuck");
        assert_eq!(stuck, 0);
    }
}

#[test]
fn top_row_shifts_keep_the_plactic_class() {
    for (n, width) in [(4, 3), (5, 3)] {
        for t in two_row_tableaux(n, width) {
            let red = reduced_form(&t);
            if red.skew.top.is_empty() {
                continue;
            }
            let before = rectify_in_subalphabet(&red.skew.column_word(), n, 2).unwrap();
            let shifted = red.skew.shift_top_right(n).unwrap();
            let after = rectify_in_subalphabet(&shifted.column_word(), n, 2).unwrap();
            assert_eq!(before, after, "{t}");
            assert_eq!(shifted.shift_top_left(n, 2).unwrap(), red.skew, "{t}");
        }
    }
}
