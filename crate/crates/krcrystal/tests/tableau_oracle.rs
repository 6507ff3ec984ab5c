//! Brute-force oracle: count every filling accepted by the validator and
//! compare with the Weyl dimension formula.

use krcrystal::dtableau::{generate_b_default, is_valid_d, validate_d};
use krcrystal::weyl::weyl_dimension;
use krcrystal::{Alphabet, CartanData, Tableau};

/// All fillings of `shape` with weakly increasing rows and strictly
/// increasing columns (the cheap rules), then filtered by the validator.
fn brute_force_count(shape: &[usize], n: usize) -> usize {
    let alpha = Alphabet::d(n);
    let letters = alpha.letters();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<i32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut count = 0;
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<i32>>,
        letters: &[i32],
        alpha: &Alphabet,
        n: usize,
        count: &mut usize,
    ) {
        if k == cells.len() {
            if is_valid_d(&Tableau::new(rows.clone()), n) {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[k];
        for &x in letters {
            if c > 0 && !alpha.le(rows[r][c - 1], x) {
                continue;
            }
            if r > 0 && alpha.le(x, rows[r - 1][c]) {
                continue;
            }
            rows[r][c] = x;
            go(k + 1, cells, rows, letters, alpha, n, count);
        }
    }
    go(0, &cells, &mut rows, &letters, &alpha, n, &mut count);
    count
}

fn weight_of(shape: &[usize], n: usize) -> Vec<i32> {
    let mut w = vec![0; n];
    for (k, &p) in shape.iter().enumerate() {
        w[k] = p as i32;
    }
    w
}

/// Shapes with at most `n − 2` rows and at most `max_cells` boxes.
fn small_shapes(n: usize, max_cells: usize) -> Vec<Vec<usize>> {
    fn parts(
        rem: usize,
        max_part: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cur.clone());
        if cur.len() == max_len {
            return;
        }
        for p in 1..=max_part.min(rem) {
            cur.push(p);
            parts(rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    parts(max_cells, max_cells, n - 2, &mut Vec::new(), &mut out);
    out
}

#[test]
fn validator_counts_match_weyl_dimensions() {
    let mut cases: Vec<(Vec<usize>, usize)> = Vec::new();
    for (n, max_cells) in [(4, 4), (5, 4), (6, 3)] {
        cases.extend(small_shapes(n, max_cells).into_iter().map(|s| (s, n)));
    }
    cases.extend([
        (vec![1, 1, 1, 1], 6),
        (vec![2, 1, 1, 1], 6),
        (vec![1, 1, 1, 1, 1], 7),
    ]);
    {
        for (shape, n) in cases {
            let expect = weyl_dimension(&CartanData::d(n), &weight_of(&shape, n)) as usize;
            let got = brute_force_count(&shape, n);
            assert_eq!(got, expect, "shape {shape:?}, rank {n}");
        }
    }
}

#[test]
fn generated_crystals_match_weyl_dimensions() {
    let cases: Vec<(Vec<usize>, usize)> = vec![
        (vec![], 4),
        (vec![1], 4),
        (vec![1, 1], 4),
        (vec![2, 2], 4),
        (vec![3, 3], 4),
        (vec![3, 1], 4),
        (vec![2, 1, 1], 5),
        (vec![2, 2], 5),
        (vec![2, 2, 1], 5),
        (vec![2, 2, 1, 1], 6),
    ];
    for (shape, n) in cases {
        let expect = weyl_dimension(&CartanData::d(n), &weight_of(&shape, n)) as usize;
        let g = generate_b_default(&shape, n).unwrap();
        assert_eq!(g.len(), expect, "shape {shape:?}, rank {n}");
    }
}

#[test]
fn generated_vertices_are_exactly_the_valid_fillings() {
    for (shape, n) in [(vec![2, 2], 4), (vec![2, 1], 5), (vec![3, 1], 4)] {
        let g = generate_b_default(&shape, n).unwrap();
        for t in &g.vertices {
            assert!(validate_d(t, n).unwrap().is_empty(), "{t}");
        }
        assert_eq!(g.len(), brute_force_count(&shape, n));
    }
}

#[test]
fn columns_reaching_the_spin_nodes_are_rejected() {
    assert!(generate_b_default(&[1, 1, 1], 4).is_err());
    assert!(generate_b_default(&[2, 1, 1, 1], 5).is_err());
    assert!(validate_d(&Tableau::new(vec![vec![1], vec![2], vec![3]]), 4).is_err());
}
