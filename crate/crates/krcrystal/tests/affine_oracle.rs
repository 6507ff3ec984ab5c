//! Oracle checks for the affine crystals B̃^{2,s}: brute-force enumeration of
//! 2 × s grids, the dimension formula, transport along {2..n}-components as
//! an independent computation of the embeddings, and the structure of the
//! zero arrows.

use std::collections::{BTreeMap, BTreeSet};

use krcrystal::affine::*;
use krcrystal::branching::rectangle_bc;
use krcrystal::cartan::CartanData;
use krcrystal::dtableau::{is_valid_d, weight};
use krcrystal::letter::{Alphabet, Letter};
use krcrystal::plactic::completely_reduced_form;
use krcrystal::signature::Dir;
use krcrystal::tableau::Tableau;
use krcrystal::weyl::weyl_dimension;

fn dim_b2(n: usize, k: usize) -> u128 {
    let mut w = vec![0; n];
    if k > 0 {
        w[0] = k as i32;
        w[1] = k as i32;
    }
    weyl_dimension(&CartanData::d(n), &w)
}

fn grids(n: usize, s: usize) -> Vec<Tableau> {
    let letters = Alphabet::d(n).letters();
    let mut out = Vec::new();
    let cells = 2 * s;
    let mut idx = vec![0usize; cells];
    loop {
        let top: Vec<Letter> = idx[..s].iter().map(|&i| letters[i]).collect();
        let bottom: Vec<Letter> = idx[s..].iter().map(|&i| letters[i]).collect();
        out.push(Tableau::new(vec![top, bottom]));
        let mut p = 0;
        loop {
            if p == cells {
                return out;
            }
            idx[p] += 1;
            if idx[p] < letters.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

#[test]
fn affine_tableaux_match_the_classical_decomposition() {
    for (n, s) in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2)] {
        let mut affine = BTreeSet::new();
        for t in grids(n, s) {
            let rep = validate_affine(&t, n, s).unwrap();
            assert_eq!(rep.is_classical(), is_valid_d(&t, n), "{t}");
            if rep.is_affine() {
                affine.insert(t);
            }
        }
        let expected: u128 = (0..=s).map(|k| dim_b2(n, k)).sum();
        assert_eq!(affine.len() as u128, expected, "n={n} s={s}");
        let b = B2s::new(n, s).unwrap();
        let mut filled = BTreeSet::new();
        for (k, g) in b.classical.iter().enumerate() {
            assert_eq!(g.len() as u128, dim_b2(n, k));
            for t in &g.vertices {
                let f = fill(t, s, n).unwrap();
                assert_eq!(&drop(&f, n).unwrap(), t, "drop ∘ fill at {t}");
                let cands = fill_candidates(t, s, n);
                assert!(
                    cands.iter().all(|c| c == &f),
                    "filling locations disagree for {t}"
                );
                assert!(filled.insert(f));
            }
        }
        assert_eq!(filled, affine, "n={n} s={s}");
        for t in &affine {
            assert_eq!(
                &fill(&drop(t, n).unwrap(), s, n).unwrap(),
                t,
                "fill ∘ drop at {t}"
            );
        }
        println!("n={n} s={s}: {} affine tableaux", affine.len());
    }
}

#[test]
fn embeddings_agree_with_transport() {
    for (n, s) in [(4, 3), (5, 2)] {
        let b = B2s::new(n, s).unwrap();
        let inner: Vec<usize> = (2..=n).collect();
        let mut counts = BTreeMap::new();
        for k1 in 0..=s {
            for t in &b.classical[k1].vertices {
                for k2 in 0..=s {
                    let slid = iota(t, k1, k2, n).unwrap();
                    let moved = b.iota_transport(t, k1, k2).unwrap();
                    assert_eq!(slid, moved, "ι from {k1} to {k2} at {t}");
                    *counts.entry((k1, k2, slid.is_some())).or_insert(0) += 1;
                    if let Some(x) = &slid {
                        assert_eq!(weight(x, n), weight(t, n));
                        let g1 = &b.classical[k1];
                        let g2 = &b.classical[k2];
                        for &i in &inner {
                            assert_eq!(g1.eps_phi_of(t, i).unwrap(), g2.eps_phi_of(x, i).unwrap());
                        }
                        assert_eq!(iota(x, k2, k1, n).unwrap().as_ref(), Some(t));
                    }
                }
            }
        }
        println!("n={n} s={s}: (from, to, defined) -> count {counts:?}");
    }
}

#[test]
fn diamond_is_an_involution_flipping_the_stratum() {
    for (n, s) in [(4, 2), (5, 2)] {
        let b = B2s::new(n, s).unwrap();
        for g in &b.classical {
            for t in &g.vertices {
                let d = b.bcdual(t).unwrap();
                assert_eq!(&b.bcdual(&d).unwrap(), t);
                assert_eq!(stratum_of(&d, n), -stratum_of(t, n));
                assert_eq!(
                    completely_reduced_form(&d, n).unwrap(),
                    completely_reduced_form(t, n).unwrap()
                );
            }
        }
        for k in 0..=s {
            // u_k⋄ = (1/1̄)^{s−k}(2/1̄)^k, dropped to (2/1̄)^k
            let dual = b.bcdual(&drop(&u_k(k, s), n).unwrap()).unwrap();
            let want = Tableau::new(vec![vec![2; k], vec![-1; k]]);
            assert_eq!(dual, want);
            let mut top = vec![1; s - k];
            top.extend(vec![2; k]);
            assert_eq!(
                fill(&dual, s, n).unwrap(),
                Tableau::new(vec![top, vec![-1; s]])
            );
        }
    }
}

fn null_then_twos(k: usize, s: usize) -> Tableau {
    let half = (s - k) / 2;
    let mut top = vec![1; half];
    let mut bottom = vec![-2; half];
    if (s - k) % 2 == 1 {
        top.push(2);
        bottom.push(-2);
    }
    top.extend(vec![2; half + k]);
    bottom.extend(vec![-1; half + k]);
    Tableau::new(vec![top, bottom])
}

#[test]
fn zero_arrows_on_highest_weight_vectors() {
    for (n, s) in [(4, 1), (4, 2), (4, 3), (5, 2)] {
        let b = B2s::new(n, s).unwrap();
        for k in 0..=s {
            let u = u_k(k, s);
            assert_eq!(b.sigma(&u).unwrap(), null_then_twos(k, s), "σ(u_{k})");
            let f0 = b.op(&u, 0, Dir::F).unwrap();
            assert_eq!(f0, (k < s).then(|| u_k(k + 1, s)), "f0(u_{k})");
            if k > 0 {
                assert_eq!(
                    b.op(&u, 0, Dir::E).unwrap(),
                    Some(u_k(k - 1, s)),
                    "e0(u_{k})"
                );
            }
        }
    }
}

#[test]
fn affine_crystal_structure() {
    for (n, s) in [(4, 0), (4, 1), (4, 2), (5, 1)] {
        let b = B2s::new(n, s).unwrap();
        let a = b.build().unwrap();
        let expected: u128 = (0..=s).map(|k| dim_b2(n, k)).sum();
        assert_eq!(a.len() as u128, expected);
        for v in 0..a.len() {
            let t = &a.graph.vertices[v];
            let sv = b.sigma(t).unwrap();
            assert_eq!(&b.sigma(&sv).unwrap(), t, "σ² at {t}");
            let w = a.graph.index_of(&sv).unwrap();
            // σ exchanges the colors 0 and 1 and fixes the others
            for i in 0..=n {
                let j = match i {
                    0 => 1,
                    1 => 0,
                    _ => i,
                };
                assert_eq!(
                    a.graph.eps_phi(w, i),
                    a.graph.eps_phi(v, j),
                    "color {i} at {t}"
                );
            }
            if let Some(x) = a.graph.f_op(v, 0) {
                assert_eq!(a.stratum[x], a.stratum[v] + 1);
            }
        }
        let u0 = a.graph.index_of(&u_k(0, s)).unwrap();
        assert_eq!(a.graph.eps_phi(u0, 0), (s as u32, s as u32));
        for k in 0..=s {
            let v = a.graph.index_of(&u_k(k, s)).unwrap();
            assert_eq!(a.graph.eps_phi(v, 0), ((s + k) as u32, (s - k) as u32));
        }
        let by_transport = B2s::with_method(n, s, IotaMethod::Transport)
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(by_transport.graph, a.graph);
        if s == 0 {
            assert_eq!(a.len(), 1);
            assert_eq!(a.graph.edge_count(), 0);
        }
    }
}

#[test]
fn sigma_moves_branching_vertices_across_strata() {
    let (n, s) = (5, 2);
    let b = B2s::new(n, s).unwrap();
    let inner: Vec<usize> = (2..=n).collect();
    let mut seen = 0;
    for (k, g) in b.classical.iter().enumerate() {
        for v in g.highest_weight_vertices(&inner) {
            let w = &g.weights[v];
            let lambda1 = w[1].max(0) as usize;
            let image = drop(&b.sigma(&fill(&g.vertices[v], s, n).unwrap()).unwrap(), n).unwrap();
            assert_eq!(
                image.width(),
                s - (k - lambda1),
                "target component of {}",
                g.vertices[v]
            );
            let g2 = &b.classical[image.width()];
            let x = g2.index_of(&image).unwrap();
            assert!(inner.iter().all(|&i| g2.e_op(x, i).is_none()));
            let wx = &g2.weights[x];
            assert_eq!(wx[0], -w[0]);
            assert_eq!(wx[1..], w[1..]);
            seen += 1;
        }
    }
    let predicted: usize = (0..=s).map(|k| rectangle_bc(2, k).vertices.len()).sum();
    assert_eq!(seen, predicted);
}

#[test]
fn upsilon_raises_the_level_by_one() {
    let n = 4;
    for (s1, s) in [(1, 2), (2, 3)] {
        let small = B2s::new(n, s1).unwrap().build().unwrap();
        let big = B2s::new(n, s).unwrap().build().unwrap();
        for v in 0..small.len() {
            let t = &small.graph.vertices[v];
            let up = upsilon(t, s1, s, n).unwrap();
            let w = big.graph.index_of(&up).unwrap();
            assert_eq!(big.level(w), small.level(v) + 1, "{t}");
        }
        for k in 0..=s1 {
            assert_eq!(upsilon(&u_k(k, s1), s1, s, n).unwrap(), u_k(k, s));
        }
        assert_eq!(
            upsilon(&empty_configuration(s1), s1, s, n).unwrap(),
            empty_configuration(s)
        );
    }
}

#[test]
fn perfectness() {
    let n = 4;
    let b1 = B2s::new(n, 1).unwrap().build().unwrap();
    let rep = check_perfect(&b1, 1).unwrap();
    assert!(rep.passes(), "{rep:?}");
    let b2 = B2s::new(n, 2).unwrap().build().unwrap();
    let rep = check_perfect(&b2, 2).unwrap();
    assert!(rep.passes(), "{rep:?}");
    let rep = check_perfect(&b2, 1).unwrap();
    assert!(!rep.level_bound && !rep.passes());
    assert_eq!(rep.min_level, 2);
    let b0 = B2s::new(n, 0).unwrap().build().unwrap();
    assert!(check_perfect(&b0, 0).unwrap().passes());
}

#[test]
fn minimal_elements_are_the_constructed_tableaux() {
    for (n, s) in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2)] {
        let b = B2s::new(n, s).unwrap();
        let a = b.build().unwrap();
        assert!((0..a.len()).all(|v| a.level(v) >= s as u32));
        let mins: BTreeSet<Tableau> = a
            .minimal_elements()
            .into_iter()
            .map(|v| a.graph.vertices[v].clone())
            .collect();
        let mut built = BTreeSet::new();
        for lambda in level_weights(n, s as u32) {
            let t = b.construct_minimal(&lambda).unwrap();
            let v = a.graph.index_of(&t).unwrap();
            assert_eq!(a.eps(v), lambda, "ε of {t}");
            assert_eq!(a.phi(v), lambda, "φ of {t}");
            built.insert(t);
        }
        assert_eq!(built, mins, "n={n} s={s}");
        let mut sl = vec![0; n + 1];
        sl[0] = s as u32;
        assert_eq!(b.construct_minimal(&sl).unwrap(), empty_configuration(s));
    }
}

#[test]
fn r_matrix_and_local_energy() {
    let n = 4;
    let b1 = B2s::new(n, 1).unwrap().build().unwrap();
    let r = combinatorial_r(&b1, &b1).unwrap();
    let u = b1.u();
    assert_eq!(r.apply((u, u)), (u, u));
    for x in 0..b1.len() {
        for y in 0..b1.len() {
            assert_eq!(r.apply(r.apply((x, y))), (x, y));
        }
    }
    let h = local_h(&b1, &b1, &r).unwrap();
    assert_eq!(h[u * b1.len() + u], 0);

    let b2 = B2s::new(n, 2).unwrap().build().unwrap();
    let r21 = combinatorial_r(&b2, &b1).unwrap();
    let r12 = combinatorial_r(&b1, &b2).unwrap();
    let h21 = local_h(&b2, &b1, &r21).unwrap();
    let h12 = local_h(&b1, &b2, &r12).unwrap();
    for x in 0..b2.len() {
        for y in 0..b1.len() {
            let q = r21.apply((x, y));
            assert_eq!(r12.apply(q), (x, y));
            assert_eq!(h12[q.0 * b2.len() + q.1], h21[x * b1.len() + y]);
        }
    }
}

#[test]
fn energy_conventions() {
    let n = 4;
    for s in 1..=2 {
        let a = B2s::new(n, s).unwrap().build().unwrap();
        let d = intrinsic_energy(&a).unwrap();
        let mut by_component = BTreeMap::new();
        for v in 0..a.len() {
            by_component
                .entry(a.component[v])
                .or_insert_with(BTreeSet::new)
                .insert(d[v]);
        }
        println!("s={s}: intrinsic energy by component {by_component:?}");
        // The energy normalized by D(u) = 0 is k − s on B(kϖ₂): the negative
        // of the shifted component convention.
        for v in 0..a.len() {
            assert_eq!(d[v], -a.energy(v, true));
            assert_eq!(d[v], a.component[v] as i32 - s as i32);
        }
        for k in 0..=s {
            let v = a.graph.index_of(&u_k(k, s)).unwrap();
            let x = one_dim_sum(&a, &a.graph.weights[v], false);
            assert!(x.coefficient(-(k as i32)) >= 1, "{x}");
        }
        let b1 = B2s::new(n, 1).unwrap().build().unwrap();
        let zero = vec![0; n];
        let pair = one_dim_sum_pair(&a, &b1, &zero, false).unwrap();
        let tp = TensorPair::new(&a, &b1);
        let count = (0..a.len())
            .flat_map(|x| (0..b1.len()).map(move |y| (x, y)))
            .filter(|&p| tp.weight(p) == zero)
            .count();
        assert_eq!(pair.total() as usize, count);
        println!("s={s}: X(B^(2,{s}) ⊗ B^(2,1), 0; q) = {pair}");
    }
}
