//! Property tests over random words, random walks in crystals and random
//! vertices of the affine crystals.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use krcrystal::affine::{drop, fill, AffineCrystal, B2s};
use krcrystal::branching::branch_decompose;
use krcrystal::c2::{generate_c2, C2Tableau};
use krcrystal::dtableau::{
    dual_map, generate_b_default, is_valid_d, kashiwara, tau, DualConvention,
};
use krcrystal::plactic::reduced_form;
use krcrystal::signature::{act, word_eps_phi, Sym};
use krcrystal::{Alphabet, CartanData, CrystalGraph, Dir, Letter, Signature, Tableau};
use proptest::prelude::*;

/// Spin-free shapes with at most six boxes, paired with ranks 4 and 5.
const SHAPES: &[(&[usize], usize)] = &[
    (&[1], 4),
    (&[2], 4),
    (&[1, 1], 4),
    (&[2, 1], 4),
    (&[3, 1], 4),
    (&[2, 2], 4),
    (&[3, 3], 4),
    (&[4, 2], 4),
    (&[1, 1, 1], 5),
    (&[2, 1, 1], 5),
    (&[2, 2, 1], 5),
    (&[3, 2, 1], 5),
    (&[2, 2, 2], 5),
];

fn cached_b(k: usize) -> &'static CrystalGraph<Tableau> {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static CrystalGraph<Tableau>>>> = OnceLock::new();
    let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = map.lock().unwrap();
    map.entry(k).or_insert_with(|| {
        let (shape, n) = SHAPES[k];
        Box::leak(Box::new(generate_b_default(shape, n).unwrap()))
    })
}

fn affine(n: usize, s: usize) -> &'static (B2s, AffineCrystal) {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), &'static (B2s, AffineCrystal)>>> =
        OnceLock::new();
    let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = map.lock().unwrap();
    map.entry((n, s)).or_insert_with(|| {
        let b2s = B2s::new(n, s).unwrap();
        let b = b2s.build().unwrap();
        Box::leak(Box::new((b2s, b)))
    })
}

fn c2_crystal(l1: usize, l2: usize) -> &'static CrystalGraph<C2Tableau> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), &'static CrystalGraph<C2Tableau>>>> =
        OnceLock::new();
    let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = map.lock().unwrap();
    map.entry((l1, l2))
        .or_insert_with(|| Box::leak(Box::new(generate_c2(l1, l2, 100_000).unwrap())))
}

fn d_letter(n: usize) -> impl Strategy<Value = Letter> {
    let n = n as i32;
    (1..=n).prop_flat_map(|x| prop_oneof![Just(x), Just(-x)])
}

fn d_word() -> impl Strategy<Value = (usize, Vec<Letter>)> {
    (4usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(d_letter(n), 0..12)))
}

fn signature_string() -> impl Strategy<Value = Vec<Sym>> {
    prop::collection::vec(
        prop_oneof![Just(Sym::Plus), Just(Sym::Minus), Just(Sym::Star)],
        0..24,
    )
}

/// Cancels `+ *^k −` occurrences one at a time, choosing among the
/// available occurrences with the given choices.
fn reduce_in_order(mut s: Vec<Sym>, choices: &[usize]) -> Vec<Sym> {
    let mut step = 0;
    loop {
        let mut spots = vec![];
        for p in 0..s.len() {
            if s[p] != Sym::Plus {
                continue;
            }
            let mut q = p + 1;
            while q < s.len() && s[q] == Sym::Star {
                q += 1;
            }
            if q < s.len() && s[q] == Sym::Minus {
                spots.push((p, q));
            }
        }
        if spots.is_empty() {
            return s;
        }
        let (p, q) = spots[choices.get(step).copied().unwrap_or(0) % spots.len()];
        s[p] = Sym::Star;
        s[q] = Sym::Star;
        step += 1;
    }
}

fn sym_char(x: Sym) -> char {
    match x {
        Sym::Plus => '+',
        Sym::Minus => '-',
        Sym::Star => '*',
    }
}

fn random_vertex<P: Clone + Eq + std::hash::Hash>(g: &CrystalGraph<P>, pick: usize) -> usize {
    pick % g.len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, .. ProptestConfig::default() })]

    #[test]
    fn signature_reduction_is_confluent_and_idempotent(s in signature_string(), choices in prop::collection::vec(0usize..16, 0..24)) {
        let text: String = s.iter().map(|x| sym_char(*x)).collect();
        let sig = Signature::parse(&text).unwrap();
        let reduced = sig.reduce();
        let stepwise: String = reduce_in_order(s, &choices).iter().map(|x| sym_char(*x)).collect();
        prop_assert_eq!(reduced.to_string(), Signature::parse(&stepwise).unwrap().to_string());
        prop_assert_eq!(reduced.reduce().to_string(), reduced.to_string());
    }

    #[test]
    fn lowering_then_raising_is_the_identity((n, word) in d_word(), i in 1usize..=6) {
        let alphabet = Alphabet::d(n);
        let i = 1 + (i - 1) % n;
        if let Some(w) = act(&word, i, Dir::F, &alphabet) {
            prop_assert_eq!(act(&w, i, Dir::E, &alphabet), Some(word.clone()));
        }
        if let Some(w) = act(&word, i, Dir::E, &alphabet) {
            prop_assert_eq!(act(&w, i, Dir::F, &alphabet), Some(word.clone()));
        }
    }

    #[test]
    fn lowering_subtracts_a_simple_root((n, word) in d_word(), i in 1usize..=6) {
        let alphabet = Alphabet::d(n);
        let cartan = CartanData::d(n);
        let i = 1 + (i - 1) % n;
        if let Some(w) = act(&word, i, Dir::F, &alphabet) {
            let before = alphabet.word_weight(&word);
            let after = alphabet.word_weight(&w);
            let diff: Vec<i32> = before.iter().zip(&after).map(|(a, b)| a - b).collect();
            prop_assert_eq!(&diff, &cartan.simple_roots[i - 1]);
            let (eps, phi) = word_eps_phi(&word, i, &alphabet);
            prop_assert_eq!(phi as i32 - eps as i32, cartan.pairing(i, &before));
        }
    }

    #[test]
    fn c2_words_obey_the_same_rules(word in prop::collection::vec(prop_oneof![Just(1), Just(2), Just(-2), Just(-1)], 0..12), i in 1usize..=2) {
        let alphabet = Alphabet::c(2);
        let cartan = CartanData::c2();
        if let Some(w) = act(&word, i, Dir::F, &alphabet) {
            prop_assert_eq!(act(&w, i, Dir::E, &alphabet), Some(word.clone()));
            let diff: Vec<i32> = alphabet.word_weight(&word).iter().zip(alphabet.word_weight(&w)).map(|(a, b)| a - b).collect();
            prop_assert_eq!(&diff, &cartan.simple_roots[i - 1]);
        }
    }

    #[test]
    fn random_walks_stay_in_the_tableau_model(k in 0..SHAPES.len(), steps in prop::collection::vec((1usize..=5, any::<bool>()), 0..30)) {
        let (shape, n) = SHAPES[k];
        let mut t = krcrystal::dtableau::highest_weight_tableau(shape, n).unwrap();
        for (i, lower) in steps {
            let i = 1 + (i - 1) % n;
            let dir = if lower { Dir::F } else { Dir::E };
            if let Some(u) = kashiwara(&t, n, i, dir) {
                prop_assert!(is_valid_d(&u, n), "{}", u);
                t = u;
            }
        }
        let g = cached_b(k);
        let v = g.index_of(&t);
        prop_assert!(v.is_some());
        let v = v.unwrap();
        for i in 1..=n {
            prop_assert_eq!(g.eps_phi(v, i), word_eps_phi(&t.column_word(), i, &Alphabet::d(n)));
        }
    }

    #[test]
    fn generated_crystals_have_one_highest_weight_vertex(k in 0..SHAPES.len()) {
        let g = cached_b(k);
        prop_assert_eq!(g.highest_weight_vertices(&g.colors.clone()).len(), 1);
    }

    #[test]
    fn weight_multiplicities_are_weyl_symmetric(k in 0..SHAPES.len(), i in 1usize..=5) {
        let (_, n) = SHAPES[k];
        let i = 1 + (i - 1) % n;
        let g = cached_b(k);
        let cartan = CartanData::d(n);
        let mut count: HashMap<Vec<i32>, usize> = HashMap::new();
        for w in &g.weights {
            *count.entry(w.clone()).or_default() += 1;
        }
        for (w, m) in &count {
            prop_assert_eq!(count.get(&cartan.reflect(i, w)).copied().unwrap_or(0), *m);
        }
    }

    #[test]
    fn dual_map_conjugates_the_operators(k in 0..SHAPES.len(), pick in any::<usize>(), i in 1usize..=5) {
        let (_, n) = SHAPES[k];
        let i = 1 + (i - 1) % n;
        let g = cached_b(k);
        let star = dual_map(g, n, DualConvention::Twisted).unwrap();
        let v = random_vertex(g, pick);
        if let Some(w) = g.f_op(v, i) {
            prop_assert_eq!(Some(star[w]), g.e_op(star[v], tau(i, n)));
        }
        prop_assert_eq!(star[star[v]], v);
    }

    #[test]
    fn reduced_form_keeps_the_inner_colors(k in 1usize..=3, n in 4usize..=5, pick in any::<usize>()) {
        let key = if n == 4 { [4usize, 5, 6][k - 1] } else { usize::MAX };
        let g: &CrystalGraph<Tableau> = if key != usize::MAX {
            cached_b(key)
        } else {
            static G5: OnceLock<Vec<CrystalGraph<Tableau>>> = OnceLock::new();
            &G5.get_or_init(|| (1..=3).map(|k| generate_b_default(&[k, k], 5).unwrap()).collect())[k - 1]
        };
        let g_n = if key != usize::MAX { SHAPES[key].1 } else { n };
        prop_assume!(g.vertices[0].rows.len() == 2);
        let v = random_vertex(g, pick);
        let t = &g.vertices[v];
        let red = reduced_form(t);
        let word = red.skew.column_word();
        for i in 2..=g_n {
            prop_assert_eq!(word_eps_phi(&word, i, &Alphabet::d(g_n)), g.eps_phi(v, i));
        }
    }

    #[test]
    fn branching_strata_are_symmetric(k in 0..SHAPES.len()) {
        let bc = branch_decompose(cached_b(k)).unwrap();
        prop_assert!(bc.is_symmetric());
        prop_assert!(bc.one_box_violations().is_empty());
        let total: usize = bc.vertices.iter().map(|v| v.size).sum();
        prop_assert_eq!(total, cached_b(k).len());
    }

    #[test]
    fn graph_documents_round_trip(k in 0..SHAPES.len()) {
        let g = cached_b(k);
        let back = CrystalGraph::<Tableau>::from_json(&g.to_json()).unwrap();
        prop_assert!(&back == g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn affine_sigma_and_zero_arrows(s in 1usize..=2, pick in any::<usize>()) {
        let (b2s, b) = affine(4, s);
        let v = random_vertex(&b.graph, pick);
        let t = &b.graph.vertices[v];
        let st = b2s.sigma(t).unwrap();
        prop_assert_eq!(&b2s.sigma(&st).unwrap(), t);
        // f0 = σ f1 σ, e0 = σ e1 σ.
        let via_f1 = b2s.op(&st, 1, Dir::F).unwrap().map(|x| b2s.sigma(&x).unwrap());
        prop_assert_eq!(b.graph.f_op(v, 0).map(|w| b.graph.vertices[w].clone()), via_f1);
        let via_e1 = b2s.op(&st, 1, Dir::E).unwrap().map(|x| b2s.sigma(&x).unwrap());
        prop_assert_eq!(b.graph.e_op(v, 0).map(|w| b.graph.vertices[w].clone()), via_e1);
        if let Some(w) = b.graph.f_op(v, 0) {
            prop_assert_eq!(b.stratum[w], b.stratum[v] + 1);
        }
        // ε and φ of colors 0 and 1 are exchanged by σ.
        let sv = b.graph.index_of(&st).unwrap();
        prop_assert_eq!(b.graph.eps_phi(v, 0), b.graph.eps_phi(sv, 1));
    }

    #[test]
    fn affine_drop_fill_round_trip(n in 4usize..=5, s in 0usize..=2, pick in any::<usize>()) {
        prop_assume!(!(n == 5 && s == 2));
        let (_, b) = affine(n, s);
        let v = random_vertex(&b.graph, pick);
        let t = &b.graph.vertices[v];
        let d = drop(t, n).unwrap();
        prop_assert_eq!(&fill(&d, s, n).unwrap(), t);
        prop_assert_eq!(d.rows.iter().map(|r| r.len()).sum::<usize>(), 2 * b.component[v]);
    }

    #[test]
    fn inner_colors_are_kept_by_the_embedding(s in 1usize..=2, pick in any::<usize>()) {
        let (b2s, b) = affine(4, s);
        let below: Vec<usize> = (0..b.graph.len()).filter(|&v| b.component[v] < s).collect();
        let v = below[pick % below.len()];
        let k = b.component[v];
        let d = drop(&b.graph.vertices[v], 4).unwrap();
        let up = b2s.iota(&d, k, k + 1).unwrap();
        prop_assert!(up.is_some());
        let up = up.unwrap();
        let alphabet = Alphabet::d(4);
        for i in 2..=4 {
            prop_assert_eq!(word_eps_phi(&up.column_word(), i, &alphabet), word_eps_phi(&d.column_word(), i, &alphabet));
        }
    }

    #[test]
    fn c2_statistics_follow_the_transition_laws(l1 in 1usize..=4, l2 in 0usize..=3, pick in any::<usize>()) {
        prop_assume!(l2 <= l1);
        let g = c2_crystal(l1, l2);
        let t = &g.vertices[random_vertex(g, pick)];
        let s = t.abcd();
        if s.a < s.b {
            let u = t.op(1, Dir::E);
            prop_assert!(u.is_some());
            let n = u.unwrap().abcd();
            prop_assert_eq!((n.a, n.b), (s.a, s.b - 1));
        }
        if s.c < s.d {
            let u = t.op(2, Dir::E);
            prop_assert!(u.is_some());
            prop_assert_eq!(u.unwrap().abcd().d, s.d - 1);
        }
    }
}
