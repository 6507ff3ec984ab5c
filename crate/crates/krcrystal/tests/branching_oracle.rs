//! Branching component graphs computed from generated crystals, compared
//! with ±-diagram counts, the highest weight algorithm and the predicted
//! graphs.

use std::collections::BTreeMap;

use krcrystal::branching::{
    branch_decompose, enumerate_pm_diagrams, pm_to_hw_tableau, predicted_bc, rectangle_bc,
};
use krcrystal::dtableau::{generate_b_default, weight};

fn diagram_strata(shape: &[usize]) -> BTreeMap<(i32, Vec<i32>), usize> {
    let mut out = BTreeMap::new();
    for d in enumerate_pm_diagrams(shape, None) {
        let label: Vec<i32> = d.inner_partition().iter().map(|&x| x as i32).collect();
        *out.entry((d.height(), label)).or_insert(0) += 1;
    }
    out
}

const SHAPES: &[(&[usize], usize)] = &[
    (&[], 4),
    (&[1], 4),
    (&[2], 4),
    (&[3], 4),
    (&[1, 1], 4),
    (&[2, 1], 4),
    (&[2, 2], 4),
    (&[3, 1], 4),
    (&[3, 3], 4),
    (&[1, 1, 1], 5),
    (&[2, 1, 1], 5),
    (&[2, 2, 1], 5),
    (&[2, 2, 2], 5),
    (&[2, 2], 5),
    (&[2, 2, 1, 1], 6),
];

#[test]
fn components_match_diagrams() {
    for &(shape, n) in SHAPES {
        let g = generate_b_default(shape, n).unwrap();
        let bc = branch_decompose(&g).unwrap();
        let mut computed = BTreeMap::new();
        for v in &bc.vertices {
            *computed.entry((v.stratum, v.label.clone())).or_insert(0) += 1;
        }
        assert_eq!(computed, diagram_strata(shape), "shape {shape:?}, rank {n}");
        assert_eq!(bc.vertices.iter().map(|v| v.size).sum::<usize>(), g.len());
        assert!(bc.is_symmetric(), "shape {shape:?}");
        assert!(bc.one_box_violations().is_empty(), "shape {shape:?}");
        let strata = bc.strata();
        let width = shape.first().copied().unwrap_or(0) as i32;
        assert_eq!(strata.len() as i32, 2 * width + 1, "shape {shape:?}");
    }
}

#[test]
fn diagram_tableaux_are_the_highest_weight_vertices() {
    for &(shape, n) in SHAPES {
        let g = generate_b_default(shape, n).unwrap();
        let inner: Vec<usize> = (2..=n).collect();
        let mut hw: Vec<_> = g
            .highest_weight_vertices(&inner)
            .into_iter()
            .map(|v| g.vertices[v].clone())
            .collect();
        hw.sort();
        let diagrams = enumerate_pm_diagrams(shape, None);
        let mut images = Vec::new();
        for d in &diagrams {
            let t = pm_to_hw_tableau(d, n).unwrap();
            let w = weight(&t, n);
            assert_eq!(w[0], d.height(), "{d}");
            let inner_label: Vec<i32> = d.inner.iter().map(|&x| x as i32).collect();
            let mut expected = inner_label.clone();
            expected.resize(n - 1, 0);
            assert_eq!(&w[1..], &expected[..], "{d} -> {t}");
            images.push(t);
        }
        images.sort();
        let before = images.len();
        images.dedup();
        assert_eq!(
            images.len(),
            before,
            "shape {shape:?}: the algorithm is not injective"
        );
        assert_eq!(images, hw, "shape {shape:?}, rank {n}");
    }
}

#[test]
fn rectangles_match_the_prediction() {
    for &(k, s, n) in &[
        (1, 1, 4),
        (1, 2, 4),
        (1, 3, 4),
        (1, 4, 4),
        (2, 1, 4),
        (2, 2, 4),
        (2, 3, 4),
        (3, 1, 5),
        (3, 2, 5),
    ] {
        let shape = vec![s; k];
        let computed = branch_decompose(&generate_b_default(&shape, n).unwrap()).unwrap();
        let predicted = predicted_bc(&shape);
        assert!(!predicted.conjectural);
        assert!(
            computed.is_isomorphic(&predicted.graph),
            "{k} × {s}, rank {n}"
        );
        assert!(computed.is_isomorphic(&rectangle_bc(k, s)));
    }
}

#[test]
fn one_row_strata() {
    let bc = branch_decompose(&generate_b_default(&[3], 4).unwrap()).unwrap();
    let strata = bc.strata();
    assert_eq!(strata[&3], vec![Vec::<i32>::new()]);
    assert_eq!(strata[&2], vec![vec![1]]);
    assert_eq!(strata[&1], vec![vec![], vec![2]]);
    assert_eq!(strata[&0], vec![vec![1], vec![3]]);
}

#[test]
fn trivial_crystal_has_one_component() {
    let bc = branch_decompose(&generate_b_default(&[], 4).unwrap()).unwrap();
    assert_eq!(bc.vertices.len(), 1);
    assert_eq!(bc.vertices[0].stratum, 0);
    assert!(bc.edges.is_empty());
}

/// The product rule for non-rectangular shapes is reported, not asserted.
#[test]
fn product_rule_experiment() {
    for &(shape, n) in &[
        (&[3, 1][..], 4),
        (&[2, 1][..], 4),
        (&[2, 1, 1][..], 5),
        (&[3, 1, 1][..], 5),
        (&[3, 2, 2][..], 5),
    ] {
        let computed = branch_decompose(&generate_b_default(shape, n).unwrap()).unwrap();
        let predicted = predicted_bc(shape);
        let vertices_agree = {
            let mut a: Vec<_> = computed
                .vertices
                .iter()
                .map(|v| (v.stratum, v.label.clone()))
                .collect();
            let mut b: Vec<_> = predicted
                .graph
                .vertices
                .iter()
                .map(|v| (v.stratum, v.label.clone()))
                .collect();
            a.sort();
            b.sort();
            a == b
        };
        println!(
            "product rule {shape:?} rank {n}: hypothesis {}, vertices {}, isomorphic {}",
            predicted.hypothesis_holds,
            vertices_agree,
            computed.is_isomorphic(&predicted.graph)
        );
    }
}
