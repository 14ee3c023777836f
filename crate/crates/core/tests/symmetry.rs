mod common;

use common::state_with_shape;
use graphsym::{
    antisymmetric_state, check_full_group, classify, cz_graph_state, enumerate_undirected,
    is_antisymmetric, is_symmetric, SymmetryClass, DEFAULT_TOL,
};
use proptest::prelude::*;

#[test]
fn generator_check_agrees_with_full_group_on_cz_states() {
    for n in 1..=4 {
        for g in enumerate_undirected(n).unwrap() {
            let s = cz_graph_state(&g).unwrap();
            assert_eq!(
                classify(&s, DEFAULT_TOL),
                check_full_group(&s, DEFAULT_TOL).unwrap(),
                "{g:?}"
            );
        }
    }
}

#[test]
fn generator_check_agrees_with_full_group_on_antisymmetric_states() {
    for n in 2..=4 {
        let s = antisymmetric_state(n, n).unwrap();
        assert_eq!(
            classify(&s, DEFAULT_TOL),
            check_full_group(&s, DEFAULT_TOL).unwrap(),
            "n = {n}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn generator_check_agrees_on_random_qutrit_states(s in state_with_shape(3, 3)) {
        prop_assert_eq!(classify(&s, DEFAULT_TOL), check_full_group(&s, DEFAULT_TOL).unwrap());
    }
}

#[test]
fn symmetric_iff_complete_for_nontrivial_graphs() {
    for n in 3..=5 {
        let mut symmetric = 0;
        for g in enumerate_undirected(n).unwrap() {
            let s = cz_graph_state(&g).unwrap();
            let sym = is_symmetric(&s, DEFAULT_TOL);
            if g.is_trivial() {
                // |+>^N: symmetric, but excluded from the count
                assert!(sym);
                continue;
            }
            assert_eq!(sym, g.is_complete(), "{g:?}");
            symmetric += usize::from(sym);
        }
        assert_eq!(symmetric, 1, "n = {n}");
    }
}

#[test]
fn no_cz_state_is_antisymmetric() {
    for n in 2..=4 {
        let w = 2f64.powf(-(n as f64) / 2.0);
        for g in enumerate_undirected(n).unwrap() {
            let s = cz_graph_state(&g).unwrap();
            assert!(!is_antisymmetric(&s, DEFAULT_TOL), "{g:?}");
            assert!((s.amplitudes()[0].re - w).abs() < 1e-12);
        }
    }
}

#[test]
fn witness_transposition_breaks_symmetry() {
    for n in 3..=5 {
        for g in enumerate_undirected(n).unwrap() {
            if g.is_trivial() || g.is_complete() {
                continue;
            }
            let w = g.find_witness().unwrap().unwrap();
            let t = w.breaking_transposition(n).unwrap();
            let s = cz_graph_state(&g).unwrap();
            let mut moved = s.clone();
            moved.apply_permutation(&t).unwrap();
            assert!(!moved.approx_eq(&s, DEFAULT_TOL).unwrap(), "{g:?} {w:?}");
        }
    }
}

#[test]
fn swapping_path_ends_can_fix_the_state() {
    // the ends of the path 1-2-3 are interchangeable, so P_13 fixes |G>_h1
    let g = graphsym::UndirectedGraph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
    let s = cz_graph_state(&g).unwrap();
    let mut moved = s.clone();
    moved
        .apply_permutation(&graphsym::Permutation::transposition(3, 0, 2).unwrap())
        .unwrap();
    assert!(moved.approx_eq(&s, DEFAULT_TOL).unwrap());
}

#[test]
fn classify_edgeless_and_small() {
    let s = cz_graph_state(&graphsym::UndirectedGraph::new(1).unwrap()).unwrap();
    assert_eq!(classify(&s, DEFAULT_TOL), SymmetryClass::FullySymmetric);
}
