mod common;

use common::*;
use padyn::autos::{
    check_iterate_locus, compose_symbolic, indeterminacy_locus, is_regular, is_special_henon, reduce_word,
    special_by_coefficients, AutoWord, Fiber, DEFAULT_MAX_DEGREE,
};
use padyn::Error;

#[test]
fn apply_and_inverse_examples() {
    let k = ring(3, 10);
    let w = g(&k, 0);
    assert_eq!(w.apply(&point(&k, &[1, 0])), point(&k, &[1, 1]));
    assert_eq!(w.apply(&point(&k, &[2, 2])), point(&k, &[2, 2]));
    let id = AutoWord::identity(&k, 2);
    assert_eq!(id.apply(&point(&k, &[5, 7])), point(&k, &[5, 7]));
    assert!(id.inverse().is_identity_word());
    let pt = point(&k, &[4, -11]);
    assert_eq!(w.inverse().apply(&w.apply(&pt)), pt);
    assert_eq!(w.inverse().inverse(), w);
}

#[test]
fn composition_degrees() {
    let k = ring(3, 10);
    let w = g(&k, 0);
    let gg = compose_symbolic(&w.power(2), DEFAULT_MAX_DEGREE).unwrap();
    let x = &gg[0];
    // (x² − y)² − x
    assert_eq!(x.degree(), Some(4));
    assert_eq!(x.coeff(&[4, 0]), Some(&int(&k, 1)));
    assert_eq!(x.coeff(&[2, 1]), Some(&int(&k, -2)));
    assert_eq!(x.coeff(&[0, 2]), Some(&int(&k, 1)));
    assert_eq!(x.coeff(&[1, 0]), Some(&int(&k, -1)));
    assert_eq!(x.num_terms(), 4);
    let mixed = AutoWord::from_factors(
        &k,
        vec![henon(&k, int(&k, 1), &[0, 0, 1]), henon(&k, int(&k, 2), &[1, 0, 0, 1])],
    )
    .unwrap();
    let c = compose_symbolic(&mixed, DEFAULT_MAX_DEGREE).unwrap();
    assert_eq!(c[0].degree(), Some(6));
}

#[test]
fn henon_loci() {
    let k = ring(3, 10);
    let product = AutoWord::from_factors(
        &k,
        vec![henon(&k, int(&k, 1), &[0, 0, 1]), henon(&k, int(&k, 2), &[1, 1, 0, 1])],
    )
    .unwrap();
    for w in [g(&k, 0), g(&k, 1), product] {
        for fiber in [Fiber::Generic, Fiber::Special] {
            assert_eq!(indeterminacy_locus(&w, fiber).unwrap().labels(), ["[0:1:0]"]);
            assert_eq!(indeterminacy_locus(&w.inverse(), fiber).unwrap().labels(), ["[1:0:0]"]);
        }
        assert!(is_regular(&w).unwrap());
        assert!(is_special_henon(&w));
        assert!(special_by_coefficients(&w));
        assert!(check_iterate_locus(&w, 4).unwrap());
        assert!(check_iterate_locus(&w, 0).unwrap());
    }
}

#[test]
fn triangular_is_not_regular() {
    let k = ring(5, 8);
    let t = triangular(&k, &[1, 1], &[&[(&[0, 2], 1)], &[]]);
    let z = indeterminacy_locus(&t, Fiber::Generic).unwrap();
    let zi = indeterminacy_locus(&t.inverse(), Fiber::Generic).unwrap();
    assert!(!z.is_disjoint(&zi));
    assert!(z.labels().contains(&"[1:0:0]".to_string()));
    assert!(!is_regular(&t).unwrap());
    assert!(!is_special_henon(&t));
}

#[test]
fn speciality_fails_for_non_unit_a() {
    let k = ring(3, 10);
    let w = AutoWord::from_factors(&k, vec![henon(&k, int(&k, 3), &[0, 0, 1])]).unwrap();
    assert!(is_regular(&w).unwrap());
    assert!(!is_special_henon(&w));
    assert!(!special_by_coefficients(&w));
    assert_eq!(reduce_word(&w).unwrap_err(), Error::DegenerateReduction);
    let w = AutoWord::from_factors(&k, vec![henon(&k, frac(&k, 1, 3), &[0, 0, 1])]).unwrap();
    assert!(!is_special_henon(&w));
}

#[test]
fn reduction_examples() {
    let k = ring(3, 10);
    let r = reduce_word(&g(&k, 3)).unwrap();
    assert_eq!(r, reduce_word(&g(&k, 0)).unwrap());
    let w = g(&k, 4);
    assert_eq!(reduce_word(&w.inverse()).unwrap(), reduce_word(&w).unwrap().inverse());

    let k5 = ring(5, 6);
    let t = triangular(&k5, &[2, 4], &[&[(&[0, 2], 1)], &[(&[0, 0], 1)]]);
    let t_bar = reduce_word(&t).unwrap();
    let t_big = triangular(&k5, &[7, -1], &[&[(&[0, 2], 6)], &[(&[0, 0], 26)]]);
    assert_eq!(reduce_word(&t_big).unwrap(), t_bar);
}
