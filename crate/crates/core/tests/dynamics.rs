mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use padyn::autos::AutoWord;
use padyn::dynamics::*;
use padyn::padic::{ResidueRing, RingElem};

fn res(k: &std::sync::Arc<ResidueRing>, c: &[i128]) -> Vec<RingElem> {
    c.iter().map(|&x| RingElem::from_int(k, x)).collect()
}

#[test]
fn henon_cycles_over_f3() {
    let k = ring(3, 10);
    let cs = permutation_cycles(&g(&k, 0), 1).unwrap();
    assert_eq!(cs.counts, BTreeMap::from([(1, 2), (7, 1)]));
    assert_eq!(cs.total_points(), 9);
    assert_eq!(cs.to_csv(), "length,count\n1,2\n7,1\n");
    let id = permutation_cycles(&AutoWord::identity(&k, 2), 2).unwrap();
    assert_eq!(id.counts, BTreeMap::from([(1, 81)]));
}

#[test]
fn triangular_cycles_cover_space() {
    let k = ring(5, 6);
    let t = triangular(&k, &[-1, -1], &[&[(&[0, 2], 1)], &[(&[0, 0], 1)]]);
    let cs = permutation_cycles(&t, 1).unwrap();
    assert_eq!(cs.total_points(), 25);
    assert_eq!(cs.counts, BTreeMap::from([(1, 1), (2, 2), (10, 2)]));
}

#[test]
fn budget_is_enforced() {
    let k = ring(3, 10);
    assert!(matches!(
        permutation_cycles_with(&g(&k, 0), 3, 100),
        Err(padyn::Error::BudgetExceeded { size: 729, budget: 100 })
    ));
}

#[test]
fn period_detection() {
    let k = ring(3, 10);
    let w = g(&k, 0);
    assert_eq!(detect_period(&w, &point(&k, &[0, 0]), 10), Some(1));
    assert_eq!(detect_period(&w, &point(&k, &[2, 2]), 10), Some(1));
    assert_eq!(detect_period(&w, &point(&k, &[5, 1]), 10), None);
}

#[test]
fn henon_fixed_points() {
    let k = ring(3, 10);
    let w = g(&k, 0);
    let pts = enumerate_periodic_points(&w, 1).unwrap();
    let got: BTreeSet<String> = pts.records.iter().map(|r| format!("{:?}", r.point)).collect();
    let want: BTreeSet<String> =
        [point(&k, &[0, 0]), point(&k, &[2, 2])].iter().map(|p| format!("{p:?}")).collect();
    assert_eq!(got, want);
    assert!(pts.records.iter().all(|r| r.certified && r.period == 1 && r.nondegenerate));
    let rec = lift_periodic(&w, &res(&ResidueRing::residue_field(k.spec()), &[2, 2]), 1).unwrap();
    assert_eq!(rec.point, point(&k, &[2, 2]));
}

#[test]
fn linear_involution_spectrum() {
    let k = ring(3, 10);
    let w = affine(&k, &[&[-1, 0], &[0, -1]], &[0, 0]);
    let pts = enumerate_periodic_points(&w, 2).unwrap();
    assert_eq!(pts.periods(), BTreeSet::from([1, 2]));
    assert!(pts.uncertified.is_empty());
}

#[test]
fn triangular_lifts() {
    let k = ring(5, 6);
    let t = triangular(&k, &[-1, -1], &[&[(&[0, 2], 1)], &[(&[0, 0], 1)]]);
    let pts = enumerate_periodic_points(&t, 2).unwrap();
    assert_eq!(pts.periods(), BTreeSet::from([1, 2]));
    let fixed: Vec<_> = pts.records.iter().filter(|r| r.period == 1).collect();
    assert_eq!(fixed.len(), 1);
    assert_eq!(fixed[0].point, vec![frac(&k, 1, 8), frac(&k, 1, 2)]);
    for r in pts.records.iter().filter(|r| r.period == 2) {
        assert_eq!(r.point[1], frac(&k, 1, 2));
    }
}

#[test]
fn tower_divisibility() {
    let k = ring(3, 10);
    assert_eq!(tower_violations(&g(&k, 0), 3, DEFAULT_BUDGET).unwrap(), 0);
}

#[test]
fn family_bounds_stabilize() {
    let k = ring(3, 10);
    let spectra = [BTreeSet::from([1, 7]), BTreeSet::from([1, 3, 5]), BTreeSet::from([2, 4])];
    for (c, want) in spectra.iter().enumerate() {
        let r = empirical_period_bound(&g(&k, c as i128), &[1, 2, 3, 4]).unwrap();
        assert!(r.stabilized);
        assert_eq!(&r.certified_spectrum(), want);
        assert!(r.per_level.iter().all(|l| &l.certified_periods == want));
        assert!(r.per_level.iter().all(|l| l.cycles.total_points() == 9u128.pow(l.level)));
    }
}

#[test]
fn points_near_a_resonant_fixed_point_are_not_certified() {
    // The origin has multiplier of order 4; points close to it satisfy g⁴(P) = P
    // to N digits without being periodic.
    let k = ring(3, 10);
    let r = empirical_period_bound(&g(&k, 0), &[4, 5]).unwrap();
    assert_eq!(r.certified_spectrum(), BTreeSet::from([1, 7]));
    assert!(r.uncertified_cycles.iter().any(|u| u.length == 4));
}

#[test]
fn involution_bound() {
    let k = ring(3, 10);
    let w = affine(&k, &[&[-1, 0], &[0, -1]], &[0, 0]);
    let r = empirical_period_bound(&w, &[1, 2, 3]).unwrap();
    assert_eq!(r.m_empirical, 2);
    assert!(r.stabilized);
    assert!(r.per_level.iter().all(|l| l.certified_periods == BTreeSet::from([1, 2])));
}

#[test]
fn translation_has_no_certified_points() {
    let k = ring(5, 6);
    let t = triangular(&k, &[1, 1], &[&[(&[0, 0], 1)], &[(&[0, 0], 1)]]);
    let r = empirical_period_bound(&t, &[1, 2]).unwrap();
    assert_eq!(r.m_empirical, 0);
    assert!(r.no_periodic_points_certified);
    assert!(r.stabilized);
}

fn tri_factor(
    w: &AutoWord<padyn::padic::PadicElement>,
) -> padyn::autos::TriangularAuto<padyn::padic::PadicElement> {
    match &w.factors()[0].factor {
        padyn::autos::Factor::Triangular(t) => t.clone(),
        _ => unreachable!(),
    }
}

#[test]
fn triangular_period_reports() {
    let k = ring(5, 6);
    let t = triangular(&k, &[-1, -1], &[&[(&[0, 2], 1)], &[(&[0, 0], 1)]]);
    let r = triangular_periods(&tri_factor(&t), 10).unwrap();
    assert_eq!(r.realized, BTreeSet::from([1, 2]));
    assert_eq!(r.mu_bound, 2);
    assert_eq!(r.p_exponent, 0);
    assert!(r.violations.is_empty() && r.not_dividing_mu.is_empty());

    let lin = triangular(&k, &[2, 3], &[&[(&[0, 0], 1)], &[(&[0, 0], 1)]]);
    let r = triangular_periods(&tri_factor(&lin), 10).unwrap();
    assert_eq!(r.realized, BTreeSet::from([1]));
    assert_eq!(r.mu_bound, 1);
    let fixed = enumerate_periodic_points(&lin, 1).unwrap();
    assert_eq!(fixed.records[0].point, vec![int(&k, -1), frac(&k, -1, 2)]);

    let shift = triangular(&k, &[1, 1], &[&[(&[0, 0], 1)], &[(&[0, 0], 3)]]);
    let r = triangular_periods(&tri_factor(&shift), 25).unwrap();
    assert!(r.realized.is_empty());
    assert_eq!(r.mu_bound, 1);
}

#[test]
fn conjugation_preserves_periods() {
    use rand::SeedableRng;
    let k = ring(3, 10);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let phi = g(&k, 0);
    for _ in 0..5 {
        let f = AutoWord::from_factors(
            &k,
            vec![padyn::autos::Factor::Affine(padyn::sampling::random_affine(&k, &mut rng))],
        )
        .unwrap();
        let w = phi.conjugate_by(&f).unwrap();
        assert_eq!(permutation_cycles(&w, 1).unwrap().counts, BTreeMap::from([(1, 2), (7, 1)]));
        let r = conjugation_transport(&w, &f, 7, usize::MAX).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.transported, 9);
    }
    let id = AutoWord::identity(&k, 2);
    assert!(conjugation_transport(&phi, &id, 7, usize::MAX).unwrap().holds());
}

#[test]
fn inverse_round_trip_on_random_words() {
    use rand::SeedableRng;
    let k = ring(5, 8);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let w = padyn::sampling::random_word(&k, 3, 3, &mut rng);
        let inv = w.inverse();
        let (wr, ir) = (w.specialize(&k).unwrap(), inv.specialize(&k).unwrap());
        for _ in 0..20 {
            let p = padyn::sampling::random_point(&k, 2, &mut rng);
            let back = inv.apply(&w.apply(&p));
            assert!(back.iter().zip(&p).all(|(a, b)| a.agrees_to(b, 8)));
            let exact: Vec<_> = p.iter().map(|c| c.to_ring(&k).unwrap()).collect();
            assert_eq!(ir.apply(&wr.apply(&exact)), exact);
        }
    }
}
