mod common;

use common::*;
use padyn::padic::{format_element, parse_element, PadicElement};
use proptest::prelude::*;

proptest! {
    #[test]
    fn literal_round_trip(num in -10_000i128..10_000, den in 1i128..200, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let k = ring(p, 12);
        let x = PadicElement::from_fraction(&k, num, den).unwrap();
        let text = format_element(&x);
        prop_assert_eq!(parse_element(&k, &text).unwrap(), x);
    }

    #[test]
    fn field_axioms(a in -5_000i128..5_000, b in -5_000i128..5_000, c in 1i128..5_000) {
        let k = ring(3, 15);
        let (x, y, z) = (int(&k, a), int(&k, b), int(&k, c));
        // Equality holds to N digits; cancellation may change digits beyond p^N.
        prop_assert!(x.add(&y).sub(&y).agrees_to(&x, 15));
        prop_assert!(x.mul(&y.add(&z)).agrees_to(&x.mul(&y).add(&x.mul(&z)), 15));
        prop_assert!(x.mul(&z).div(&z).unwrap().agrees_to(&x, 15));
    }

    #[test]
    fn henon_inverse_round_trip(c in 0i128..9, x in -1_000i128..1_000, y in -1_000i128..1_000) {
        let k = ring(3, 10);
        let w = g(&k, c);
        let exact = w.specialize(&k).unwrap();
        let pt: Vec<_> = point(&k, &[x, y]).iter().map(|v| v.to_ring(&k).unwrap()).collect();
        prop_assert_eq!(exact.inverse().apply(&exact.apply(&pt)), pt);
    }
}
