use std::sync::Arc;

use super::element::PadicElement;
use super::ring::{ResidueElement, ResidueRing, RingElem};
use crate::error::{Error, Result};

/// Teichmüller representative of a nonzero residue: the fixed point of a -> a^q
/// starting from the canonical lift, computed in O/p^N.
pub fn teichmueller(ring: &Arc<ResidueRing>, r: &ResidueElement) -> Result<PadicElement> {
    if r.is_zero() {
        return Err(Error::ZeroResidue);
    }
    let q = ring.spec().residue_size() as u128;
    let mut a = r.lift_to(ring);
    for _ in 0..=ring.level() + 1 {
        let next = a.pow(q);
        if next == a {
            return Ok(PadicElement::from_ring(ring, &a));
        }
        a = next;
    }
    unreachable!("a -> a^q converges after at most N steps")
}

/// A root of unity certified at a given precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifiedOrder {
    pub order: u64,
    pub precision: u32,
}

/// Multiplicative order of `a` if it agrees with a root of unity to the working
/// precision. For p = 2 the roots of unity are ±ω.
pub fn root_of_unity_order(a: &PadicElement) -> Result<Option<CertifiedOrder>> {
    if !a.is_unit() {
        return Err(Error::NotAUnit);
    }
    let ring = a.ring();
    let residue = a.reduce_to_residue()?;
    let omega = teichmueller(ring, &residue)?;
    let base = residue.multiplicative_order().expect("unit residue has an order");
    let precision = ring.level();
    if *a == omega {
        return Ok(Some(CertifiedOrder { order: base, precision }));
    }
    if ring.spec().prime() == 2 && *a == omega.neg() {
        // ω has odd order, so -ω has twice that order
        return Ok(Some(CertifiedOrder { order: 2 * base, precision }));
    }
    Ok(None)
}

fn eval_ring(coeffs: &[RingElem], x: &RingElem) -> RingElem {
    coeffs.iter().rev().fold(RingElem::zero(x.ring()), |acc, c| acc.mul(x).add(c))
}

fn derivative_ring(coeffs: &[RingElem]) -> Vec<RingElem> {
    coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i128)).collect()
}

/// Newton lift of a simple residue root of an integral polynomial (coefficients
/// low-to-high) to the unique root in O/p^N congruent to it.
pub fn hensel_lift_root(
    ring: &Arc<ResidueRing>,
    g: &[PadicElement],
    r: &ResidueElement,
) -> Result<PadicElement> {
    let coeffs: Vec<RingElem> = g.iter().map(|c| c.to_ring(ring)).collect::<Result<_>>()?;
    let field = r.ring();
    let reduced: Vec<RingElem> = coeffs.iter().map(|c| c.reduce_to(field)).collect();
    if !eval_ring(&reduced, r).is_zero() || eval_ring(&derivative_ring(&reduced), r).is_zero() {
        return Err(Error::NotASimpleRoot);
    }
    let dcoeffs = derivative_ring(&coeffs);
    let mut x = r.lift_to(ring);
    for _ in 0..2 * ring.level() + 4 {
        let gx = eval_ring(&coeffs, &x);
        if gx.is_zero() {
            return Ok(PadicElement::from_ring(ring, &x));
        }
        let d = eval_ring(&dcoeffs, &x).inv().ok_or(Error::NotASimpleRoot)?;
        x = x.sub(&gx.mul(&d));
    }
    Err(Error::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::field::FieldSpec;

    fn qp(p: u64, n: u32) -> Arc<ResidueRing> {
        ResidueRing::working(&FieldSpec::qp(p, n).unwrap())
    }

    fn res(k: &Arc<ResidueRing>, n: i128) -> ResidueElement {
        RingElem::from_int(&ResidueRing::residue_field(k.spec()), n)
    }

    fn ints(k: &Arc<ResidueRing>, c: &[i128]) -> Vec<PadicElement> {
        c.iter().map(|&n| PadicElement::from_int(k, n)).collect()
    }

    #[test]
    fn teichmueller_in_z5_mod_25() {
        let k = qp(5, 2);
        assert_eq!(teichmueller(&k, &res(&k, 1)).unwrap(), PadicElement::one(&k));
        assert_eq!(teichmueller(&k, &res(&k, 2)).unwrap(), PadicElement::from_int(&k, 7));
        assert_eq!(teichmueller(&k, &res(&k, 4)).unwrap(), PadicElement::from_int(&k, 24));
        assert_eq!(teichmueller(&k, &res(&k, 0)), Err(Error::ZeroResidue));
    }

    #[test]
    fn roots_of_unity() {
        let k = qp(5, 2);
        let order = |n: i128, k: &Arc<ResidueRing>| {
            root_of_unity_order(&PadicElement::from_int(k, n)).unwrap().map(|c| c.order)
        };
        assert_eq!(order(1, &k), Some(1));
        assert_eq!(order(-1, &k), Some(2));
        assert_eq!(order(7, &k), Some(4));
        assert_eq!(order(7, &qp(5, 3)), None);
        assert_eq!(order(2, &k), None);
        assert_eq!(root_of_unity_order(&PadicElement::from_int(&k, 5)), Err(Error::NotAUnit));
    }

    #[test]
    fn minus_one_in_q2() {
        let k = qp(2, 5);
        let c = root_of_unity_order(&PadicElement::from_int(&k, -1)).unwrap().unwrap();
        assert_eq!(c.order, 2);
        assert_eq!(root_of_unity_order(&PadicElement::from_int(&k, 3)).unwrap(), None);
    }

    #[test]
    fn hensel_examples() {
        let k = qp(3, 6);
        let x = hensel_lift_root(&k, &ints(&k, &[-1, 0, 1]), &res(&k, 1)).unwrap();
        assert_eq!(x, PadicElement::one(&k));
        let x = hensel_lift_root(&k, &ints(&k, &[0, -1, 1]), &res(&k, 0)).unwrap();
        assert!(x.is_zero());
        let k5 = qp(5, 2);
        let x = hensel_lift_root(&k5, &ints(&k5, &[1, 0, 1]), &res(&k5, 2)).unwrap();
        assert_eq!(x, PadicElement::from_int(&k5, 7));
        // x^2 has a double root at 0
        assert_eq!(hensel_lift_root(&k, &ints(&k, &[0, 0, 1]), &res(&k, 0)), Err(Error::NotASimpleRoot));
    }
}
