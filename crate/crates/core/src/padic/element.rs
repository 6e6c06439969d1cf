use std::fmt;
use std::sync::Arc;

use super::field::FieldSpec;
use super::ring::{ResidueElement, ResidueRing, RingElem};
use crate::error::{Error, Result};

/// An element of K in floating-valuation form p^val * unit, with the unit known
/// modulo p^N. Exact zero is a separate state rather than "valuation >= N".
///
/// The context is the working ring O/p^N; two elements are compatible when their
/// working rings agree.
#[derive(Clone)]
pub struct PadicElement {
    ring: Arc<ResidueRing>,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    Finite { val: i64, unit: Vec<u64> },
}

/// Arithmetic selector for [`PadicElement::field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PadicElement {
    pub fn zero(ring: &Arc<ResidueRing>) -> Self {
        PadicElement { ring: ring.clone(), repr: Repr::Zero }
    }

    pub fn one(ring: &Arc<ResidueRing>) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: &Arc<ResidueRing>, n: i128) -> Self {
        if n == 0 {
            return Self::zero(ring);
        }
        let p = ring.spec().prime() as i128;
        let mut n = n;
        let mut v = 0;
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        let unit = RingElem::from_int(ring, n);
        PadicElement { ring: ring.clone(), repr: Repr::Finite { val: v, unit: unit.coeffs().to_vec() } }
    }

    /// The rational number `num/den`; `den` must be nonzero.
    pub fn from_fraction(ring: &Arc<ResidueRing>, num: i128, den: i128) -> Result<Self> {
        Self::from_int(ring, num).div(&Self::from_int(ring, den))
    }

    /// p^val * unit, where `unit` is a ring element of any level. Digits beyond the
    /// level of `unit` are taken to be zero.
    pub fn from_parts(ring: &Arc<ResidueRing>, val: i64, unit: &RingElem) -> Self {
        let lifted = RingElem::from_raw(ring, unit.coeffs().to_vec());
        Self::normalize(ring, val, lifted)
    }

    /// The element of O represented by the digits of `x` (canonical lift).
    pub fn from_ring(ring: &Arc<ResidueRing>, x: &RingElem) -> Self {
        Self::from_parts(ring, 0, x)
    }

    fn normalize(ring: &Arc<ResidueRing>, base: i64, u: RingElem) -> Self {
        match u.valuation() {
            None => Self::zero(ring),
            Some(v) => {
                let unit = u.div_p_pow(v);
                PadicElement {
                    ring: ring.clone(),
                    repr: Repr::Finite { val: base + v as i64, unit: unit.coeffs().to_vec() },
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.ring.spec()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    /// Valuation; `None` stands for +infinity (exact zero).
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Finite { val, .. } => Some(*val),
        }
    }

    /// The unit part as an element of O/p^N; `None` for zero.
    pub fn unit(&self) -> Option<RingElem> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Finite { unit, .. } => Some(RingElem::from_raw(&self.ring, unit.clone())),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    fn compatible(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    /// Checked arithmetic: errors on mismatched fields and on division by zero.
    pub fn field_arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::SpecMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(other),
            ArithOp::Sub => self.sub(other),
            ArithOp::Mul => self.mul(other),
            ArithOp::Div => return self.div(other),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "field mismatch");
        let (lo, hi) = match (&self.repr, &other.repr) {
            (Repr::Zero, _) => return other.clone(),
            (_, Repr::Zero) => return self.clone(),
            (Repr::Finite { val: a, .. }, Repr::Finite { val: b, .. }) => {
                if a <= b {
                    (self, other)
                } else {
                    (other, self)
                }
            }
        };
        let va = lo.valuation().unwrap();
        let vb = hi.valuation().unwrap();
        let shift = (vb - va).min(self.ring.level() as i64) as u32;
        let s = lo.unit().unwrap().add(&hi.unit().unwrap().mul_p_pow(shift));
        Self::normalize(&self.ring, va, s)
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Finite { val, .. } => PadicElement {
                ring: self.ring.clone(),
                repr: Repr::Finite { val: *val, unit: self.unit().unwrap().neg().coeffs().to_vec() },
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.compatible(other), "field mismatch");
        match (&self.repr, &other.repr) {
            (Repr::Finite { val: a, .. }, Repr::Finite { val: b, .. }) => {
                let u = self.unit().unwrap().mul(&other.unit().unwrap());
                PadicElement {
                    ring: self.ring.clone(),
                    repr: Repr::Finite { val: a + b, unit: u.coeffs().to_vec() },
                }
            }
            _ => Self::zero(&self.ring),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match &self.repr {
            Repr::Zero => Err(Error::DivisionByZero),
            Repr::Finite { val, .. } => {
                let u = self.unit().unwrap().inv().expect("units are invertible");
                Ok(PadicElement {
                    ring: self.ring.clone(),
                    repr: Repr::Finite { val: -val, unit: u.coeffs().to_vec() },
                })
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other) {
            return Err(Error::SpecMismatch);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplication by p^k for any integer k.
    pub fn shift(&self, k: i64) -> Self {
        match &self.repr {
            Repr::Zero => self.clone(),
            Repr::Finite { val, unit } => PadicElement {
                ring: self.ring.clone(),
                repr: Repr::Finite { val: val + k, unit: unit.clone() },
            },
        }
    }

    /// Image of an integral element in O/p^k.
    pub fn to_ring(&self, target: &Arc<ResidueRing>) -> Result<RingElem> {
        match &self.repr {
            Repr::Zero => Ok(RingElem::zero(target)),
            Repr::Finite { val, .. } if *val < 0 => Err(Error::NonIntegralCoefficient),
            Repr::Finite { val, .. } => {
                let u = self.unit().unwrap().reduce_to(target);
                Ok(u.mul_p_pow((*val).min(target.level() as i64) as u32))
            }
        }
    }

    /// Reduction modulo the maximal ideal.
    pub fn reduce_to_residue(&self) -> Result<ResidueElement> {
        let field = ResidueRing::residue_field(self.spec());
        self.to_ring(&field).map_err(|_| Error::NegativeValuation)
    }

    /// Whether x - y vanishes to absolute precision `n` (or exactly).
    pub fn agrees_to(&self, other: &Self, n: i64) -> bool {
        self.sub(other).valuation().is_none_or(|v| v >= n)
    }
}

impl PartialEq for PadicElement {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.repr == other.repr
    }
}

impl Eq for PadicElement {}

impl std::hash::Hash for PadicElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl fmt::Debug for PadicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::literal::format_element(self))
    }
}

impl fmt::Display for PadicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::literal::format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(p: u64, n: u32) -> Arc<ResidueRing> {
        ResidueRing::working(&FieldSpec::qp(p, n).unwrap())
    }

    #[test]
    fn additive_identity() {
        let k = qp(5, 4);
        let a = PadicElement::from_fraction(&k, 3, 7).unwrap();
        assert_eq!(PadicElement::zero(&k).add(&a), a);
    }

    #[test]
    fn carry_raises_valuation() {
        let k = qp(5, 4);
        let s = PadicElement::from_int(&k, 2).add(&PadicElement::from_int(&k, 3));
        assert_eq!(s, PadicElement::from_int(&k, 5));
        assert_eq!(s.valuation(), Some(1));
    }

    #[test]
    fn one_over_two_mod_25() {
        let k = qp(5, 2);
        let x = PadicElement::one(&k).field_arith(&PadicElement::from_int(&k, 2), ArithOp::Div).unwrap();
        assert_eq!(x.unit().unwrap(), RingElem::from_int(&k, 13));
        assert_eq!(x.valuation(), Some(0));
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let k = qp(5, 2);
        let one = PadicElement::one(&k);
        assert_eq!(one.div(&PadicElement::zero(&k)), Err(Error::DivisionByZero));
        let other = PadicElement::one(&qp(3, 2));
        assert_eq!(one.field_arith(&other, ArithOp::Add), Err(Error::SpecMismatch));
    }

    #[test]
    fn valuations() {
        let k = qp(3, 6);
        assert_eq!(PadicElement::zero(&k).valuation(), None);
        assert_eq!(PadicElement::from_int(&k, 3).valuation(), Some(1));
        assert_eq!(PadicElement::from_int(&k, 9 + 27).valuation(), Some(2));
        assert_eq!(PadicElement::from_fraction(&k, 1, 9).unwrap().valuation(), Some(-2));
    }

    #[test]
    fn residues() {
        let k = qp(5, 3);
        let f = ResidueRing::residue_field(k.spec());
        assert_eq!(PadicElement::from_int(&k, 5).reduce_to_residue().unwrap(), RingElem::zero(&f));
        assert_eq!(PadicElement::from_int(&k, 7).reduce_to_residue().unwrap(), RingElem::from_int(&f, 2));
        assert_eq!(PadicElement::one(&k).reduce_to_residue().unwrap(), RingElem::one(&f));
        let bad = PadicElement::from_fraction(&k, 1, 5).unwrap();
        assert_eq!(bad.reduce_to_residue(), Err(Error::NegativeValuation));
    }

    #[test]
    fn cancellation_to_exact_zero() {
        let k = qp(3, 4);
        let a = PadicElement::from_int(&k, 1);
        let b = PadicElement::from_int(&k, 1 + 81);
        assert!(a.sub(&b).is_zero());
    }
}
