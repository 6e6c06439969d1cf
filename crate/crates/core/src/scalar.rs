//! Coefficient abstraction shared by K (floating p-adic elements) and the finite
//! rings O/p^k, plus the evaluation targets that factor formulas are written against.

use std::fmt::Debug;
use std::sync::Arc;

use crate::padic::{PadicElement, ResidueRing, RingElem};

pub trait Scalar: Clone + PartialEq + Debug {
    fn ring(&self) -> &Arc<ResidueRing>;
    fn zero(ring: &Arc<ResidueRing>) -> Self;
    fn from_int(ring: &Arc<ResidueRing>, n: i64) -> Self;
    fn one(ring: &Arc<ResidueRing>) -> Self {
        Self::from_int(ring, 1)
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Valuation used to choose elimination pivots; `None` for zero.
    fn pivot_weight(&self) -> Option<i64>;
}

impl Scalar for PadicElement {
    fn ring(&self) -> &Arc<ResidueRing> {
        PadicElement::ring(self)
    }
    fn zero(ring: &Arc<ResidueRing>) -> Self {
        PadicElement::zero(ring)
    }
    fn from_int(ring: &Arc<ResidueRing>, n: i64) -> Self {
        PadicElement::from_int(ring, n as i128)
    }
    fn add(&self, other: &Self) -> Self {
        PadicElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        PadicElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        PadicElement::mul(self, other)
    }
    fn neg(&self) -> Self {
        PadicElement::neg(self)
    }
    fn is_zero(&self) -> bool {
        PadicElement::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn pivot_weight(&self) -> Option<i64> {
        self.valuation()
    }
}

impl Scalar for RingElem {
    fn ring(&self) -> &Arc<ResidueRing> {
        RingElem::ring(self)
    }
    fn zero(ring: &Arc<ResidueRing>) -> Self {
        RingElem::zero(ring)
    }
    fn from_int(ring: &Arc<ResidueRing>, n: i64) -> Self {
        RingElem::from_int(ring, n as i128)
    }
    fn add(&self, other: &Self) -> Self {
        RingElem::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RingElem::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RingElem::mul(self, other)
    }
    fn neg(&self) -> Self {
        RingElem::neg(self)
    }
    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn pivot_weight(&self) -> Option<i64> {
        self.valuation().map(i64::from)
    }
}

/// Anything a polynomial map can be evaluated on: scalars, polynomials, jets.
pub trait Algebra<C: Scalar>: Clone {
    /// The constant `c`, in the same ambient space as `self`.
    fn constant(&self, c: &C) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, c: &C) -> Self;

    fn power(&self, e: u32) -> Self {
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.times(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc.unwrap_or_else(|| self.constant(&C::one(self.ring_of())))
    }

    fn ring_of(&self) -> &Arc<ResidueRing>;
}

impl<C: Scalar> Algebra<C> for C {
    fn constant(&self, c: &C) -> Self {
        c.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, c: &C) -> Self {
        self.mul(c)
    }
    fn ring_of(&self) -> &Arc<ResidueRing> {
        self.ring()
    }
}
