use std::fmt;
use std::sync::Arc;

use super::field::FieldSpec;
use crate::error::{Error, Result};

/// The finite ring O/p^k. Level 1 is the residue field F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueRing {
    spec: Arc<FieldSpec>,
    level: u32,
    modulus: u64,
    h: Vec<u64>,
}

impl ResidueRing {
    pub fn new(spec: &Arc<FieldSpec>, level: u32) -> Result<Arc<Self>> {
        if level == 0 || level > spec.precision() {
            return Err(Error::InvalidField(format!("level {level} outside 1..={}", spec.precision())));
        }
        let modulus = spec.prime_power(level);
        let h = spec.modulus_poly().iter().map(|c| c % modulus).collect();
        Ok(Arc::new(ResidueRing { spec: spec.clone(), level, modulus, h }))
    }

    /// The residue field F_q.
    pub fn residue_field(spec: &Arc<FieldSpec>) -> Arc<Self> {
        Self::new(spec, 1).expect("level 1 always valid")
    }

    /// O/p^N at the working precision of the field.
    pub fn working(spec: &Arc<FieldSpec>) -> Arc<Self> {
        Self::new(spec, spec.precision()).expect("working level always valid")
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.spec.degree()
    }

    /// Number of elements, p^(f k).
    pub fn size(&self) -> u128 {
        (self.modulus as u128).pow(self.degree() as u32)
    }
}

/// An element of O/p^k, stored as a coefficient vector of length f over Z/p^k.
#[derive(Clone)]
pub struct RingElem {
    ring: Arc<ResidueRing>,
    coeffs: Vec<u64>,
}

/// Residue field element; the level-1 case of [`RingElem`].
pub type ResidueElement = RingElem;

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

#[inline]
fn submod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

impl RingElem {
    pub fn from_coeffs(ring: &Arc<ResidueRing>, coeffs: &[i64]) -> Result<Self> {
        let f = ring.degree();
        if coeffs.len() > f {
            return Err(Error::InvalidField(format!(
                "expected at most {f} coefficients, got {}",
                coeffs.len()
            )));
        }
        let m = ring.modulus as i128;
        let mut v = vec![0u64; f];
        for (slot, &c) in v.iter_mut().zip(coeffs) {
            *slot = (c as i128).rem_euclid(m) as u64;
        }
        Ok(RingElem { ring: ring.clone(), coeffs: v })
    }

    /// Coefficients are reduced modulo p^k.
    pub(crate) fn from_raw(ring: &Arc<ResidueRing>, mut coeffs: Vec<u64>) -> Self {
        coeffs.resize(ring.degree(), 0);
        for c in coeffs.iter_mut() {
            *c %= ring.modulus;
        }
        RingElem { ring: ring.clone(), coeffs }
    }

    pub fn from_int(ring: &Arc<ResidueRing>, n: i128) -> Self {
        let mut v = vec![0u64; ring.degree()];
        v[0] = n.rem_euclid(ring.modulus as i128) as u64;
        RingElem { ring: ring.clone(), coeffs: v }
    }

    pub fn zero(ring: &Arc<ResidueRing>) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: &Arc<ResidueRing>) -> Self {
        Self::from_int(ring, 1)
    }

    /// Element with index `idx` in the radix-p^k encoding of the coefficient vector.
    pub fn from_index(ring: &Arc<ResidueRing>, mut idx: u64) -> Self {
        let m = ring.modulus;
        let coeffs = (0..ring.degree())
            .map(|_| {
                let c = idx % m;
                idx /= m;
                c
            })
            .collect();
        RingElem { ring: ring.clone(), coeffs }
    }

    pub fn index(&self) -> u64 {
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.ring.modulus + c)
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check(&self, other: &Self) {
        assert!(self.same_ring(other), "ring mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let m = self.ring.modulus;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| addmod(a, b, m)).collect();
        RingElem { ring: self.ring.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let m = self.ring.modulus;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| submod(a, b, m)).collect();
        RingElem { ring: self.ring.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        let m = self.ring.modulus;
        let coeffs = self.coeffs.iter().map(|&a| if a == 0 { 0 } else { m - a }).collect();
        RingElem { ring: self.ring.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let m = self.ring.modulus;
        let f = self.ring.degree();
        if f == 1 {
            return RingElem {
                ring: self.ring.clone(),
                coeffs: vec![mulmod(self.coeffs[0], other.coeffs[0], m)],
            };
        }
        let mut prod = vec![0u64; 2 * f - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = addmod(prod[i + j], mulmod(a, b, m), m);
            }
        }
        let h = &self.ring.h;
        for top in (f..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &hj) in h.iter().take(f).enumerate() {
                let idx = top - f + j;
                prod[idx] = submod(prod[idx], mulmod(c, hj, m), m);
            }
        }
        prod.truncate(f);
        RingElem { ring: self.ring.clone(), coeffs: prod }
    }

    pub fn scale_int(&self, n: i128) -> Self {
        self.mul(&RingElem::from_int(&self.ring, n))
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = RingElem::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Largest v < k with every coefficient divisible by p^v; `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        let p = self.ring.spec().prime();
        self.coeffs
            .iter()
            .filter(|&&c| c != 0)
            .map(|&c| {
                let mut c = c;
                let mut v = 0;
                while c % p == 0 {
                    c /= p;
                    v += 1;
                }
                v
            })
            .min()
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// Inverse of a unit: residue-field inverse lifted by Newton's iteration x <- x(2 - ax).
    pub fn inv(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let spec = self.ring.spec().clone();
        let field = ResidueRing::residue_field(&spec);
        let r = self.reduce_to(&field);
        let q = spec.residue_size() as u128;
        let r_inv = r.pow(q - 2);
        let mut x = r_inv.lift_to(&self.ring);
        let two = RingElem::from_int(&self.ring, 2);
        let mut prec = 1;
        while prec < self.ring.level {
            x = x.mul(&two.sub(&self.mul(&x)));
            prec *= 2;
        }
        debug_assert!(self.mul(&x) == RingElem::one(&self.ring));
        Some(x)
    }

    /// Image in a lower-level ring of the same field.
    pub fn reduce_to(&self, ring: &Arc<ResidueRing>) -> Self {
        assert!(ring.level <= self.ring.level && ring.spec == self.ring.spec);
        let m = ring.modulus;
        RingElem { ring: ring.clone(), coeffs: self.coeffs.iter().map(|c| c % m).collect() }
    }

    /// Canonical lift into a higher-level ring: the same coefficient digits.
    pub fn lift_to(&self, ring: &Arc<ResidueRing>) -> Self {
        assert!(ring.level >= self.ring.level && ring.spec == self.ring.spec);
        RingElem { ring: ring.clone(), coeffs: self.coeffs.clone() }
    }

    /// Exact division by p^v; every coefficient must be divisible. The result lives
    /// in the same ring, with the top `v` digits set to zero.
    pub(crate) fn div_p_pow(&self, v: u32) -> Self {
        let pv = self.ring.spec().prime_power(v);
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| {
                debug_assert!(c % pv == 0);
                c / pv
            })
            .collect();
        RingElem { ring: self.ring.clone(), coeffs }
    }

    /// Multiplication by p^v inside the ring (digits shifted past p^k vanish).
    pub(crate) fn mul_p_pow(&self, v: u32) -> Self {
        if v >= self.ring.level {
            return RingElem::zero(&self.ring);
        }
        let pv = self.ring.spec().prime_power(v);
        let m = self.ring.modulus;
        let coeffs = self.coeffs.iter().map(|&c| mulmod(c, pv, m)).collect();
        RingElem { ring: self.ring.clone(), coeffs }
    }

    /// Multiplicative order in F_q^x; only meaningful on the residue field.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.ring.level != 1 || self.is_zero() {
            return None;
        }
        let n = self.ring.spec().residue_size() - 1;
        let one = RingElem::one(&self.ring);
        divisors(n).into_iter().find(|&d| self.pow(d as u128) == one)
    }
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElem {}

impl std::hash::Hash for RingElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.level.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{} mod {}", self.coeffs[0], self.ring.modulus)
        } else {
            write!(f, "{:?} mod {}", self.coeffs, self.ring.modulus)
        }
    }
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
