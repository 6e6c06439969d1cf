//! Sparse multivariate polynomials and first-order jets.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::padic::ResidueRing;
use crate::scalar::{Algebra, Scalar};

/// Sparse polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<C: Scalar> {
    nvars: usize,
    ring: Arc<ResidueRing>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(ring: &Arc<ResidueRing>, nvars: usize) -> Self {
        MultiPoly { nvars, ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<ResidueRing>, nvars: usize, c: C) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function X_i.
    pub fn var(ring: &Arc<ResidueRing>, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(ring, nvars);
        p.add_term(e, C::one(ring));
        p
    }

    pub fn from_terms(
        ring: &Arc<ResidueRing>,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ring, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::InvalidMap(format!(
                    "exponent {e:?} has {} entries, expected {nvars}",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Univariate polynomial in variable `var` from low-to-high coefficients.
    pub fn univariate(ring: &Arc<ResidueRing>, nvars: usize, var: usize, coeffs: &[C]) -> Self {
        let mut p = Self::zero(ring, nvars);
        for (d, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = d as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&C> {
        self.terms.get(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Whether only variables with index in `vars` occur.
    pub fn uses_only(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.keys().all(|e| e.iter().enumerate().all(|(i, &k)| k == 0 || vars.contains(&i)))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring, self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c.mul(&C::from_int(&self.ring, e[var] as i64)));
        }
        out
    }

    /// Evaluation at a point of any algebra over the coefficients; substituting
    /// polynomials composes maps.
    pub fn eval<V: Algebra<C>>(&self, point: &[V]) -> V {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let anchor = &point[0];
        let mut powers: Vec<Vec<V>> = point.iter().map(|x| vec![x.constant(&C::one(&self.ring))]).collect();
        let mut acc = anchor.constant(&C::zero(&self.ring));
        for (e, c) in &self.terms {
            let mut term: Option<V> = None;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().times(&point[i]);
                    powers[i].push(next);
                }
                let f = &powers[i][k as usize];
                term = Some(match term {
                    None => f.clone(),
                    Some(t) => t.times(f),
                });
            }
            acc = match term {
                None => acc.plus(&anchor.constant(c)),
                Some(t) => acc.plus(&t.scale(c)),
            };
        }
        acc
    }

    /// Coefficient-wise image under `f`, which may fail.
    pub fn try_map<D: Scalar>(
        &self,
        ring: &Arc<ResidueRing>,
        f: impl Fn(&C) -> Result<D>,
    ) -> Result<MultiPoly<D>> {
        let mut out = MultiPoly::zero(ring, self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<C: Scalar> Algebra<C> for MultiPoly<C> {
    fn constant(&self, c: &C) -> Self {
        MultiPoly::constant(&self.ring, self.nvars, c.clone())
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
        MultiPoly::scale(self, c)
    }
    fn ring_of(&self) -> &Arc<ResidueRing> {
        &self.ring
    }
}

/// A value together with its gradient with respect to `r` input coordinates.
/// Evaluating a map on seeded jets yields its Jacobian by the chain rule.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<C: Scalar> {
    pub value: C,
    pub grad: Vec<C>,
}

impl<C: Scalar> Jet<C> {
    /// The jets of the coordinate functions at `point`.
    pub fn seed(point: &[C]) -> Vec<Self> {
        let ring = point[0].ring().clone();
        (0..point.len())
            .map(|i| Jet {
                value: point[i].clone(),
                grad: (0..point.len()).map(|j| if i == j { C::one(&ring) } else { C::zero(&ring) }).collect(),
            })
            .collect()
    }
}

impl<C: Scalar> Algebra<C> for Jet<C> {
    fn constant(&self, c: &C) -> Self {
        let z = C::zero(self.value.ring());
        Jet { value: c.clone(), grad: vec![z; self.grad.len()] }
    }
    fn plus(&self, other: &Self) -> Self {
        Jet {
            value: self.value.add(&other.value),
            grad: self.grad.iter().zip(&other.grad).map(|(a, b)| a.add(b)).collect(),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        Jet {
            value: self.value.sub(&other.value),
            grad: self.grad.iter().zip(&other.grad).map(|(a, b)| a.sub(b)).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        Jet {
            value: self.value.mul(&other.value),
            grad: self
                .grad
                .iter()
                .zip(&other.grad)
                .map(|(da, db)| self.value.mul(db).add(&other.value.mul(da)))
                .collect(),
        }
    }
    fn scale(&self, c: &C) -> Self {
        Jet { value: self.value.mul(c), grad: self.grad.iter().map(|g| g.mul(c)).collect() }
    }
    fn ring_of(&self) -> &Arc<ResidueRing> {
        self.value.ring()
    }
}
