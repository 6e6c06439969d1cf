use std::sync::Arc;

use super::factor::Factor;
use crate::error::{Error, Result};
use crate::padic::{PadicElement, ResidueRing, RingElem};
use crate::poly::MultiPoly;
use crate::scalar::{Algebra, Scalar};

/// One letter of a word: a factor, possibly formally inverted.
#[derive(Clone, Debug, PartialEq)]
pub struct WordFactor<C: Scalar> {
    pub factor: Factor<C>,
    pub inverted: bool,
}

impl<C: Scalar> WordFactor<C> {
    pub fn new(factor: Factor<C>) -> Self {
        WordFactor { factor, inverted: false }
    }

    pub fn inverse(&self) -> Self {
        WordFactor { factor: self.factor.clone(), inverted: !self.inverted }
    }
}

/// An automorphism of affine r-space given as a product F_1 ∘ ... ∘ F_m of
/// invertible factors (F_m acts first), optionally conjugated: with conjugator
/// f the word stands for f^{-1} ∘ F_1 ∘ ... ∘ F_m ∘ f.
#[derive(Clone, Debug, PartialEq)]
pub struct AutoWord<C: Scalar> {
    dim: usize,
    ring: Arc<ResidueRing>,
    factors: Vec<WordFactor<C>>,
    conjugator: Option<Vec<WordFactor<C>>>,
}

impl<C: Scalar> AutoWord<C> {
    pub fn new(
        ring: &Arc<ResidueRing>,
        dim: usize,
        factors: Vec<WordFactor<C>>,
        conjugator: Option<Vec<WordFactor<C>>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidMap("dimension must be positive".into()));
        }
        for wf in factors.iter().chain(conjugator.iter().flatten()) {
            if wf.factor.dimension() != dim {
                return Err(Error::InvalidMap(format!(
                    "factor of dimension {} in a word of dimension {dim}",
                    wf.factor.dimension()
                )));
            }
        }
        Ok(AutoWord { dim, ring: ring.clone(), factors, conjugator })
    }

    pub fn identity(ring: &Arc<ResidueRing>, dim: usize) -> Self {
        AutoWord { dim, ring: ring.clone(), factors: Vec::new(), conjugator: None }
    }

    pub fn from_factors(ring: &Arc<ResidueRing>, factors: Vec<Factor<C>>) -> Result<Self> {
        let dim = factors.first().map(Factor::dimension).unwrap_or(2);
        Self::new(ring, dim, factors.into_iter().map(WordFactor::new).collect(), None)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn factors(&self) -> &[WordFactor<C>] {
        &self.factors
    }

    pub fn conjugator(&self) -> Option<&[WordFactor<C>]> {
        self.conjugator.as_deref()
    }

    /// The unconjugated product of factors.
    pub fn body(&self) -> Self {
        AutoWord { conjugator: None, ..self.clone() }
    }

    /// The conjugator as a word of its own (identity when absent).
    pub fn conjugator_word(&self) -> Self {
        AutoWord {
            dim: self.dim,
            ring: self.ring.clone(),
            factors: self.conjugator.clone().unwrap_or_default(),
            conjugator: None,
        }
    }

    /// f^{-1} ∘ self ∘ f, merging with any existing conjugator.
    pub fn conjugate_by(&self, f: &AutoWord<C>) -> Result<Self> {
        if f.dim != self.dim {
            return Err(Error::InvalidMap("conjugator dimension mismatch".into()));
        }
        let mut conj = self.conjugator.clone().unwrap_or_default();
        conj.extend(f.flattened());
        Ok(AutoWord { conjugator: Some(conj), ..self.clone() })
    }

    /// Factor sequence of the whole map, conjugator included, applied right-to-left.
    pub fn flattened(&self) -> Vec<WordFactor<C>> {
        match &self.conjugator {
            None => self.factors.clone(),
            Some(f) => {
                let mut seq: Vec<WordFactor<C>> = f.iter().rev().map(WordFactor::inverse).collect();
                seq.extend(self.factors.iter().cloned());
                seq.extend(f.iter().cloned());
                seq
            }
        }
    }

    pub fn is_identity_word(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn apply<V: Algebra<C>>(&self, point: &[V]) -> Vec<V> {
        assert_eq!(point.len(), self.dim, "point dimension mismatch");
        let mut cur = point.to_vec();
        let seq = self.flattened();
        for wf in seq.iter().rev() {
            cur = wf.factor.apply(&cur, wf.inverted);
        }
        cur
    }

    /// Evaluation of the n-th iterate.
    pub fn apply_iterate<V: Algebra<C>>(&self, point: &[V], n: u64) -> Vec<V> {
        let mut cur = point.to_vec();
        for _ in 0..n {
            cur = self.apply(&cur);
        }
        cur
    }

    pub fn inverse(&self) -> Self {
        AutoWord {
            dim: self.dim,
            ring: self.ring.clone(),
            factors: self.factors.iter().rev().map(WordFactor::inverse).collect(),
            conjugator: self.conjugator.clone(),
        }
    }

    /// n-th iterate as a word; the conjugator is kept outside the repeated body.
    pub fn power(&self, n: usize) -> Self {
        let factors = (0..n).flat_map(|_| self.factors.iter().cloned()).collect();
        AutoWord { factors, ..self.clone() }
    }

    /// Product of the maps: `self ∘ other` (other acts first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::InvalidMap("dimension mismatch".into()));
        }
        let mut factors = self.flattened();
        factors.extend(other.flattened());
        Ok(AutoWord { dim: self.dim, ring: self.ring.clone(), factors, conjugator: None })
    }

    /// Every letter (conjugator included) is a non-inverted Hénon factor.
    pub fn is_henon_product(&self) -> bool {
        self.conjugator.is_none()
            && !self.factors.is_empty()
            && self.factors.iter().all(|wf| !wf.inverted && matches!(wf.factor, Factor::Henon(_)))
    }

    pub fn is_triangular_only(&self) -> bool {
        self.flattened().iter().all(|wf| matches!(wf.factor, Factor::Triangular(_)))
    }

    pub fn coefficients(&self) -> Vec<C> {
        self.factors
            .iter()
            .chain(self.conjugator.iter().flatten())
            .flat_map(|wf| wf.factor.coefficients().into_iter().cloned())
            .collect()
    }

    /// Coordinate functions of the map as polynomials.
    pub fn coordinate_polys(&self) -> Vec<MultiPoly<C>> {
        let vars: Vec<MultiPoly<C>> =
            (0..self.dim).map(|i| MultiPoly::var(&self.ring, self.dim, i)).collect();
        self.apply(&vars)
    }

    /// Coefficient-wise image of the word in another coefficient ring.
    pub fn try_map<D: Scalar>(
        &self,
        ring: &Arc<ResidueRing>,
        f: impl Fn(&C) -> Result<D>,
    ) -> Result<AutoWord<D>> {
        let map_seq = |seq: &[WordFactor<C>]| -> Result<Vec<WordFactor<D>>> {
            seq.iter()
                .map(|wf| Ok(WordFactor { factor: wf.factor.try_map(ring, &f)?, inverted: wf.inverted }))
                .collect()
        };
        Ok(AutoWord {
            dim: self.dim,
            ring: ring.clone(),
            factors: map_seq(&self.factors)?,
            conjugator: self.conjugator.as_deref().map(map_seq).transpose()?,
        })
    }
}

impl AutoWord<PadicElement> {
    /// Image of the word over O/p^k. Requires integral coefficients whose images
    /// keep every factor invertible.
    pub fn specialize(&self, ring: &Arc<ResidueRing>) -> Result<AutoWord<RingElem>> {
        self.try_map(ring, |c| c.to_ring(ring))
    }

    /// Factor-wise reduction to the residue field.
    pub fn reduce(&self) -> Result<AutoWord<RingElem>> {
        self.specialize(&ResidueRing::residue_field(self.ring.spec()))
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients().iter().all(PadicElement::is_integral)
    }
}

/// Reduction of a word to the special fiber.
pub fn reduce_word(w: &AutoWord<PadicElement>) -> Result<AutoWord<RingElem>> {
    w.reduce()
}
