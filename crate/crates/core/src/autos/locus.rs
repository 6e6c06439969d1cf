use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::compose::{compose_symbolic, leading_map, LeadingMap, DEFAULT_MAX_DEGREE};
use super::factor::Factor;
use super::word::AutoWord;
use crate::error::{Error, Result};
use crate::padic::{polynomial_roots, PadicElement, ResidueRing, RingElem, Root};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Which fiber of the model P²_O a locus is computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fiber {
    /// The generic fiber, over K.
    Generic,
    /// The special fiber, over the residue field.
    Special,
}

/// A point [X:Y:0] of the line at infinity, normalized so the first nonzero
/// coordinate is 1. Over K the point also records how many digits of its chart
/// coordinate are certified.
#[derive(Debug, Clone, PartialEq)]
pub struct InfinitePoint {
    pub x: PadicElement,
    pub y: PadicElement,
    precision: u32,
}

impl InfinitePoint {
    fn chart_root(&self) -> Root {
        if self.x.is_zero() {
            // [0:1:0] is the origin of the chart [z:1:0]
            Root { value: PadicElement::zero(self.y.ring()), precision: u32::MAX }
        } else {
            let value = self.y.clone();
            Root { value, precision: self.precision }
        }
    }

    fn matches(&self, other: &Self, fiber: Fiber) -> bool {
        match fiber {
            Fiber::Special => self.x == other.x && self.y == other.y,
            Fiber::Generic => {
                if self.x.is_zero() || other.x.is_zero() {
                    return self.x.is_zero() && other.x.is_zero();
                }
                self.chart_root().agrees(&other.chart_root())
            }
        }
    }
}

impl fmt::Display for InfinitePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:0]", self.x, self.y)
    }
}

/// A finite set of points on the line at infinity T = 0.
#[derive(Debug, Clone)]
pub struct ProjectivePointSet {
    pub fiber: Fiber,
    points: Vec<InfinitePoint>,
}

impl ProjectivePointSet {
    fn new(fiber: Fiber) -> Self {
        ProjectivePointSet { fiber, points: Vec::new() }
    }

    fn insert(&mut self, p: InfinitePoint) {
        if !self.points.iter().any(|q| q.matches(&p, self.fiber)) {
            self.points.push(p);
        }
    }

    pub fn points(&self) -> &[InfinitePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &InfinitePoint) -> bool {
        self.points.iter().any(|q| q.matches(p, self.fiber))
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.points.iter().any(|p| other.contains(p))
    }

    /// Points as sorted strings, e.g. `["[0:1:0]"]`.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }
}

impl PartialEq for ProjectivePointSet {
    fn eq(&self, other: &Self) -> bool {
        self.fiber == other.fiber
            && self.points.iter().all(|p| other.contains(p))
            && other.points.iter().all(|p| self.contains(p))
    }
}

impl fmt::Display for ProjectivePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// Fields over which common zeros of binary forms can be listed.
trait LocusField: Scalar {
    const FIBER: Fiber;
    fn roots(poly: &[Self]) -> Vec<(Self, u32)>;
    fn to_padic(&self, k: &Arc<ResidueRing>) -> PadicElement;
}

impl LocusField for PadicElement {
    const FIBER: Fiber = Fiber::Generic;
    fn roots(poly: &[Self]) -> Vec<(Self, u32)> {
        polynomial_roots(poly).into_iter().map(|r| (r.value, r.precision)).collect()
    }
    fn to_padic(&self, _k: &Arc<ResidueRing>) -> PadicElement {
        self.clone()
    }
}

impl LocusField for RingElem {
    const FIBER: Fiber = Fiber::Special;
    fn roots(poly: &[Self]) -> Vec<(Self, u32)> {
        let field = poly[0].ring().clone();
        (0..field.size() as u64)
            .map(|i| RingElem::from_index(&field, i))
            .filter(|x| poly.iter().rev().fold(RingElem::zero(&field), |acc, c| acc.mul(x).add(c)).is_zero())
            .map(|x| (x, 1))
            .collect()
    }
    fn to_padic(&self, k: &Arc<ResidueRing>) -> PadicElement {
        PadicElement::from_ring(k, self)
    }
}

/// Coefficients c_j of X^(D-j) Y^j.
fn binary_coeffs<C: Scalar>(form: &MultiPoly<C>, degree: u32) -> Vec<C> {
    (0..=degree)
        .map(|j| form.coeff(&[degree - j, j]).cloned().unwrap_or_else(|| C::zero(form.ring())))
        .collect()
}

fn common_zeros<C: LocusField>(lead: &LeadingMap<C>, k: &Arc<ResidueRing>) -> Result<ProjectivePointSet> {
    let d = lead.degree;
    let forms: Vec<Vec<C>> =
        lead.forms.iter().filter(|f| !f.is_zero()).map(|f| binary_coeffs(f, d)).collect();
    if forms.is_empty() {
        return Err(Error::DegenerateReduction);
    }
    let mut set = ProjectivePointSet::new(C::FIBER);
    let zero = PadicElement::zero(k);
    let one = PadicElement::one(k);
    if forms.iter().all(|c| c[d as usize].is_zero()) {
        set.insert(InfinitePoint { x: zero.clone(), y: one.clone(), precision: u32::MAX });
    }
    // Points [1:y:0]: common roots of A(1, y) for every nonzero form A.
    let mut candidates: Option<ProjectivePointSet> = None;
    for coeffs in &forms {
        let mut roots = ProjectivePointSet::new(C::FIBER);
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            // nonzero constant in y: no affine roots
        } else {
            for (y, precision) in C::roots(coeffs) {
                roots.insert(InfinitePoint { x: one.clone(), y: y.to_padic(k), precision });
            }
        }
        candidates = Some(match candidates {
            None => roots,
            Some(prev) => {
                let mut both = ProjectivePointSet::new(C::FIBER);
                for p in prev.points {
                    if roots.contains(&p) {
                        both.insert(p);
                    }
                }
                both
            }
        });
    }
    for p in candidates.unwrap().points {
        set.insert(p);
    }
    Ok(set)
}

fn require_plane<C: Scalar>(w: &AutoWord<C>) -> Result<()> {
    if w.dimension() != 2 {
        return Err(Error::UnsupportedDimension { expected: 2, got: w.dimension() });
    }
    Ok(())
}

/// Indeterminacy locus of the extension of `w` to P², computed on the generic
/// fiber or on the special fiber of P²_O.
pub fn indeterminacy_locus(w: &AutoWord<PadicElement>, fiber: Fiber) -> Result<ProjectivePointSet> {
    indeterminacy_locus_with(w, fiber, DEFAULT_MAX_DEGREE)
}

pub fn indeterminacy_locus_with(
    w: &AutoWord<PadicElement>,
    fiber: Fiber,
    max_degree: u32,
) -> Result<ProjectivePointSet> {
    require_plane(w)?;
    let k = w.ring();
    match fiber {
        Fiber::Generic => common_zeros(&leading_map(w, max_degree)?, k),
        Fiber::Special => {
            let lead = match w.reduce() {
                Ok(reduced) => leading_map(&reduced, max_degree)?,
                Err(Error::NonIntegralCoefficient | Error::DegenerateReduction) => {
                    // The factors do not reduce individually; reduce the expanded map.
                    let field = ResidueRing::residue_field(k.spec());
                    let coords = compose_symbolic(w, max_degree)?;
                    let reduced: Vec<MultiPoly<RingElem>> = coords
                        .iter()
                        .map(|p| p.try_map(&field, |c| c.to_ring(&field)))
                        .collect::<Result<_>>()?;
                    LeadingMap::of_coords(&reduced)
                }
                Err(e) => return Err(e),
            };
            if lead.degree == 0 {
                return Err(Error::DegenerateReduction);
            }
            common_zeros(&lead, k)
        }
    }
}

/// Nonlinear with disjoint loci Z(w) and Z(w^{-1}) over K.
pub fn is_regular(w: &AutoWord<PadicElement>) -> Result<bool> {
    require_plane(w)?;
    if leading_map(w, DEFAULT_MAX_DEGREE)?.degree < 2 {
        return Ok(false);
    }
    let z = indeterminacy_locus(w, Fiber::Generic)?;
    let zi = indeterminacy_locus(&w.inverse(), Fiber::Generic)?;
    Ok(z.is_disjoint(&zi))
}

/// A product of generalized Hénon maps with integral coefficients whose loci on
/// the special fiber, for the map and its inverse, are disjoint.
pub fn is_special_henon(w: &AutoWord<PadicElement>) -> bool {
    if w.dimension() != 2 || !w.is_henon_product() || !w.is_integral() {
        return false;
    }
    let z = indeterminacy_locus(w, Fiber::Special);
    let zi = indeterminacy_locus(&w.inverse(), Fiber::Special);
    match (z, zi) {
        (Ok(z), Ok(zi)) => z.is_disjoint(&zi),
        _ => false,
    }
}

/// Speciality read off the coefficients: every a is a unit and every polynomial
/// coefficient is integral.
pub fn special_by_coefficients(w: &AutoWord<PadicElement>) -> bool {
    w.dimension() == 2
        && w.is_henon_product()
        && w.factors().iter().all(|wf| match &wf.factor {
            Factor::Henon(h) => h.a().is_unit() && h.poly().iter().all(PadicElement::is_integral),
            _ => false,
        })
}

/// Z(w^n) = Z(w) and Z(w^{-n}) = Z(w^{-1}) for 1 <= n <= n_max.
pub fn check_iterate_locus(w: &AutoWord<PadicElement>, n_max: usize) -> Result<bool> {
    check_iterate_locus_with(w, n_max, DEFAULT_MAX_DEGREE)
}

pub fn check_iterate_locus_with(w: &AutoWord<PadicElement>, n_max: usize, max_degree: u32) -> Result<bool> {
    if n_max == 0 {
        return Ok(true);
    }
    let inv = w.inverse();
    let z = indeterminacy_locus_with(w, Fiber::Generic, max_degree)?;
    let zi = indeterminacy_locus_with(&inv, Fiber::Generic, max_degree)?;
    for n in 2..=n_max {
        if indeterminacy_locus_with(&w.power(n), Fiber::Generic, max_degree)? != z
            || indeterminacy_locus_with(&inv.power(n), Fiber::Generic, max_degree)? != zi
        {
            return Ok(false);
        }
    }
    Ok(true)
}
