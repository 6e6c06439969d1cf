use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{invert, mat_vec, Matrix};
use crate::padic::ResidueRing;
use crate::poly::MultiPoly;
use crate::scalar::{Algebra, Scalar};

/// Generalized Hénon map (x, y) -> (p(x) - a y, x) with p monic of degree >= 2.
#[derive(Clone, Debug, PartialEq)]
pub struct HenonFactor<C: Scalar> {
    a: C,
    a_inv: C,
    poly: Vec<C>,
}

impl<C: Scalar> HenonFactor<C> {
    /// `poly` holds the coefficients of p, low-to-high.
    pub fn new(a: C, poly: Vec<C>) -> Result<Self> {
        let a_inv =
            a.inverse().ok_or_else(|| Error::InvalidMap("Hénon coefficient a must be invertible".into()))?;
        let mut poly = poly;
        while poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        if poly.len() < 3 {
            return Err(Error::InvalidMap("Hénon polynomial must have degree >= 2".into()));
        }
        if *poly.last().unwrap() != C::one(a.ring()) {
            return Err(Error::InvalidMap("Hénon polynomial must be monic".into()));
        }
        Ok(HenonFactor { a, a_inv, poly })
    }

    pub fn a(&self) -> &C {
        &self.a
    }

    pub fn poly(&self) -> &[C] {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        (self.poly.len() - 1) as u32
    }

    fn eval_poly<V: Algebra<C>>(&self, x: &V) -> V {
        let mut iter = self.poly.iter().rev();
        let mut acc = x.constant(iter.next().unwrap());
        for c in iter {
            acc = acc.times(x).plus(&x.constant(c));
        }
        acc
    }

    pub fn apply<V: Algebra<C>>(&self, pt: &[V], inverted: bool) -> Vec<V> {
        let (x, y) = (&pt[0], &pt[1]);
        if inverted {
            // (x, y) -> (y, (p(y) - x) / a)
            vec![y.clone(), self.eval_poly(y).minus(x).scale(&self.a_inv)]
        } else {
            vec![self.eval_poly(x).minus(&y.scale(&self.a)), x.clone()]
        }
    }
}

/// Triangular automorphism (a_1 X_1 + F_1(X_2..X_r), ..., a_r X_r + F_r).
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularAuto<C: Scalar> {
    a: Vec<C>,
    a_inv: Vec<C>,
    f: Vec<MultiPoly<C>>,
}

impl<C: Scalar> TriangularAuto<C> {
    pub fn new(a: Vec<C>, f: Vec<MultiPoly<C>>) -> Result<Self> {
        let r = a.len();
        if r == 0 || f.len() != r {
            return Err(Error::InvalidMap("triangular map needs r coefficients and r polynomials".into()));
        }
        let a_inv = a
            .iter()
            .map(|c| c.inverse())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidMap("triangular coefficients a_i must be invertible".into()))?;
        for (i, fi) in f.iter().enumerate() {
            if fi.nvars() != r || !fi.uses_only(i + 1..r) {
                return Err(Error::InvalidMap(format!("F_{} may only involve X_{}..X_{}", i + 1, i + 2, r)));
            }
        }
        Ok(TriangularAuto { a, a_inv, f })
    }

    pub fn dimension(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[C] {
        &self.a
    }

    pub fn f(&self) -> &[MultiPoly<C>] {
        &self.f
    }

    pub fn apply<V: Algebra<C>>(&self, pt: &[V], inverted: bool) -> Vec<V> {
        let r = self.dimension();
        if !inverted {
            return (0..r).map(|i| pt[i].scale(&self.a[i]).plus(&self.f[i].eval(pt))).collect();
        }
        // Solve from the last coordinate up: X_i = (Y_i - F_i(X_{i+1..})) / a_i.
        let mut out: Vec<V> = pt.to_vec();
        for i in (0..r).rev() {
            let fi = self.f[i].eval(&out);
            out[i] = pt[i].minus(&fi).scale(&self.a_inv[i]);
        }
        out
    }
}

/// Affine automorphism X -> A X + b.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineAuto<C: Scalar> {
    matrix: Matrix<C>,
    inverse: Matrix<C>,
    translation: Vec<C>,
}

impl<C: Scalar> AffineAuto<C> {
    pub fn new(matrix: Matrix<C>, translation: Vec<C>) -> Result<Self> {
        let r = translation.len();
        if r == 0 || matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidMap("affine map needs an r x r matrix and r translations".into()));
        }
        let inverse =
            invert(&matrix).ok_or_else(|| Error::InvalidMap("affine matrix must be invertible".into()))?;
        Ok(AffineAuto { matrix, inverse, translation })
    }

    pub fn dimension(&self) -> usize {
        self.translation.len()
    }

    pub fn matrix(&self) -> &Matrix<C> {
        &self.matrix
    }

    pub fn translation(&self) -> &[C] {
        &self.translation
    }

    pub fn apply<V: Algebra<C>>(&self, pt: &[V], inverted: bool) -> Vec<V> {
        let lin = |m: &Matrix<C>, v: &[V]| -> Vec<V> {
            m.iter()
                .map(|row| row.iter().zip(v).map(|(c, x)| x.scale(c)).reduce(|a, b| a.plus(&b)).unwrap())
                .collect()
        };
        if inverted {
            let shifted: Vec<V> =
                pt.iter().zip(&self.translation).map(|(x, b)| x.minus(&x.constant(b))).collect();
            lin(&self.inverse, &shifted)
        } else {
            lin(&self.matrix, pt)
                .into_iter()
                .zip(&self.translation)
                .map(|(x, b)| x.plus(&x.constant(b)))
                .collect()
        }
    }

    /// Value of the affine map at a scalar point.
    pub fn apply_scalar(&self, v: &[C]) -> Vec<C> {
        mat_vec(&self.matrix, v).iter().zip(&self.translation).map(|(x, b)| x.add(b)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Factor<C: Scalar> {
    Henon(HenonFactor<C>),
    Triangular(TriangularAuto<C>),
    Affine(AffineAuto<C>),
}

impl<C: Scalar> Factor<C> {
    pub fn dimension(&self) -> usize {
        match self {
            Factor::Henon(_) => 2,
            Factor::Triangular(t) => t.dimension(),
            Factor::Affine(a) => a.dimension(),
        }
    }

    pub fn apply<V: Algebra<C>>(&self, pt: &[V], inverted: bool) -> Vec<V> {
        match self {
            Factor::Henon(h) => h.apply(pt, inverted),
            Factor::Triangular(t) => t.apply(pt, inverted),
            Factor::Affine(a) => a.apply(pt, inverted),
        }
    }

    pub fn coefficients(&self) -> Vec<&C> {
        match self {
            Factor::Henon(h) => std::iter::once(&h.a).chain(h.poly.iter()).collect(),
            Factor::Triangular(t) => {
                t.a.iter().chain(t.f.iter().flat_map(|p| p.terms().map(|(_, c)| c))).collect()
            }
            Factor::Affine(a) => a.matrix.iter().flatten().chain(a.translation.iter()).collect(),
        }
    }

    /// Coefficient-wise image; fails with `DegenerateReduction` when the image is
    /// no longer invertible.
    pub fn try_map<D: Scalar>(
        &self,
        ring: &Arc<ResidueRing>,
        f: &impl Fn(&C) -> Result<D>,
    ) -> Result<Factor<D>> {
        let degenerate = |e: Error| match e {
            Error::InvalidMap(_) => Error::DegenerateReduction,
            other => other,
        };
        Ok(match self {
            Factor::Henon(h) => Factor::Henon(
                HenonFactor::new(f(&h.a)?, h.poly.iter().map(f).collect::<Result<_>>()?)
                    .map_err(degenerate)?,
            ),
            Factor::Triangular(t) => Factor::Triangular(
                TriangularAuto::new(
                    t.a.iter().map(f).collect::<Result<_>>()?,
                    t.f.iter().map(|p| p.try_map(ring, f)).collect::<Result<_>>()?,
                )
                .map_err(degenerate)?,
            ),
            Factor::Affine(a) => Factor::Affine(
                AffineAuto::new(
                    a.matrix
                        .iter()
                        .map(|row| row.iter().map(f).collect::<Result<_>>())
                        .collect::<Result<_>>()?,
                    a.translation.iter().map(f).collect::<Result<_>>()?,
                )
                .map_err(degenerate)?,
            ),
        })
    }
}
