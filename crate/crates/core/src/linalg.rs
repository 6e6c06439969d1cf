//! Small dense linear algebra over coefficient rings.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::padic::{PadicElement, ResidueElement, ResidueRing, RingElem};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

pub type Matrix<C> = Vec<Vec<C>>;

/// Gauss-Jordan inverse, pivoting on entries of least valuation. `None` when some
/// pivot is not invertible in the coefficient ring.
pub fn invert<C: Scalar>(m: &Matrix<C>) -> Option<Matrix<C>> {
    let n = m.len();
    let ring = m[0][0].ring().clone();
    let mut a: Matrix<C> = m.clone();
    let mut inv: Matrix<C> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { C::one(&ring) } else { C::zero(&ring) }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).filter_map(|r| a[r][col].pivot_weight().map(|w| (w, r))).min()?.1;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = a[col][col].inverse()?;
        for j in 0..n {
            a[col][j] = a[col][j].mul(&pinv);
            inv[col][j] = inv[col][j].mul(&pinv);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                a[r][j] = a[r][j].sub(&factor.mul(&a[col][j]));
                inv[r][j] = inv[r][j].sub(&factor.mul(&inv[col][j]));
            }
        }
    }
    Some(inv)
}

pub fn mat_vec<C: Scalar>(m: &Matrix<C>, v: &[C]) -> Vec<C> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(C::zero(v[0].ring()), |acc, (a, b)| acc.add(&a.mul(b))))
        .collect()
}

/// Solves `J x = b` over O/p^k by elimination with unit pivots only. Columns with
/// no unit pivot are free and set to zero; rows left without a pivot are dropped.
/// Returns the solution and the rank modulo p.
pub fn solve_unit_pivots(j: &Matrix<RingElem>, b: &[RingElem]) -> (Vec<RingElem>, usize) {
    let rows = j.len();
    let cols = if rows == 0 { 0 } else { j[0].len() };
    let ring = b[0].ring().clone();
    let mut a = j.clone();
    let mut rhs = b.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used_rows = vec![false; rows];
    let mut used_cols = vec![false; cols];
    loop {
        let found = (0..rows)
            .filter(|&r| !used_rows[r])
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .find(|&(r, c)| !used_cols[c] && a[r][c].is_unit());
        let Some((pr, pc)) = found else { break };
        used_rows[pr] = true;
        used_cols[pc] = true;
        let pinv = a[pr][pc].inv().unwrap();
        for v in a[pr].iter_mut() {
            *v = v.mul(&pinv);
        }
        rhs[pr] = rhs[pr].mul(&pinv);
        for r in 0..rows {
            if r == pr || a[r][pc].is_zero() {
                continue;
            }
            let factor = a[r][pc].clone();
            let pivot_row = a[pr].clone();
            for (v, q) in a[r].iter_mut().zip(&pivot_row) {
                *v = v.sub(&factor.mul(q));
            }
            rhs[r] = rhs[r].sub(&factor.mul(&rhs[pr]));
        }
        pivots.push((pr, pc));
    }
    let mut x = vec![RingElem::zero(&ring); cols];
    for &(r, c) in &pivots {
        x[c] = rhs[r].clone();
    }
    (x, pivots.len())
}

/// Newton lift of a residue solution of a square integral system with unit
/// Jacobian determinant to the unique solution in O/p^N congruent to it.
pub fn newton_lift_system(
    ring: &Arc<ResidueRing>,
    system: &[MultiPoly<PadicElement>],
    start: &[ResidueElement],
) -> Result<Vec<PadicElement>> {
    let n = system.len();
    if start.len() != n || system.iter().any(|g| g.nvars() != n) {
        return Err(Error::InvalidMap("system must be square".into()));
    }
    let g: Vec<MultiPoly<RingElem>> =
        system.iter().map(|p| p.try_map(ring, |c| c.to_ring(ring))).collect::<Result<_>>()?;
    let jac: Vec<Vec<MultiPoly<RingElem>>> =
        g.iter().map(|gi| (0..n).map(|v| gi.derivative(v)).collect()).collect();
    let mut x: Vec<RingElem> = start.iter().map(|r| r.lift_to(ring)).collect();
    let field = start[0].ring();
    if g.iter().any(|gi| !gi.eval(&x).reduce_to(field).is_zero()) {
        return Err(Error::ResidueNotASolution);
    }
    let eval_jac = |x: &[RingElem]| -> Matrix<RingElem> {
        jac.iter().map(|row| row.iter().map(|d| d.eval(x)).collect()).collect()
    };
    let zero = vec![RingElem::zero(ring); n];
    if solve_unit_pivots(&eval_jac(&x), &zero).1 < n {
        return Err(Error::SingularJacobian);
    }
    for _ in 0..2 * ring.level() + 4 {
        let value: Vec<RingElem> = g.iter().map(|gi| gi.eval(&x)).collect();
        if value.iter().all(RingElem::is_zero) {
            return Ok(x.iter().map(|c| PadicElement::from_ring(ring, c)).collect());
        }
        let (delta, rank) = solve_unit_pivots(&eval_jac(&x), &value);
        if rank < n {
            return Err(Error::SingularJacobian);
        }
        x = x.iter().zip(&delta).map(|(a, d)| a.sub(d)).collect();
    }
    Err(Error::NoConvergence)
}
