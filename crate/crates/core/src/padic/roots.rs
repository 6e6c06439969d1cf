//! Roots in K of univariate polynomials, with the number of certified digits.

use std::sync::Arc;

use super::element::PadicElement;
use super::lift::hensel_lift_root;
use super::ring::{ResidueRing, RingElem};

/// A root approximation. For integral roots `precision` counts the p-adic digits
/// of `value` that are certified; for roots of negative valuation it counts the
/// certified digits of `1/value`.
#[derive(Debug, Clone, PartialEq)]
pub struct Root {
    pub value: PadicElement,
    pub precision: u32,
}

impl Root {
    /// The coordinate in the chart where the root is integral: the value itself,
    /// or its inverse (which then lies in pO).
    pub fn chart(&self) -> (bool, PadicElement) {
        match self.value.valuation() {
            Some(v) if v < 0 => (false, self.value.inv().unwrap()),
            _ => (true, self.value.clone()),
        }
    }

    /// Whether two approximations are compatible with the same root.
    pub fn agrees(&self, other: &Root) -> bool {
        let (ca, a) = self.chart();
        let (cb, b) = other.chart();
        ca == cb && a.sub(&b).valuation().is_none_or(|v| v >= self.precision.min(other.precision) as i64)
    }
}

fn trim(mut f: Vec<PadicElement>) -> Vec<PadicElement> {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

fn eval_residue(f: &[RingElem], x: &RingElem) -> RingElem {
    f.iter().rev().fold(RingElem::zero(x.ring()), |acc, c| acc.mul(x).add(c))
}

/// f(r + p y) as a polynomial in y.
fn taylor_shift(f: &[PadicElement], r: &PadicElement) -> Vec<PadicElement> {
    let ring = r.ring();
    let step = PadicElement::one(ring).shift(1);
    let mut g: Vec<PadicElement> = Vec::new();
    for c in f.iter().rev() {
        // g <- g * (r + p y) + c
        let mut next = vec![PadicElement::zero(ring); g.len() + 1];
        for (i, gi) in g.iter().enumerate() {
            next[i] = next[i].add(&gi.mul(r));
            next[i + 1] = next[i + 1].add(&gi.mul(&step));
        }
        next[0] = next[0].add(c);
        g = next;
    }
    trim(g)
}

fn push_unique(out: &mut Vec<Root>, x: Root) {
    if !out.iter().any(|y| y.agrees(&x)) {
        out.push(x);
    }
}

/// Roots in O of `f`, whose coefficients are trusted to `budget` absolute digits.
/// Simple residue roots are Hensel-lifted; multiple ones are refined through
/// f(r + p y), which costs digits of the budget.
fn roots_in_o(ring: &Arc<ResidueRing>, f: Vec<PadicElement>, budget: i64) -> Vec<Root> {
    let mut f = trim(f);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    if f[0].is_zero() {
        out.push(Root { value: PadicElement::zero(ring), precision: ring.level() });
        while f.first().is_some_and(|c| c.is_zero()) {
            f.remove(0);
        }
        if f.len() <= 1 {
            return out;
        }
    }
    let min_val = f.iter().filter_map(|c| c.valuation()).min().unwrap();
    let budget = budget - min_val.max(0);
    if budget <= 0 {
        out.push(Root { value: PadicElement::zero(ring), precision: 0 });
        return out;
    }
    let f: Vec<PadicElement> = f.iter().map(|c| c.shift(-min_val)).collect();
    let field = ResidueRing::residue_field(ring.spec());
    let reduced: Vec<RingElem> = f.iter().map(|c| c.to_ring(&field).unwrap()).collect();
    let deriv: Vec<RingElem> =
        reduced.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(i as i128)).collect();
    for idx in 0..field.size() as u64 {
        let r = RingElem::from_index(&field, idx);
        if !eval_residue(&reduced, &r).is_zero() {
            continue;
        }
        if !eval_residue(&deriv, &r).is_zero() {
            if let Ok(x) = hensel_lift_root(ring, &f, &r) {
                push_unique(&mut out, Root { value: x, precision: budget as u32 });
            }
            continue;
        }
        let r_lift = PadicElement::from_ring(ring, &r);
        let g = taylor_shift(&f, &r_lift);
        for y in roots_in_o(ring, g, budget) {
            let value = r_lift.add(&y.value.shift(1));
            let precision = (y.precision + 1).min(ring.level());
            push_unique(&mut out, Root { value, precision });
        }
    }
    out
}

/// All roots in K of a nonzero polynomial (coefficients low-to-high).
pub fn polynomial_roots(coeffs: &[PadicElement]) -> Vec<Root> {
    let f = trim(coeffs.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let ring = f[0].ring().clone();
    let n = ring.level() as i64;
    let mut out = roots_in_o(&ring, f.clone(), n);
    // Roots of negative valuation are inverses of roots in pO of the reversed polynomial.
    let reversed: Vec<PadicElement> = f.iter().rev().cloned().collect();
    for z in roots_in_o(&ring, reversed, n) {
        if z.value.valuation().is_some_and(|v| v >= 1) {
            push_unique(&mut out, Root { value: z.value.inv().unwrap(), precision: z.precision });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::FieldSpec;

    fn k(p: u64, n: u32) -> Arc<ResidueRing> {
        ResidueRing::working(&FieldSpec::qp(p, n).unwrap())
    }

    fn poly(k: &Arc<ResidueRing>, c: &[(i128, i128)]) -> Vec<PadicElement> {
        c.iter().map(|&(a, b)| PadicElement::from_fraction(k, a, b).unwrap()).collect()
    }

    fn sorted(v: Vec<Root>) -> Vec<String> {
        let mut s: Vec<String> = v.into_iter().map(|x| x.value.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn simple_roots_are_exact() {
        let k = k(3, 8);
        let r = polynomial_roots(&poly(&k, &[(0, 1), (-2, 1), (1, 1)]));
        assert_eq!(sorted(r.clone()), vec!["0", "2"]);
        assert!(r.iter().all(|x| x.precision == 8));
        assert_eq!(sorted(polynomial_roots(&poly(&k, &[(0, 1), (0, 1), (0, 1), (1, 1)]))), vec!["0"]);
    }

    #[test]
    fn double_root_is_found_to_reduced_precision() {
        let k = k(3, 8);
        // (x - 1/2)^2 = x^2 - x + 1/4
        let r = polynomial_roots(&poly(&k, &[(1, 4), (-1, 1), (1, 1)]));
        assert_eq!(r.len(), 1);
        let half = Root { value: PadicElement::from_fraction(&k, 1, 2).unwrap(), precision: 8 };
        assert!(r[0].agrees(&half));
        assert!(r[0].precision >= 3);
    }

    #[test]
    fn non_integral_and_absent_roots() {
        let k = k(5, 6);
        let r = polynomial_roots(&poly(&k, &[(-1, 1), (0, 1), (25, 1)]));
        assert_eq!(sorted(r), vec!["-1/5", "1/5"]);
        assert!(polynomial_roots(&poly(&k, &[(-2, 1), (0, 1), (1, 1)])).is_empty());
        assert_eq!(polynomial_roots(&poly(&k, &[(1, 1), (0, 1), (1, 1)])).len(), 2);
    }
}
