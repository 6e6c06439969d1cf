#![allow(dead_code)]

use std::sync::Arc;

use padyn::autos::{AffineAuto, AutoWord, Factor, HenonFactor, TriangularAuto};
use padyn::padic::{FieldSpec, PadicElement, ResidueRing};
use padyn::poly::MultiPoly;

pub fn ring(p: u64, n: u32) -> Arc<ResidueRing> {
    ResidueRing::working(&FieldSpec::qp(p, n).unwrap())
}

pub fn int(k: &Arc<ResidueRing>, n: i128) -> PadicElement {
    PadicElement::from_int(k, n)
}

pub fn frac(k: &Arc<ResidueRing>, a: i128, b: i128) -> PadicElement {
    PadicElement::from_fraction(k, a, b).unwrap()
}

pub fn henon(k: &Arc<ResidueRing>, a: PadicElement, poly: &[i128]) -> Factor<PadicElement> {
    let poly = poly.iter().map(|&c| int(k, c)).collect();
    Factor::Henon(HenonFactor::new(a, poly).unwrap())
}

/// (x² − y, x) plus the constant c.
pub fn g(k: &Arc<ResidueRing>, c: i128) -> AutoWord<PadicElement> {
    AutoWord::from_factors(k, vec![henon(k, int(k, 1), &[c, 0, 1])]).unwrap()
}

pub fn poly(k: &Arc<ResidueRing>, nvars: usize, terms: &[(&[u32], i128)]) -> MultiPoly<PadicElement> {
    MultiPoly::from_terms(k, nvars, terms.iter().map(|(e, c)| (e.to_vec(), int(k, *c))).collect::<Vec<_>>())
        .unwrap()
}

pub fn triangular(k: &Arc<ResidueRing>, a: &[i128], f: &[&[(&[u32], i128)]]) -> AutoWord<PadicElement> {
    let r = a.len();
    let t = TriangularAuto::new(
        a.iter().map(|&c| int(k, c)).collect(),
        f.iter().map(|terms| poly(k, r, terms)).collect(),
    )
    .unwrap();
    AutoWord::from_factors(k, vec![Factor::Triangular(t)]).unwrap()
}

pub fn affine(k: &Arc<ResidueRing>, m: &[&[i128]], t: &[i128]) -> AutoWord<PadicElement> {
    let a = AffineAuto::new(
        m.iter().map(|row| row.iter().map(|&c| int(k, c)).collect()).collect(),
        t.iter().map(|&c| int(k, c)).collect(),
    )
    .unwrap();
    AutoWord::from_factors(k, vec![Factor::Affine(a)]).unwrap()
}

pub fn point(k: &Arc<ResidueRing>, coords: &[i128]) -> Vec<PadicElement> {
    coords.iter().map(|&c| int(k, c)).collect()
}
