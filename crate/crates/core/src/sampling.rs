//! Seeded random inputs for property checks: points of O^r, integral affine
//! maps with unit determinant, and short words of Hénon and affine letters.

use std::sync::Arc;

use rand::Rng;

use crate::autos::{AffineAuto, AutoWord, Factor, HenonFactor, WordFactor};
use crate::padic::{PadicElement, ResidueRing, RingElem};

/// An element of O/p^N drawn uniformly, as an element of K.
pub fn random_integer<R: Rng + ?Sized>(ring: &Arc<ResidueRing>, rng: &mut R) -> PadicElement {
    let idx = rng.gen_range(0..ring.size().min(u64::MAX as u128) as u64);
    PadicElement::from_ring(ring, &RingElem::from_index(ring, idx))
}

pub fn random_unit<R: Rng + ?Sized>(ring: &Arc<ResidueRing>, rng: &mut R) -> PadicElement {
    loop {
        let x = random_integer(ring, rng);
        if x.is_unit() {
            return x;
        }
    }
}

pub fn random_point<R: Rng + ?Sized>(ring: &Arc<ResidueRing>, dim: usize, rng: &mut R) -> Vec<PadicElement> {
    (0..dim).map(|_| random_integer(ring, rng)).collect()
}

/// An integral affine map of the plane whose linear part is invertible over O.
pub fn random_affine<R: Rng + ?Sized>(ring: &Arc<ResidueRing>, rng: &mut R) -> AffineAuto<PadicElement> {
    loop {
        let m: Vec<Vec<PadicElement>> =
            (0..2).map(|_| (0..2).map(|_| random_integer(ring, rng)).collect()).collect();
        let det = m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]));
        if det.is_unit() {
            return AffineAuto::new(m, random_point(ring, 2, rng)).expect("unit determinant");
        }
    }
}

/// A Hénon letter with unit a, integral coefficients and degree in 2..=max_degree.
pub fn random_henon<R: Rng + ?Sized>(
    ring: &Arc<ResidueRing>,
    max_degree: usize,
    rng: &mut R,
) -> HenonFactor<PadicElement> {
    let d = rng.gen_range(2..=max_degree.max(2));
    let mut poly: Vec<PadicElement> = (0..d).map(|_| random_integer(ring, rng)).collect();
    poly.push(PadicElement::one(ring));
    HenonFactor::new(random_unit(ring, rng), poly).expect("unit a, monic")
}

/// A word of `len` letters, each a Hénon or affine letter, possibly inverted.
pub fn random_word<R: Rng + ?Sized>(
    ring: &Arc<ResidueRing>,
    len: usize,
    max_degree: usize,
    rng: &mut R,
) -> AutoWord<PadicElement> {
    let factors = (0..len)
        .map(|_| {
            let factor = if rng.gen_bool(0.7) {
                Factor::Henon(random_henon(ring, max_degree, rng))
            } else {
                Factor::Affine(random_affine(ring, rng))
            };
            WordFactor { factor, inverted: rng.gen_bool(0.5) }
        })
        .collect();
    AutoWord::new(ring, 2, factors, None).expect("plane letters")
}
