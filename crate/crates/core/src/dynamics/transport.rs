use serde::Serialize;

use super::cycles::{permutation_cycles_with, DEFAULT_BUDGET};
use super::periodic::{detect_period, enumerate_periodic_points_with};
use crate::autos::AutoWord;
use crate::error::Result;
use crate::padic::PadicElement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub cycle_spectra_agree: bool,
    pub period_spectra_agree: bool,
    /// Certified points P of w whose image f(P) was checked under φ.
    pub transported: usize,
    /// Points whose image has a different period.
    pub failures: usize,
}

impl TransportReport {
    pub fn holds(&self) -> bool {
        self.cycle_spectra_agree && self.period_spectra_agree && self.failures == 0
    }
}

/// For w = f⁻¹∘φ∘f, compares w with φ = f∘w∘f⁻¹: level-1 cycle types, certified
/// period spectra up to `n_max`, and periods of f(P) for at most `samples`
/// certified points P of w.
pub fn conjugation_transport(
    w: &AutoWord<PadicElement>,
    f: &AutoWord<PadicElement>,
    n_max: u64,
    samples: usize,
) -> Result<TransportReport> {
    conjugation_transport_with(w, f, n_max, samples, DEFAULT_BUDGET)
}

pub fn conjugation_transport_with(
    w: &AutoWord<PadicElement>,
    f: &AutoWord<PadicElement>,
    n_max: u64,
    samples: usize,
    budget: u128,
) -> Result<TransportReport> {
    let phi = f.compose(w)?.compose(&f.inverse())?;
    let cycle_spectra_agree =
        permutation_cycles_with(w, 1, budget)?.counts == permutation_cycles_with(&phi, 1, budget)?.counts;
    let of_w = enumerate_periodic_points_with(w, n_max, budget)?;
    let of_phi = enumerate_periodic_points_with(&phi, n_max, budget)?;
    let period_spectra_agree = of_w.periods() == of_phi.periods();
    let mut transported = 0;
    let mut failures = 0;
    for rec in of_w.records.iter().take(samples) {
        transported += 1;
        if detect_period(&phi, &image(f, &rec.point), rec.period) != Some(rec.period) {
            failures += 1;
        }
    }
    Ok(TransportReport { cycle_spectra_agree, period_spectra_agree, transported, failures })
}

/// f(P), computed exactly in O/p^N when f and P are integral.
fn image(f: &AutoWord<PadicElement>, pt: &[PadicElement]) -> Vec<PadicElement> {
    let ring = f.ring();
    let exact = f.specialize(ring).and_then(|fr| {
        let x = pt.iter().map(|c| c.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(fr.apply(&x).iter().map(|c| PadicElement::from_ring(ring, c)).collect())
    });
    exact.unwrap_or_else(|_| f.apply(pt))
}
