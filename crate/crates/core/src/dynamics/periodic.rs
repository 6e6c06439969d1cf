use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::cycles::{level_word, residue_cycles, DEFAULT_BUDGET};
use crate::autos::AutoWord;
use crate::error::{Error, Result};
use crate::linalg::solve_unit_pivots;
use crate::padic::{divisors, format_element, parse_element, PadicElement, ResidueRing, RingElem};
use crate::poly::Jet;

fn literals<S: Serializer>(pt: &[PadicElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(pt.iter().map(format_element))
}

/// A periodic point of the word at working precision.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodicPointRecord {
    #[serde(serialize_with = "literals")]
    pub point: Vec<PadicElement>,
    /// Minimal period at precision N.
    pub period: u64,
    /// φ^period(point) = point holds exactly in O/p^N.
    pub certified: bool,
    /// The Jacobian of φ^n − id has full rank modulo p, so the point is the
    /// unique lift of its residue class.
    pub nondegenerate: bool,
    /// Length of the cycle the Newton iteration was started from.
    pub residue_cycle_length: u64,
}

/// A residue cycle whose lift could not be certified.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UncertifiedCycle {
    pub level: u32,
    pub length: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct PeriodicPoints {
    pub records: Vec<PeriodicPointRecord>,
    pub uncertified: Vec<UncertifiedCycle>,
}

impl PeriodicPoints {
    pub fn periods(&self) -> std::collections::BTreeSet<u64> {
        self.records.iter().map(|r| r.period).collect()
    }
}

/// Minimal n ≤ `max_iter` with φⁿ(P) = P. Integral data is iterated exactly in
/// O/p^N; otherwise coordinates are compared to N digits.
pub fn detect_period(w: &AutoWord<PadicElement>, point: &[PadicElement], max_iter: u64) -> Option<u64> {
    let ring = w.ring().clone();
    let exact = w.specialize(&ring).ok().and_then(|wr| {
        let pt = point.iter().map(|c| c.to_ring(&ring)).collect::<Result<Vec<_>>>().ok()?;
        Some((wr, pt))
    });
    if let Some((wr, start)) = exact {
        let mut cur = start.clone();
        for n in 1..=max_iter {
            cur = wr.apply(&cur);
            if cur == start {
                return Some(n);
            }
        }
        return None;
    }
    let n = ring.spec().precision() as i64;
    let mut cur = point.to_vec();
    for i in 1..=max_iter {
        cur = w.apply(&cur);
        if cur.iter().zip(point).all(|(a, b)| a.agrees_to(b, n)) {
            return Some(i);
        }
    }
    None
}

/// Newton iteration for φⁿ(X) = X in O/p^N started at `start`. Elimination uses
/// unit pivots only, so degenerate directions are left fixed; the result is
/// accepted only if the equation holds exactly.
fn newton_periodic(wr: &AutoWord<RingElem>, start: Vec<RingElem>, n: u64) -> Result<(Vec<RingElem>, bool)> {
    let precision = wr.ring().level();
    let mut x = start;
    let mut full_rank = false;
    for _ in 0..2 * precision + 5 {
        let image = wr.apply_iterate(&Jet::seed(&x), n);
        let g: Vec<RingElem> = image.iter().zip(&x).map(|(j, xi)| j.value.sub(xi)).collect();
        let jac: Vec<Vec<RingElem>> = image
            .iter()
            .enumerate()
            .map(|(i, j)| {
                j.grad
                    .iter()
                    .enumerate()
                    .map(|(c, d)| if c == i { d.sub(&RingElem::one(wr.ring())) } else { d.clone() })
                    .collect()
            })
            .collect();
        let rhs: Vec<RingElem> = g.iter().map(RingElem::neg).collect();
        let (delta, rank) = solve_unit_pivots(&jac, &rhs);
        full_rank = rank == x.len();
        if g.iter().all(RingElem::is_zero) {
            return Ok((x, full_rank));
        }
        if delta.iter().all(RingElem::is_zero) {
            return Err(if full_rank { Error::NoConvergence } else { Error::SingularJacobian });
        }
        x = x.iter().zip(&delta).map(|(a, d)| a.add(d)).collect();
    }
    Err(if full_rank { Error::NoConvergence } else { Error::SingularJacobian })
}

fn minimal_period(wr: &AutoWord<RingElem>, x: &[RingElem], n: u64) -> u64 {
    divisors(n).into_iter().find(|&d| wr.apply_iterate(x, d) == x).unwrap_or(n)
}

/// Lifts a point of a residue cycle of length n (at any level k ≤ N) to a point
/// of O/p^N fixed by φⁿ and congruent to it modulo p^k.
pub fn lift_periodic(w: &AutoWord<PadicElement>, start: &[RingElem], n: u64) -> Result<PeriodicPointRecord> {
    let level = start[0].ring().level();
    let wk = level_word(w, level)?;
    if wk.apply_iterate(start, n) != start {
        return Err(Error::ResidueNotASolution);
    }
    let working = ResidueRing::working(w.ring().spec());
    let wr = w.specialize(&working)?;
    let lifted = start.iter().map(|c| c.lift_to(&working)).collect();
    let (x, nondegenerate) = newton_periodic(&wr, lifted, n)?;
    if !nondegenerate {
        confirm_degenerate(w, &x, n)?;
    }
    Ok(PeriodicPointRecord {
        period: minimal_period(&wr, &x, n),
        point: x.iter().map(|c| PadicElement::from_ring(w.ring(), c)).collect(),
        certified: true,
        nondegenerate,
        residue_cycle_length: n,
    })
}

/// The orbit of a certified record, one record per point, starting at the
/// record's own point.
pub(crate) fn orbit_records(
    w: &AutoWord<PadicElement>,
    rec: &PeriodicPointRecord,
) -> Vec<PeriodicPointRecord> {
    let ring: &Arc<ResidueRing> = w.ring();
    let wr = w.specialize(ring).expect("certified records come from integral words");
    let mut cur: Vec<RingElem> = rec.point.iter().map(|c| c.to_ring(ring).unwrap()).collect();
    (0..rec.period)
        .map(|_| {
            let r = PeriodicPointRecord {
                point: cur.iter().map(|c| PadicElement::from_ring(ring, c)).collect(),
                ..rec.clone()
            };
            cur = wr.apply(&cur);
            r
        })
        .collect()
}

/// A degenerate solution at precision N is kept only if Newton restarted at a
/// higher precision, as close to 2N as the modulus limit allows, solves the
/// equation exactly there too. Points that merely lie p-adically close to a
/// periodic orbit fail this test.
fn confirm_degenerate(w: &AutoWord<PadicElement>, x: &[RingElem], n: u64) -> Result<()> {
    let spec = w.ring().spec();
    let precision = spec.precision();
    let higher = (precision + 1..=2 * precision)
        .rev()
        .find_map(|m| spec.with_precision(m).ok())
        .ok_or(Error::SingularJacobian)?;
    let ring = ResidueRing::working(&higher);
    // Coefficients are re-read from their literals, which keeps small rationals exact.
    let refined = w.try_map(&ring, |c| parse_element(&ring, &format_element(c))?.to_ring(&ring))?;
    let start = x
        .iter()
        .map(|c| RingElem::from_coeffs(&ring, &c.coeffs().iter().map(|&d| d as i64).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    match newton_periodic(&refined, start, n) {
        Ok(_) => Ok(()),
        Err(_) => Err(Error::SingularJacobian),
    }
}

/// Lifts one representative of every residue cycle at `level` whose length is
/// at most `n_max` (`None`: all cycles).
pub(crate) fn lift_level(
    w: &AutoWord<PadicElement>,
    level: u32,
    n_max: Option<u64>,
    budget: u128,
) -> Result<PeriodicPoints> {
    let mut out = PeriodicPoints::default();
    for cycle in residue_cycles(w, level, budget)? {
        if n_max.is_some_and(|m| cycle.length > m) {
            continue;
        }
        match lift_periodic(w, &cycle.representative, cycle.length) {
            Ok(rec) => out.records.push(rec),
            Err(e @ (Error::SingularJacobian | Error::NoConvergence)) => {
                out.uncertified.push(UncertifiedCycle { level, length: cycle.length, reason: e.to_string() })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Certified periodic points with period at most `n_max`, found by one lift
/// attempt per residue cycle. Each certified orbit is returned point by point.
pub fn enumerate_periodic_points(w: &AutoWord<PadicElement>, n_max: u64) -> Result<PeriodicPoints> {
    enumerate_periodic_points_with(w, n_max, DEFAULT_BUDGET)
}

pub fn enumerate_periodic_points_with(
    w: &AutoWord<PadicElement>,
    n_max: u64,
    budget: u128,
) -> Result<PeriodicPoints> {
    let found = lift_level(w, 1, Some(n_max), budget)?;
    Ok(PeriodicPoints {
        records: found.records.iter().flat_map(|r| orbit_records(w, r)).collect(),
        uncertified: found.uncertified,
    })
}
