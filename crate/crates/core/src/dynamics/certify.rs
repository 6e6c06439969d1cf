use serde::Serialize;

use super::bound::{empirical_period_bound_with, BoundReport};
use super::cycles::DEFAULT_BUDGET;
use super::periodic::detect_period;
use crate::autos::format::MapDescription;
use crate::autos::is_special_henon;
use crate::error::{Error, Result};
use crate::padic::format_element;

/// A supplied periodic point checked against the certified bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub point: Vec<String>,
    /// None when no return was seen within the search horizon.
    pub period: Option<u64>,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub prime: u64,
    /// Primes tried before `prime` whose reduction is not special.
    pub rejected_primes: Vec<u64>,
    pub report: BoundReport,
    pub statement: String,
    pub rational_points: Vec<PointCheck>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates always serialize");
        s.push('\n');
        s
    }
}

/// Picks the first listed prime at which the word, read in Q_p, is a special
/// Hénon product, and certifies a period bound there. Coefficients are never
/// rescaled: a prime dividing a denominator, or making some a non-unit, is
/// rejected.
pub fn certify_rational(desc: &MapDescription, primes: &[u64], levels: &[u32]) -> Result<Certificate> {
    certify_rational_with(desc, primes, levels, DEFAULT_BUDGET)
}

pub fn certify_rational_with(
    desc: &MapDescription,
    primes: &[u64],
    levels: &[u32],
    budget: u128,
) -> Result<Certificate> {
    let mut rejected = Vec::new();
    for &p in primes {
        let Ok(spec) = desc.field_spec_for_prime(p, None) else {
            rejected.push(p);
            continue;
        };
        let w = match desc.build(&spec) {
            Ok(w) if is_special_henon(&w) => w,
            Ok(_) | Err(Error::InvalidMap(_) | Error::DegenerateReduction) => {
                rejected.push(p);
                continue;
            }
            Err(e) => return Err(e),
        };
        let report = empirical_period_bound_with(&w, levels, budget)?;
        if !report.stabilized {
            return Err(Error::NotStabilized);
        }
        let m = report.m_empirical;
        let horizon =
            report.per_level.last().map(|l| l.cycles.total_points().min(1 << 20) as u64).unwrap_or(1).max(m);
        let rational_points = desc
            .rational_points(w.ring())?
            .into_iter()
            .map(|pt| {
                let period = detect_period(&w, &pt, horizon);
                PointCheck {
                    point: pt.iter().map(format_element).collect(),
                    period,
                    within_bound: period.is_some_and(|n| n <= m),
                }
            })
            .collect();
        let field = match spec.degree() {
            1 => format!("Q_{p}"),
            f => format!("the unramified extension of Q_{p} of degree {f}"),
        };
        let statement = format!(
            "every periodic point of w over {field} has period at most {m}, hence every Q-rational periodic point does"
        );
        return Ok(Certificate { prime: p, rejected_primes: rejected, report, statement, rational_points });
    }
    Err(Error::NoGoodPrime)
}
