use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use super::cycles::DEFAULT_BUDGET;
use super::periodic::enumerate_periodic_points_with;
use crate::autos::{AutoWord, Factor, TriangularAuto};
use crate::error::{Error, Result};
use crate::padic::{root_of_unity_order, PadicElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangularReport {
    /// Certified periods up to n_max.
    pub realized: BTreeSet<u64>,
    /// lcm of the orders of those a_i that are roots of unity.
    pub mu_bound: u64,
    /// Least e with every realized period dividing mu_bound · p^e, over the
    /// periods for which such an e exists.
    pub p_exponent: u32,
    /// Realized periods that do not divide mu_bound.
    pub not_dividing_mu: Vec<u64>,
    /// Realized periods that divide no mu_bound · p^e.
    pub violations: Vec<u64>,
}

pub fn triangular_periods(t: &TriangularAuto<PadicElement>, n_max: u64) -> Result<TriangularReport> {
    triangular_periods_with(t, n_max, DEFAULT_BUDGET)
}

pub fn triangular_periods_with(
    t: &TriangularAuto<PadicElement>,
    n_max: u64,
    budget: u128,
) -> Result<TriangularReport> {
    let ring = t.a()[0].ring().clone();
    let p = ring.spec().prime();
    let mut mu_bound = 1;
    for a in t.a() {
        match root_of_unity_order(a) {
            Ok(Some(order)) => mu_bound = mu_bound.lcm(&order.order),
            Ok(None) | Err(Error::NotAUnit) => {}
            Err(e) => return Err(e),
        }
    }
    let w = AutoWord::from_factors(&ring, vec![Factor::Triangular(t.clone())])?;
    let realized = enumerate_periodic_points_with(&w, n_max, budget)?.periods();
    let mut p_exponent = 0;
    let mut violations = Vec::new();
    for &n in &realized {
        let mut rest = n / n.gcd(&mu_bound);
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if rest == 1 {
            p_exponent = p_exponent.max(e);
        } else {
            violations.push(n);
        }
    }
    Ok(TriangularReport {
        not_dividing_mu: realized.iter().copied().filter(|n| mu_bound % n != 0).collect(),
        realized,
        mu_bound,
        p_exponent,
        violations,
    })
}
