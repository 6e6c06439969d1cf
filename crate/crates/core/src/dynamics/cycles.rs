use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::autos::{reduce_word, AutoWord};
use crate::error::{Error, Result};
use crate::padic::{PadicElement, ResidueRing, RingElem};

/// Default cap on the number of points of (O/p^k)^r enumerated at one level.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Cycle type of the permutation induced on (O/p^k)^r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStructure {
    pub level: u32,
    pub dimension: usize,
    /// cycle length -> number of cycles
    pub counts: BTreeMap<u64, u64>,
}

impl CycleStructure {
    pub fn total_points(&self) -> u128 {
        self.counts.iter().map(|(&l, &c)| l as u128 * c as u128).sum()
    }

    pub fn lengths(&self) -> impl Iterator<Item = u64> + '_ {
        self.counts.keys().copied()
    }

    /// Two-column CSV with header `length,count`, rows by increasing length.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (l, c) in &self.counts {
            writeln!(out, "{l},{c}").unwrap();
        }
        out
    }
}

/// The points of (O/p^k)^r, indexed in mixed radix: coordinate i contributes
/// `index(x_i) * |O/p^k|^i`.
#[derive(Debug, Clone)]
pub struct PointSpace {
    ring: Arc<ResidueRing>,
    dim: usize,
    base: u64,
    size: u64,
}

impl PointSpace {
    pub fn new(ring: &Arc<ResidueRing>, dim: usize, budget: u128) -> Result<Self> {
        let base = ring.size();
        let size = (0..dim).try_fold(1u128, |acc, _| acc.checked_mul(base)).unwrap_or(u128::MAX);
        if size > budget || size > u64::MAX as u128 {
            return Err(Error::BudgetExceeded { size, budget });
        }
        Ok(PointSpace { ring: ring.clone(), dim, base: base as u64, size: size as u64 })
    }

    pub fn ring(&self) -> &Arc<ResidueRing> {
        &self.ring
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn point(&self, mut idx: u64) -> Vec<RingElem> {
        (0..self.dim)
            .map(|_| {
                let c = RingElem::from_index(&self.ring, idx % self.base);
                idx /= self.base;
                c
            })
            .collect()
    }

    pub fn index(&self, pt: &[RingElem]) -> u64 {
        pt.iter().rev().fold(0, |acc, c| acc * self.base + c.index())
    }
}

/// One cycle of the induced permutation, given by its smallest-index point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub representative: Vec<RingElem>,
    pub length: u64,
}

/// The word over O/p^k, after checking that its reduction is an automorphism.
pub(crate) fn level_word(w: &AutoWord<PadicElement>, level: u32) -> Result<AutoWord<RingElem>> {
    reduce_word(w)?;
    let ring = ResidueRing::new(w.ring().spec(), level)?;
    w.specialize(&ring)
}

/// Walks every cycle once, in order of smallest point index, calling `visit`
/// with the cycle's points in orbit order.
fn traverse(
    w: &AutoWord<PadicElement>,
    level: u32,
    budget: u128,
    mut visit: impl FnMut(&PointSpace, &[u64]),
) -> Result<()> {
    let wk = level_word(w, level)?;
    let space = PointSpace::new(wk.ring(), w.dimension(), budget)?;
    let mut visited = vec![0u64; space.size().div_ceil(64) as usize];
    let mut orbit = Vec::new();
    for start in 0..space.size() {
        if visited[(start / 64) as usize] >> (start % 64) & 1 == 1 {
            continue;
        }
        orbit.clear();
        let mut idx = start;
        loop {
            visited[(idx / 64) as usize] |= 1 << (idx % 64);
            orbit.push(idx);
            idx = space.index(&wk.apply(&space.point(idx)));
            if idx == start {
                break;
            }
            if visited[(idx / 64) as usize] >> (idx % 64) & 1 == 1 {
                // Only a non-injective map can enter a visited point off its start.
                return Err(Error::DegenerateReduction);
            }
        }
        visit(&space, &orbit);
    }
    Ok(())
}

/// Cycle structure of the permutation induced by `w` on (O/p^k)^r.
pub fn permutation_cycles(w: &AutoWord<PadicElement>, level: u32) -> Result<CycleStructure> {
    permutation_cycles_with(w, level, DEFAULT_BUDGET)
}

pub fn permutation_cycles_with(
    w: &AutoWord<PadicElement>,
    level: u32,
    budget: u128,
) -> Result<CycleStructure> {
    let mut counts = BTreeMap::new();
    traverse(w, level, budget, |_, orbit| *counts.entry(orbit.len() as u64).or_insert(0) += 1)?;
    Ok(CycleStructure { level, dimension: w.dimension(), counts })
}

/// Every cycle at level k with its representative point.
pub fn residue_cycles(w: &AutoWord<PadicElement>, level: u32, budget: u128) -> Result<Vec<Cycle>> {
    let mut cycles = Vec::new();
    traverse(w, level, budget, |space, orbit| {
        cycles.push(Cycle { representative: space.point(orbit[0]), length: orbit.len() as u64 })
    })?;
    Ok(cycles)
}

/// Length of the cycle through each point, indexed as in [`PointSpace`].
pub fn point_cycle_lengths(w: &AutoWord<PadicElement>, level: u32, budget: u128) -> Result<Vec<u64>> {
    let mut lengths = Vec::new();
    traverse(w, level, budget, |space, orbit| {
        if lengths.is_empty() {
            lengths = vec![0; space.size() as usize];
        }
        for &i in orbit {
            lengths[i as usize] = orbit.len() as u64;
        }
    })?;
    Ok(lengths)
}

/// Checks that each point at level k+1 reduces onto a level-k cycle whose length
/// divides its own, for consecutive levels up to `max_level`. Returns the number
/// of offending points.
pub fn tower_violations(w: &AutoWord<PadicElement>, max_level: u32, budget: u128) -> Result<u64> {
    let spec = w.ring().spec().clone();
    let mut below = point_cycle_lengths(w, 1, budget)?;
    let mut violations = 0;
    for level in 2..=max_level {
        let lower = PointSpace::new(&ResidueRing::new(&spec, level - 1)?, w.dimension(), budget)?;
        let upper = PointSpace::new(&ResidueRing::new(&spec, level)?, w.dimension(), budget)?;
        let above = point_cycle_lengths(w, level, budget)?;
        for (idx, &len) in above.iter().enumerate() {
            let reduced: Vec<RingElem> =
                upper.point(idx as u64).iter().map(|c| c.reduce_to(lower.ring())).collect();
            if len % below[lower.index(&reduced) as usize] != 0 {
                violations += 1;
            }
        }
        below = above;
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::FieldSpec;

    #[test]
    fn point_indices_round_trip() {
        let spec = FieldSpec::new(2, 2, 4, None).unwrap();
        let ring = ResidueRing::new(&spec, 2).unwrap();
        let space = PointSpace::new(&ring, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(space.size(), 256);
        for idx in 0..space.size() {
            assert_eq!(space.index(&space.point(idx)), idx);
        }
    }

    #[test]
    fn csv_rows_sorted_by_length() {
        let cs = CycleStructure { level: 1, dimension: 2, counts: BTreeMap::from([(7, 1), (1, 2)]) };
        assert_eq!(cs.to_csv(), "length,count\n1,2\n7,1\n");
    }
}
