use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::cycles::{permutation_cycles_with, CycleStructure, DEFAULT_BUDGET};
use super::periodic::{lift_level, orbit_records, PeriodicPointRecord};
use crate::autos::format::MapDescription;
use crate::autos::AutoWord;
use crate::error::{Error, Result};
use crate::padic::{FieldSpec, PadicElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldSummary {
    pub prime: u64,
    pub extension_degree: usize,
    pub precision: u32,
    pub modulus: Vec<u64>,
}

impl FieldSummary {
    pub fn of(spec: &FieldSpec) -> Self {
        FieldSummary {
            prime: spec.prime(),
            extension_degree: spec.degree(),
            precision: spec.precision(),
            modulus: spec.modulus_poly().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelSummary {
    pub level: u32,
    pub cycles: CycleStructure,
    pub certified_periods: BTreeSet<u64>,
    /// 0 when nothing was certified at this level.
    pub max_lifted_period: u64,
}

/// Residue cycles at one level that did not lift, grouped by length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UncertifiedGroup {
    pub level: u32,
    pub length: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub field: FieldSummary,
    pub word_digest: String,
    pub levels: Vec<u32>,
    pub per_level: Vec<LevelSummary>,
    pub m_empirical: u64,
    pub no_periodic_points_certified: bool,
    pub stabilized: bool,
    /// One record per certified orbit, at the point whose literal is first.
    pub certified_points: Vec<PeriodicPointRecord>,
    pub uncertified_cycles: Vec<UncertifiedGroup>,
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn certified_spectrum(&self) -> BTreeSet<u64> {
        self.certified_points.iter().map(|r| r.period).collect()
    }
}

/// Leading 64 bits of the SHA-256 of the canonical description.
pub fn word_digest(w: &AutoWord<PadicElement>) -> String {
    let hash = Sha256::digest(MapDescription::from_word(w).to_text().as_bytes());
    hash[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn orbit_key(rec: &PeriodicPointRecord) -> Vec<String> {
    rec.point.iter().map(|c| c.to_string()).collect()
}

/// Runs the cycle decomposition at each level, lifts every cycle, and compares
/// the certified period spectra of the two highest levels.
pub fn empirical_period_bound(w: &AutoWord<PadicElement>, levels: &[u32]) -> Result<BoundReport> {
    empirical_period_bound_with(w, levels, DEFAULT_BUDGET)
}

pub fn empirical_period_bound_with(
    w: &AutoWord<PadicElement>,
    levels: &[u32],
    budget: u128,
) -> Result<BoundReport> {
    if levels.is_empty() || levels.windows(2).any(|p| p[0] >= p[1]) || levels[0] == 0 {
        return Err(Error::InvalidMap("levels must be positive and strictly ascending".into()));
    }
    let precision = w.ring().spec().precision();
    if let Some(&k) = levels.iter().find(|&&k| k > precision) {
        return Err(Error::InvalidMap(format!("level {k} exceeds precision {precision}")));
    }
    let mut per_level = Vec::new();
    let mut orbits: BTreeMap<Vec<String>, PeriodicPointRecord> = BTreeMap::new();
    let mut uncertified: BTreeMap<(u32, u64), u64> = BTreeMap::new();
    for &level in levels {
        let cycles = permutation_cycles_with(w, level, budget)?;
        let found = lift_level(w, level, None, budget)?;
        for rec in &found.records {
            let smallest = orbit_records(w, rec).into_iter().min_by_key(orbit_key).expect("period ≥ 1");
            orbits.entry(orbit_key(&smallest)).or_insert(smallest);
        }
        for u in &found.uncertified {
            *uncertified.entry((u.level, u.length)).or_insert(0) += 1;
        }
        let certified_periods = found.periods();
        per_level.push(LevelSummary {
            level,
            cycles,
            max_lifted_period: certified_periods.last().copied().unwrap_or(0),
            certified_periods,
        });
    }
    let stabilized = per_level.len() >= 2
        && per_level[per_level.len() - 1].certified_periods
            == per_level[per_level.len() - 2].certified_periods;
    let certified_points: Vec<PeriodicPointRecord> = orbits.into_values().collect();
    let m_empirical = certified_points.iter().map(|r| r.period).max().unwrap_or(0);
    Ok(BoundReport {
        field: FieldSummary::of(w.ring().spec()),
        word_digest: word_digest(w),
        levels: levels.to_vec(),
        per_level,
        m_empirical,
        no_periodic_points_certified: certified_points.is_empty(),
        stabilized,
        certified_points,
        uncertified_cycles: uncertified
            .into_iter()
            .map(|((level, length), count)| UncertifiedGroup { level, length, count })
            .collect(),
    })
}
