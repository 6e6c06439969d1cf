//! Periodic points of automorphism words: exact cycle structure of the induced
//! permutations of (O/p^k)^r, Newton lifting of residue cycles to O/p^N, and
//! the reports built on top of them.

mod bound;
mod certify;
mod cycles;
mod periodic;
mod transport;
mod triangular;

pub use bound::{
    empirical_period_bound, empirical_period_bound_with, word_digest, BoundReport, FieldSummary,
    LevelSummary, UncertifiedGroup,
};
pub use certify::{certify_rational, certify_rational_with, Certificate, PointCheck};
pub use cycles::{
    permutation_cycles, permutation_cycles_with, point_cycle_lengths, residue_cycles, tower_violations,
    Cycle, CycleStructure, PointSpace, DEFAULT_BUDGET,
};
pub use periodic::{
    detect_period, enumerate_periodic_points, enumerate_periodic_points_with, lift_periodic,
    PeriodicPointRecord, PeriodicPoints, UncertifiedCycle,
};
pub use transport::{conjugation_transport, conjugation_transport_with, TransportReport};
pub use triangular::{triangular_periods, triangular_periods_with, TriangularReport};
