//! Polynomial automorphisms of affine space as words in invertible factors.

mod compose;
mod factor;
pub mod format;
mod locus;
mod word;

pub use compose::{compose_symbolic, leading_map, LeadingMap, DEFAULT_MAX_DEGREE};
pub use factor::{AffineAuto, Factor, HenonFactor, TriangularAuto};
pub use locus::{
    check_iterate_locus, check_iterate_locus_with, indeterminacy_locus, indeterminacy_locus_with, is_regular,
    is_special_henon, special_by_coefficients, Fiber, InfinitePoint, ProjectivePointSet,
};
pub use word::{reduce_word, AutoWord, WordFactor};
