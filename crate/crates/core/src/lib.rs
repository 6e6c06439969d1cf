//! Arithmetic p-adic dynamics of polynomial automorphisms of affine space.

pub mod autos;
pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod padic;
pub mod poly;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
