//! Arithmetic in Q_p and its unramified extensions at fixed precision.

mod element;
mod field;
mod lift;
pub mod literal;
mod ring;
mod roots;

pub use element::{ArithOp, PadicElement};
pub use field::{is_prime, FieldSpec, MAX_MODULUS};
pub use lift::{hensel_lift_root, root_of_unity_order, teichmueller, CertifiedOrder};
pub use literal::{format_element, parse_element};
pub use ring::{divisors, ResidueElement, ResidueRing, RingElem};
pub use roots::{polynomial_roots, Root};
