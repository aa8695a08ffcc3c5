//! Exact polynomial arithmetic.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{FieldSpec, Scalar};
pub use monomial::{ModuleOrder, Monomial, MonomialOrder, PositionRule};
pub use parse::parse_polynomial;
pub use polynomial::{same_ring, PolyRing, Polynomial};
