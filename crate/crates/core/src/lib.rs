//! Exact computation of invariants of finitely generated submodules
//! `E ⊆ R^e` over polynomial rings: Fitting ideals, rank, minimal number of
//! generators, analytic spread, reductions and reduction numbers, deviation
//! and analytic deviation, and the classification of `E` as a complete
//! intersection, equimultiple or generically complete intersection module.
//!
//! All arithmetic is exact. Local invariants are computed for the graded
//! ring `k[x_1..x_d]` localised at `(x_1..x_d)`, so operations that depend
//! on the maximal ideal require homogeneous input.

pub mod classify;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod monomial_tools;
pub mod poly;
pub mod reductions;
pub mod rees;

pub use error::{Error, Result};
