//! Gröbner bases for ideals and submodules of free modules, with syzygies,
//! elimination, dimension and minimal free resolutions built on top.

mod buchberger;
mod dimension;
mod ideal;
mod matrix;
mod resolution;
mod sparse;
mod submodule;

pub use buchberger::GroebnerBasis;
pub use dimension::Height;
pub(crate) use dimension::support_sets;
pub use ideal::Ideal;
pub use matrix::{Matrix, VectorElement};
pub use resolution::{
    cokernel_depth, resolve_cokernel, resolve_quotient_ring, resolve_submodule, FreeResolution,
};
pub use submodule::{generator_degrees, minimal_generator_indices, syzygies, Submodule};
