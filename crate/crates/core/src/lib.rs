//! Exact computation of H-chromatic symmetric functions.
//!
//! `X_G^H` sums `d_λ · m^N_λ` over homomorphism types `λ`, where `d_λ` counts
//! homomorphisms `G → H` whose non-empty fibres have sizes `λ` and `N = |V(H)|`.

pub mod algebra;
pub mod basis;
pub mod chrom;
pub mod error;
pub mod graph;
pub mod hom;
pub mod pexp;
pub mod recursion;
pub mod repro;
pub mod self_analysis;

pub use error::{Error, Result};
