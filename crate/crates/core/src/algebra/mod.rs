//! Partitions, combinatorial numbers, polynomials and symmetric functions.

pub mod combinat;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod symfunc;

pub use linalg::{bareiss_rank, integer_row, RowSpace};
pub use combinat::{all_set_partitions, binomial, factorial, set_partitions_of_type, stirling2};
pub use partition::{partitions_of, Partition};
pub use poly::Polynomial;
pub use symfunc::{
    convert, evaluate_ones, evaluate_ones_poly, odot, odot_unit, omega, p_to_m, Basis, SignProfile, SymFunc,
};
