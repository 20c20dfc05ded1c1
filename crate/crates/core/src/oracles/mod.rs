//! Brute-force ground truth for the moment expansion.
//!
//! Three independent routes give `E[∫ x^{2k} dmu_lambda]` as a polynomial in
//! `1/n`: markings of nonnegative paths, rook placements on the staircase
//! set of partitions, and normal ordering of the operator words. The series
//! operators in [`series_ops`] evaluate the path-gluing recursion directly
//! from path counts.

pub mod paths;
pub mod rooks;
pub mod series_ops;
pub mod words;

pub use paths::{count_markings, dyck_paths, enum_paths, path_to_partition, LatticePath, Step};
pub use rooks::{
    moment_polynomial, rook_counts, rook_numbers, staircase_partitions, MomentPolynomial,
    Partition, RookPlacement,
};
pub use series_ops::{euler_series, g_series};
pub use words::word_moment;
