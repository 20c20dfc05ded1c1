//! Exact arithmetic: rationals, polynomials and rational functions in the
//! Catalan variable `c`, truncated power series in `x`, and the
//! fine-structure normal form.

pub mod biseries;
pub mod fine;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod series;

pub use biseries::BiSeries;
pub use fine::{fine_structure_form, FineStructureForm};
pub use poly::Poly;
pub use ratfn::RationalFn;
pub use rational::BigRational;
pub use series::{catalan_series, expand_in_x, SeriesX};
