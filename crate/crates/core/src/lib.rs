//! Exact fine-structure expansion of the moments of the Kerov–Markov–Krein
//! transform `mu_lambda` of a Poissonized Plancherel random partition.
//!
//! - [`algebra`]: exact rationals, polynomials, rational functions in the
//!   Catalan variable `c`, truncated series, and the `theta_g(k)` normal form.
//! - [`ansatz`]: the closed-form operator pipeline producing `Phi_g(c)`.
//! - [`oracles`]: brute-force lattice-path, rook-placement and
//!   operator-word counts that the pipeline is checked against.
//! - [`sampler`]: RSK-based sampling of partitions and the transition
//!   measure, for Monte Carlo comparison.

pub mod algebra;
pub mod ansatz;
pub mod error;
pub mod oracles;
pub mod sampler;

pub use error::Error;
