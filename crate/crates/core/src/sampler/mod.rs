//! Monte Carlo side: Poissonized Plancherel partitions via RSK, their
//! transition measures, and moment estimates.

pub mod mc;
pub mod measure;
pub mod rsk;

pub use mc::{
    mc_moment, mc_moments, sample_plancherel, sample_poisson, sample_pp, MomentEstimate, RngState,
    DEFAULT_SEED,
};
pub use measure::{
    corners, partitions_of, plancherel_probability, transition_measure, TransitionMeasure,
};
pub use rsk::rsk_shape;
