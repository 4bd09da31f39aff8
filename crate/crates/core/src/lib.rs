//! Sampling of Hall–Littlewood coherent measures on Young diagrams through a
//! randomized RSK insertion on interlacing arrays, with an exact oracle.

pub mod checks;
pub mod hl_kernel;
pub mod oracle;
pub mod particle_systems;
pub mod partitions;
pub mod rng;
pub mod rsk_sampler;
pub mod scalar;
pub mod stats;
pub mod worked;

pub use partitions::Partition;
pub use scalar::{rat, Rational, Scalar};
