//! Random permutations, partitions and point processes: Ewens measures,
//! Poisson–Dirichlet limits, Plancherel measures, discrete kernels and
//! z-measures.

pub mod combinat;
mod error;
pub mod ewens;
pub mod kernels;
pub mod measures;
pub mod pdirichlet;
pub mod plancherel;
pub mod quad;
pub mod rng;
pub mod stats;
pub mod verify;

pub use combinat::{HalfInt, Partition, Permutation, PointConfiguration, Profile};
pub use error::{Error, Result};
