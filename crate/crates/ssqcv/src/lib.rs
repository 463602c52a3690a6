//! Graph matching by sampling candidate permutations from the partition of
//! R^n induced by a relaxed doubly stochastic solution.
//!
//! The pipeline: relax the matching problem over the Birkhoff polytope with
//! Frank-Wolfe ([`relax`]), then instead of a single Hungarian projection
//! ([`lap`]) walk the unit sphere with an adaptive-variance sampler
//! ([`sampler`]) whose proposals are rounded to permutations through the
//! order-matching map of [`rounding`]. QAPLIB parsing and the synthetic
//! noisy-isomorphism generator live in [`qaplib`]; histogram comparisons
//! against uniform permutation sampling in [`experiments`].

pub mod adapt;
pub mod error;
pub mod experiments;
pub mod instance;
pub mod lap;
pub mod linalg;
pub mod perm;
pub mod qaplib;
pub mod relax;
pub mod rounding;
pub mod sampler;

pub use error::{Error, Result};
pub use instance::GraphInstance;
pub use perm::{rank_vector, Permutation, RankVector};
pub use relax::{frank_wolfe, FwConfig, MatrixKind, PartitionMatrix};
pub use sampler::{solve, SamplerConfig, SolveResult};
