//! Dynamic skyline queries over uncertain graphs.
//!
//! An uncertain graph attaches to every undirected edge a positive length and an
//! independent existence probability. Given a set of query vertices, the pipeline
//!
//! 1. prunes data vertices that are unreachable from some query vertex or farther
//!    than a distance threshold ([`pruning`]),
//! 2. computes an uncertain distance from every surviving candidate to every query
//!    vertex, either the *majority* distance over sampled possible worlds or the
//!    *expected* distance over bounded-hop simple paths ([`distances`]),
//! 3. returns the candidates whose distance vectors are not dominated ([`skyline`]).
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases at the
//! crate root fix it to `f64`, which is what the CLI uses.

pub mod distances;
pub mod error;
pub mod graph;
pub mod harness;
pub mod pruning;
pub mod sampling;
pub mod scalar;
pub mod skyline;
pub mod strategies;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, GraphStats, RandomSeed, VertexId};
pub use scalar::Scalar;

/// Uncertain graph with `f64` lengths and probabilities.
pub type UncertainGraph = graph::UncertainGraph<f64>;
/// Possible world drawn from an `f64` graph.
pub type WorldSample = sampling::WorldSample<f64>;
/// Collection of `f64` possible worlds.
pub type SampleSet = sampling::SampleSet<f64>;
/// Candidate-by-query distance matrix over `f64`.
pub type DistanceMatrix = distances::DistanceMatrix<f64>;
/// Skyline over an `f64` distance matrix.
pub type SkylineResult = skyline::SkylineResult<f64>;
/// Pruning configuration with an `f64` threshold.
pub type PruneConfig = pruning::PruneConfig<f64>;
