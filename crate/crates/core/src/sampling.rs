//! Possible-world semantics.
//!
//! A possible world keeps every vertex and each edge independently with its
//! existence probability; present edges keep their length. Its generation
//! probability is the product of `p(e)` over present edges and `1 - p(e)` over
//! absent ones, accumulated here in log space so that large graphs do not
//! underflow.

use fixedbitset::FixedBitSet;
use petgraph::unionfind::UnionFind;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, RandomSeed, UncertainGraph, VertexId};
use crate::scalar::Scalar;

/// Largest edge count for which all `2^m` worlds may be enumerated.
pub const MAX_ENUMERATION_EDGES: usize = 20;

/// Worlds drawn per RNG stream. The merged sample set does not depend on how
/// shards are scheduled across threads.
const SHARD_SIZE: usize = 1024;

/// One deterministic subgraph of an uncertain graph.
#[derive(Debug, Clone, PartialEq)]
pub struct WorldSample<S> {
    /// Bit `i` is set when edge `i` of the parent graph is present.
    pub edge_mask: FixedBitSet,
    /// Natural log of the world's generation probability.
    pub log_prob: S,
}

impl<S: Scalar> WorldSample<S> {
    pub fn probability(&self) -> S {
        self.log_prob.exp()
    }

    #[inline]
    pub fn contains(&self, edge: EdgeId) -> bool {
        self.edge_mask.contains(edge.index())
    }
}

/// Worlds together with their generation probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<S> {
    samples: Vec<WorldSample<S>>,
    probs: Vec<S>,
}

impl<S: Scalar> SampleSet<S> {
    pub fn new(samples: Vec<WorldSample<S>>) -> Self {
        let probs = samples.iter().map(WorldSample::probability).collect();
        SampleSet { samples, probs }
    }

    pub fn samples(&self) -> &[WorldSample<S>] {
        &self.samples
    }

    /// `probs()[i]` is the generation probability of `samples()[i]`.
    pub fn probs(&self) -> &[S] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WorldSample<S>, S)> + '_ {
        self.samples.iter().zip(self.probs.iter().copied())
    }
}

/// Per-edge `ln p` and `ln (1 - p)`.
fn edge_logs<S: Scalar>(graph: &UncertainGraph<S>) -> Vec<(S, S)> {
    graph
        .edges()
        .iter()
        .map(|e| (e.prob.ln(), (-e.prob).ln_1p()))
        .collect()
}

fn mask_log_prob<S: Scalar>(logs: &[(S, S)], mask: &FixedBitSet) -> S {
    logs.iter()
        .enumerate()
        .map(|(i, &(present, absent))| if mask.contains(i) { present } else { absent })
        .fold(S::zero(), |acc, x| acc + x)
}

pub fn world_log_probability<S: Scalar>(
    graph: &UncertainGraph<S>,
    mask: &FixedBitSet,
) -> Result<S> {
    if mask.len() != graph.edge_count() {
        return Err(Error::Argument(format!(
            "edge mask has {} bits but the graph has {} edges",
            mask.len(),
            graph.edge_count()
        )));
    }
    Ok(mask_log_prob(&edge_logs(graph), mask))
}

/// Generation probability of the world whose present edges are `mask`.
pub fn world_probability<S: Scalar>(graph: &UncertainGraph<S>, mask: &FixedBitSet) -> Result<S> {
    Ok(world_log_probability(graph, mask)?.exp())
}

/// Draws `count` worlds, each edge kept independently with its probability.
pub fn draw_samples<S: Scalar>(
    graph: &UncertainGraph<S>,
    count: usize,
    seed: RandomSeed,
) -> Result<SampleSet<S>> {
    if count == 0 {
        return Err(Error::Argument("sample count must be at least 1".into()));
    }
    let m = graph.edge_count();
    let probs: Vec<f64> = graph.edges().iter().map(|e| e.prob.as_f64()).collect();
    let logs = edge_logs(graph);
    let shards = count.div_ceil(SHARD_SIZE);
    let samples: Vec<WorldSample<S>> = (0..shards)
        .into_par_iter()
        .flat_map_iter(|shard| {
            let mut rng = seed.stream(shard as u64);
            let len = SHARD_SIZE.min(count - shard * SHARD_SIZE);
            let (probs, logs) = (&probs, &logs);
            (0..len).map(move |_| {
                let mut mask = FixedBitSet::with_capacity(m);
                for (i, &p) in probs.iter().enumerate() {
                    if rng.gen::<f64>() < p {
                        mask.insert(i);
                    }
                }
                let log_prob = mask_log_prob(logs, &mask);
                WorldSample {
                    edge_mask: mask,
                    log_prob,
                }
            })
        })
        .collect();
    Ok(SampleSet::new(samples))
}

/// All `2^m` worlds; world `k` contains edge `i` iff bit `i` of `k` is set.
pub fn enumerate_worlds<S: Scalar>(graph: &UncertainGraph<S>) -> Result<SampleSet<S>> {
    let m = graph.edge_count();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::TooManyWorlds {
            edges: m,
            limit: MAX_ENUMERATION_EDGES,
        });
    }
    let logs = edge_logs(graph);
    let samples = (0u64..1 << m)
        .map(|k| {
            let mut mask = FixedBitSet::with_capacity(m);
            for i in 0..m {
                if k >> i & 1 == 1 {
                    mask.insert(i);
                }
            }
            let log_prob = mask_log_prob(&logs, &mask);
            WorldSample {
                edge_mask: mask,
                log_prob,
            }
        })
        .collect();
    Ok(SampleSet::new(samples))
}

/// Whether `u` and `v` are connected using only the edges in `mask`.
pub fn connected_in_world<S: Scalar>(
    graph: &UncertainGraph<S>,
    mask: &FixedBitSet,
    u: VertexId,
    v: VertexId,
) -> bool {
    let mut sets = UnionFind::<usize>::new(graph.vertex_count());
    for i in mask.ones() {
        let e = &graph.edges()[i];
        sets.union(e.u.index(), e.v.index());
    }
    sets.equiv(u.index(), v.index())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReliabilityMode {
    /// Sum over every possible world; needs `m <= MAX_ENUMERATION_EDGES`.
    Exact,
    /// Fraction of `count` sampled worlds in which the pair is connected.
    MonteCarlo { count: usize, seed: RandomSeed },
}

/// Probability that `u` and `v` are connected.
pub fn reliability<S: Scalar>(
    graph: &UncertainGraph<S>,
    u: VertexId,
    v: VertexId,
    mode: ReliabilityMode,
) -> Result<S> {
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    if u == v {
        return Err(Error::Argument(format!(
            "reliability of vertex {u} with itself is trivially 1"
        )));
    }
    match mode {
        ReliabilityMode::Exact => {
            let worlds = enumerate_worlds(graph)?;
            Ok(worlds
                .iter()
                .filter(|(w, _)| connected_in_world(graph, &w.edge_mask, u, v))
                .map(|(_, p)| p)
                .sum())
        }
        ReliabilityMode::MonteCarlo { count, seed } => {
            let worlds = draw_samples(graph, count, seed)?;
            let hits = worlds
                .samples()
                .par_iter()
                .filter(|w| connected_in_world(graph, &w.edge_mask, u, v))
                .count();
            Ok(S::of(hits as f64 / count as f64))
        }
    }
}
