//! Candidate pruning ahead of distance computation.
//!
//! Two stages: drop data vertices not reachable from every query vertex, then
//! drop those whose deterministic weighted shortest-path distance to some query
//! vertex exceeds a threshold. The threshold uses the all-edges-present
//! distance, so the skyline computed afterwards is exact only with respect to
//! the threshold-filtered set of data vertices.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::distances::shortest_distances_from;
use crate::error::{Error, Result};
use crate::graph::{UncertainGraph, VertexId};
use crate::scalar::Scalar;

/// Distinct, non-empty, ordered set of query vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuerySet {
    vertices: Vec<VertexId>,
}

impl QuerySet {
    pub fn new<S: Scalar>(graph: &UncertainGraph<S>, vertices: Vec<VertexId>) -> Result<Self> {
        let qs = QuerySet { vertices };
        qs.validate(graph)?;
        Ok(qs)
    }

    fn validate<S: Scalar>(&self, graph: &UncertainGraph<S>) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::Argument("query set is empty".into()));
        }
        let mut seen = HashSet::new();
        for &q in &self.vertices {
            if q.index() >= graph.vertex_count() {
                return Err(Error::Argument(format!(
                    "query vertex {q} is not in the graph"
                )));
            }
            if !seen.insert(q) {
                return Err(Error::Argument(format!("query vertex {q} listed twice")));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

/// Data vertices surviving pruning, in increasing id order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CandidateSet {
    vertices: Vec<VertexId>,
    /// For each data vertex reached by at least one query vertex, the query
    /// vertices reaching it.
    reach_map: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl CandidateSet {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn reach_map(&self) -> &BTreeMap<VertexId, BTreeSet<VertexId>> {
        &self.reach_map
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PruneConfig<S> {
    /// Largest allowed deterministic distance to any query vertex. May be +inf.
    pub distance_threshold: S,
    pub skip_distance_pruning: bool,
}

impl<S: Scalar> Default for PruneConfig<S> {
    fn default() -> Self {
        PruneConfig {
            distance_threshold: S::of(400.0),
            skip_distance_pruning: false,
        }
    }
}

impl<S: Scalar> PruneConfig<S> {
    pub fn with_threshold(distance_threshold: S) -> Self {
        PruneConfig {
            distance_threshold,
            skip_distance_pruning: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.distance_threshold > S::zero() {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "distance threshold must be positive, got {}",
                self.distance_threshold
            )))
        }
    }
}

/// Keeps the data vertices reachable from every query vertex.
pub fn bfs_prune<S: Scalar>(graph: &UncertainGraph<S>, queries: &QuerySet) -> Result<CandidateSet> {
    queries.validate(graph)?;
    let reached: Vec<Vec<bool>> = queries
        .vertices()
        .par_iter()
        .map(|&q| graph.reachable_from(q))
        .collect::<Result<_>>()?;
    let mut reach_map: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for (&q, seen) in queries.vertices().iter().zip(&reached) {
        for v in graph.vertices() {
            if seen[v.index()] && !queries.contains(v) {
                reach_map.entry(v).or_default().insert(q);
            }
        }
    }
    let vertices = reach_map
        .iter()
        .filter(|(_, qs)| qs.len() == queries.len())
        .map(|(&v, _)| v)
        .collect();
    Ok(CandidateSet {
        vertices,
        reach_map,
    })
}

/// Drops candidates farther than the threshold from some query vertex, using
/// one single-source sweep per query vertex.
pub fn distance_prune<S: Scalar>(
    graph: &UncertainGraph<S>,
    candidates: &CandidateSet,
    queries: &QuerySet,
    config: &PruneConfig<S>,
) -> Result<CandidateSet> {
    config.validate()?;
    queries.validate(graph)?;
    if config.distance_threshold.is_infinite() || candidates.is_empty() {
        return Ok(candidates.clone());
    }
    let sweeps: Vec<Vec<S>> = queries
        .vertices()
        .par_iter()
        .map(|&q| shortest_distances_from(graph, q))
        .collect::<Result<_>>()?;
    let vertices = candidates
        .vertices
        .iter()
        .copied()
        .filter(|v| {
            sweeps
                .iter()
                .all(|d| d[v.index()] <= config.distance_threshold)
        })
        .collect();
    Ok(CandidateSet {
        vertices,
        reach_map: candidates.reach_map.clone(),
    })
}

/// Reachability pruning followed, unless disabled, by threshold pruning.
pub fn prune<S: Scalar>(
    graph: &UncertainGraph<S>,
    queries: &QuerySet,
    config: &PruneConfig<S>,
) -> Result<CandidateSet> {
    config.validate()?;
    let reachable = bfs_prune(graph, queries)?;
    if config.skip_distance_pruning {
        return Ok(reachable);
    }
    distance_prune(graph, &reachable, queries, config)
}
