//! Query-vertex selection: pick a seed vertex (uniformly, or among high-degree /
//! high-clustering vertices), then the remaining `k - 1` uniformly without
//! replacement from the seed's two-hop neighbourhood.

use std::fmt;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{RandomSeed, UncertainGraph, VertexId};
use crate::pruning::QuerySet;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StrategyKind {
    /// Seed drawn from all vertices.
    Rand,
    /// Seed drawn from vertices with degree strictly above `threshold`.
    HighDegree { threshold: usize },
    /// Seed drawn from vertices with clustering coefficient strictly above `threshold`.
    HighClustering { threshold: f64 },
}

impl StrategyKind {
    pub fn label(&self) -> &'static str {
        match self {
            StrategyKind::Rand => "RAND",
            StrategyKind::HighDegree { .. } => "HDEG",
            StrategyKind::HighClustering { .. } => "HCLUS",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyConfig {
    pub kind: StrategyKind,
    pub query_size: usize,
    pub seed: RandomSeed,
    /// Seed vertices tried before giving up when neighbourhoods are too small.
    pub max_attempts: usize,
}

impl StrategyConfig {
    pub fn new(kind: StrategyKind, query_size: usize, seed: RandomSeed) -> Self {
        StrategyConfig {
            kind,
            query_size,
            seed,
            max_attempts: 100,
        }
    }
}

/// Local clustering coefficient from topology only: the fraction of neighbour
/// pairs that are themselves adjacent. Zero below degree 2.
pub fn clustering_coefficient<S: Scalar>(graph: &UncertainGraph<S>, v: VertexId) -> Result<f64> {
    graph.check_vertex(v)?;
    let nbrs = graph.neighbors(v);
    let d = nbrs.len();
    if d < 2 {
        return Ok(0.0);
    }
    let mut triangles = 0usize;
    for (i, &(a, _)) in nbrs.iter().enumerate() {
        for &(b, _) in &nbrs[i + 1..] {
            if graph.edge_between(a, b).is_some() {
                triangles += 1;
            }
        }
    }
    Ok(2.0 * triangles as f64 / (d * (d - 1)) as f64)
}

fn seed_pool<S: Scalar>(graph: &UncertainGraph<S>, kind: StrategyKind) -> Result<Vec<VertexId>> {
    let pool: Vec<VertexId> = match kind {
        StrategyKind::Rand => graph.vertices().collect(),
        StrategyKind::HighDegree { threshold } => graph
            .vertices()
            .filter(|&v| graph.degree(v) > threshold)
            .collect(),
        StrategyKind::HighClustering { threshold } => graph
            .vertices()
            .filter(|&v| clustering_coefficient(graph, v).is_ok_and(|cc| cc > threshold))
            .collect(),
    };
    if pool.is_empty() {
        return Err(Error::Strategy(match kind {
            StrategyKind::Rand => "graph has no vertices".into(),
            StrategyKind::HighDegree { threshold } => {
                format!("no vertex has degree above {threshold}")
            }
            StrategyKind::HighClustering { threshold } => {
                format!("no vertex has clustering coefficient above {threshold}")
            }
        }));
    }
    Ok(pool)
}

/// Draws `config.query_size` distinct query vertices.
pub fn select_queries<S: Scalar>(
    graph: &UncertainGraph<S>,
    config: &StrategyConfig,
) -> Result<QuerySet> {
    let k = config.query_size;
    if k == 0 {
        return Err(Error::Config("query size must be at least 1".into()));
    }
    let pool = seed_pool(graph, config.kind)?;
    let mut rng = config.seed.rng();
    for _ in 0..config.max_attempts.max(1) {
        let first = pool[rng.gen_range(0..pool.len())];
        let nbrs: Vec<VertexId> = graph.two_hop_neighbors(first)?.into_iter().collect();
        if nbrs.len() < k - 1 {
            continue;
        }
        let mut chosen = Vec::with_capacity(k);
        chosen.push(first);
        chosen.extend(
            index::sample(&mut rng, nbrs.len(), k - 1)
                .iter()
                .map(|i| nbrs[i]),
        );
        return QuerySet::new(graph, chosen);
    }
    Err(Error::SelectionInfeasible(format!(
        "{} could not find a seed vertex with at least {} two-hop neighbours in {} attempts",
        config.kind,
        k - 1,
        config.max_attempts
    )))
}
