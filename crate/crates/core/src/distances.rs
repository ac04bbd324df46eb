//! Distance semantics on uncertain graphs.
//!
//! * Deterministic weighted shortest paths, treating every edge as present.
//! * Majority distance: the shortest-path distance value carrying the most
//!   probability mass over a set of possible worlds.
//! * Expected distance: length averaged over the simple paths of at most `l`
//!   hops, each path weighted by its normalised product of edge probabilities.
//!
//! Batch forms (`*_to`) sweep once from a source and read off many targets;
//! they produce bit-identical values to the per-pair forms called with the same
//! source.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, UncertainGraph, VertexId};
use crate::sampling::{enumerate_worlds, SampleSet, WorldSample};
use crate::scalar::Scalar;

/// `|candidates| x |queries|` matrix of distances, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix<S> {
    candidates: Vec<VertexId>,
    queries: Vec<VertexId>,
    values: Vec<S>,
}

impl<S: Scalar> DistanceMatrix<S> {
    /// `rows[i]` holds the distances of `candidates[i]` to each query, in order.
    pub fn from_rows(
        candidates: Vec<VertexId>,
        queries: Vec<VertexId>,
        rows: Vec<Vec<S>>,
    ) -> Result<Self> {
        if rows.len() != candidates.len() {
            return Err(Error::Argument(format!(
                "{} rows for {} candidates",
                rows.len(),
                candidates.len()
            )));
        }
        let mut values = Vec::with_capacity(rows.len() * queries.len());
        for row in rows {
            if row.len() != queries.len() {
                return Err(Error::Argument(format!(
                    "row of length {} for {} queries",
                    row.len(),
                    queries.len()
                )));
            }
            if row.iter().any(|x| x.is_nan() || *x < S::zero()) {
                return Err(Error::Argument(
                    "distances must be non-negative, not NaN".into(),
                ));
            }
            values.extend(row);
        }
        Ok(DistanceMatrix {
            candidates,
            queries,
            values,
        })
    }

    pub fn candidates(&self) -> &[VertexId] {
        &self.candidates
    }

    pub fn queries(&self) -> &[VertexId] {
        &self.queries
    }

    pub fn row_count(&self) -> usize {
        self.candidates.len()
    }

    pub fn column_count(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn row(&self, i: usize) -> &[S] {
        let q = self.queries.len();
        &self.values[i * q..(i + 1) * q]
    }

    pub fn get(&self, row: usize, column: usize) -> S {
        self.values[row * self.queries.len() + column]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> + '_ {
        (0..self.row_count()).map(move |i| self.row(i))
    }
}

// ---------------------------------------------------------------------------
// Deterministic shortest paths
// ---------------------------------------------------------------------------

/// Total order over distances. Distances are never NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Key<S>(S);

impl<S: PartialEq> Eq for Key<S> {}

impl<S: PartialOrd> PartialOrd for Key<S> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: PartialOrd> Ord for Key<S> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.partial_cmp(&other.0).expect("distance is NaN")
    }
}

/// Dijkstra over the edges accepted by `present`. Unreached vertices stay at
/// +inf. With a `target`, stops once it is settled.
fn sweep<S, F>(
    graph: &UncertainGraph<S>,
    source: VertexId,
    target: Option<VertexId>,
    present: F,
) -> Vec<S>
where
    S: Scalar,
    F: Fn(EdgeId) -> bool,
{
    let mut dist = vec![S::infinity(); graph.vertex_count()];
    let mut settled = vec![false; graph.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[source.index()] = S::zero();
    heap.push(Reverse((Key(S::zero()), source.index())));
    while let Some(Reverse((Key(d), x))) = heap.pop() {
        if settled[x] {
            continue;
        }
        settled[x] = true;
        if target.is_some_and(|t| t.index() == x) {
            break;
        }
        for &(y, e) in graph.neighbors(VertexId(x)) {
            if settled[y.index()] || !present(e) {
                continue;
            }
            let nd = d + graph.edge(e).weight;
            if nd < dist[y.index()] {
                dist[y.index()] = nd;
                heap.push(Reverse((Key(nd), y.index())));
            }
        }
    }
    dist
}

/// Weighted shortest-path distance with every edge present; +inf if disconnected.
pub fn shortest_distance<S: Scalar>(
    graph: &UncertainGraph<S>,
    source: VertexId,
    target: VertexId,
) -> Result<S> {
    graph.check_vertex(source)?;
    graph.check_vertex(target)?;
    Ok(sweep(graph, source, Some(target), |_| true)[target.index()])
}

/// Single-source distances to every vertex, indexed by vertex id.
pub fn shortest_distances_from<S: Scalar>(
    graph: &UncertainGraph<S>,
    source: VertexId,
) -> Result<Vec<S>> {
    graph.check_vertex(source)?;
    Ok(sweep(graph, source, None, |_| true))
}

/// Shortest distances from `source` inside one possible world.
pub fn world_distances_from<S: Scalar>(
    graph: &UncertainGraph<S>,
    world: &WorldSample<S>,
    source: VertexId,
) -> Vec<S> {
    sweep(graph, source, None, |e| world.contains(e))
}

// ---------------------------------------------------------------------------
// Majority distance
// ---------------------------------------------------------------------------

/// How each sampled world contributes to the distance distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Weighting {
    /// Each world adds its own generation probability. With an exhaustive world
    /// set this is the exact distribution; with random samples it weights likely
    /// worlds twice (once by being drawn, once by the added mass).
    #[default]
    PaperWeighted,
    /// Each world adds `1 / |samples|`: the plain Monte Carlo estimator.
    Frequency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MajorityDistanceConfig {
    /// Number of worlds to draw when the caller samples.
    pub sample_count: usize,
    pub weighting: Weighting,
}

impl Default for MajorityDistanceConfig {
    fn default() -> Self {
        MajorityDistanceConfig {
            sample_count: 1000,
            weighting: Weighting::PaperWeighted,
        }
    }
}

/// Probability mass per shortest-path distance value, with a separate bucket
/// for worlds in which the pair is disconnected.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestDistanceDistribution<S> {
    buckets: BTreeMap<Key<S>, S>,
    disconnected: S,
}

impl<S: Scalar> Default for ShortestDistanceDistribution<S> {
    fn default() -> Self {
        ShortestDistanceDistribution {
            buckets: BTreeMap::new(),
            disconnected: S::zero(),
        }
    }
}

impl<S: Scalar> ShortestDistanceDistribution<S> {
    pub fn add(&mut self, distance: S, mass: S) {
        if distance.is_infinite() {
            self.disconnected = self.disconnected + mass;
        } else {
            let slot = self.buckets.entry(Key(distance)).or_insert_with(S::zero);
            *slot = *slot + mass;
        }
    }

    /// Finite `(distance, mass)` buckets in increasing distance.
    pub fn buckets(&self) -> impl Iterator<Item = (S, S)> + '_ {
        self.buckets.iter().map(|(d, m)| (d.0, *m))
    }

    pub fn disconnected_mass(&self) -> S {
        self.disconnected
    }

    pub fn total_mass(&self) -> S {
        self.buckets.values().copied().sum::<S>() + self.disconnected
    }

    /// All masses, finite buckets first and the disconnected bucket last.
    pub fn masses(&self) -> Vec<S> {
        let mut all: Vec<S> = self.buckets.values().copied().collect();
        all.push(self.disconnected);
        all
    }

    /// Distance with the largest mass. Ties go to the smallest finite distance;
    /// the disconnected bucket (+inf) loses every tie.
    pub fn majority(&self) -> S {
        let mut best: Option<(S, S)> = None;
        for (d, m) in self.buckets() {
            if best.is_none_or(|(_, bm)| m > bm) {
                best = Some((d, m));
            }
        }
        match best {
            Some((d, m)) if m >= self.disconnected => d,
            _ => S::infinity(),
        }
    }
}

fn world_mass<S: Scalar>(weighting: Weighting, world_prob: S, count: usize) -> S {
    match weighting {
        Weighting::PaperWeighted => world_prob,
        Weighting::Frequency => S::one() / S::of(count as f64),
    }
}

fn check_samples<S: Scalar>(graph: &UncertainGraph<S>, samples: &SampleSet<S>) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::Argument(
            "majority distance needs at least one world".into(),
        ));
    }
    if samples.samples()[0].edge_mask.len() != graph.edge_count() {
        return Err(Error::Argument(
            "sample set was drawn from a different graph".into(),
        ));
    }
    Ok(())
}

/// Shortest-distance distribution of `(u, v)` over `samples`, sweeping from `u`.
pub fn distance_distribution<S: Scalar>(
    graph: &UncertainGraph<S>,
    samples: &SampleSet<S>,
    u: VertexId,
    v: VertexId,
    weighting: Weighting,
) -> Result<ShortestDistanceDistribution<S>> {
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    if u == v {
        return Err(Error::Argument(format!(
            "majority distance of {u} to itself"
        )));
    }
    check_samples(graph, samples)?;
    let mut dist = ShortestDistanceDistribution::default();
    for (world, p) in samples.iter() {
        let d = sweep(graph, u, Some(v), |e| world.contains(e))[v.index()];
        dist.add(d, world_mass(weighting, p, samples.len()));
    }
    Ok(dist)
}

/// Most probable shortest-path distance between `u` and `v` over `samples`.
pub fn majority_distance<S: Scalar>(
    graph: &UncertainGraph<S>,
    samples: &SampleSet<S>,
    u: VertexId,
    v: VertexId,
    config: &MajorityDistanceConfig,
) -> Result<S> {
    Ok(distance_distribution(graph, samples, u, v, config.weighting)?.majority())
}

/// Distributions from `source` to each of `targets`, one sweep per world.
pub fn distance_distributions_to<S: Scalar>(
    graph: &UncertainGraph<S>,
    samples: &SampleSet<S>,
    source: VertexId,
    targets: &[VertexId],
    weighting: Weighting,
) -> Result<Vec<ShortestDistanceDistribution<S>>> {
    graph.check_vertex(source)?;
    targets.iter().try_for_each(|&t| graph.check_vertex(t))?;
    check_samples(graph, samples)?;
    let mut out = vec![ShortestDistanceDistribution::default(); targets.len()];
    for (world, p) in samples.iter() {
        let d = world_distances_from(graph, world, source);
        let mass = world_mass(weighting, p, samples.len());
        for (slot, t) in out.iter_mut().zip(targets) {
            slot.add(d[t.index()], mass);
        }
    }
    Ok(out)
}

/// Majority distances from `source` to each of `targets`.
pub fn majority_distances_to<S: Scalar>(
    graph: &UncertainGraph<S>,
    samples: &SampleSet<S>,
    source: VertexId,
    targets: &[VertexId],
    weighting: Weighting,
) -> Result<Vec<S>> {
    Ok(
        distance_distributions_to(graph, samples, source, targets, weighting)?
            .iter()
            .map(ShortestDistanceDistribution::majority)
            .collect(),
    )
}

/// Exact distribution over all possible worlds (`m <= 20`).
pub fn exact_distance_distribution<S: Scalar>(
    graph: &UncertainGraph<S>,
    u: VertexId,
    v: VertexId,
) -> Result<ShortestDistanceDistribution<S>> {
    let worlds = enumerate_worlds(graph)?;
    distance_distribution(graph, &worlds, u, v, Weighting::PaperWeighted)
}

/// Majority distance from the exact world distribution.
pub fn exact_majority_distance<S: Scalar>(
    graph: &UncertainGraph<S>,
    u: VertexId,
    v: VertexId,
) -> Result<S> {
    Ok(exact_distance_distribution(graph, u, v)?.majority())
}

// ---------------------------------------------------------------------------
// Bounded-hop paths and expected distance
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct BoundedPath<S> {
    /// Vertices from source to target inclusive.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// Sum of edge lengths.
    pub length: S,
    /// Product of edge probabilities, before normalisation.
    pub probability: S,
}

/// Every simple path between two vertices with at most `max_hops` edges.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedPathSet<S> {
    pub source: VertexId,
    pub target: VertexId,
    pub max_hops: usize,
    pub paths: Vec<BoundedPath<S>>,
}

/// Which formula turns a path set into one distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpectedFormula {
    /// `sum_k len(p_k) * P(p_k) / sum_k P(p_k)` with `P(p)` the product of edge
    /// probabilities.
    #[default]
    Definition,
    /// Per path, sums `p(e)` and `p(e) * w(e)` over its edges; returns the ratio
    /// of the grand totals. Kept for comparison with the published pseudocode.
    AlgorithmLiteral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedDistanceConfig {
    /// Longest path considered, in edges.
    pub max_hops: usize,
    pub formula: ExpectedFormula,
}

impl Default for ExpectedDistanceConfig {
    fn default() -> Self {
        ExpectedDistanceConfig {
            max_hops: 4,
            formula: ExpectedFormula::Definition,
        }
    }
}

impl<S: Scalar> BoundedPathSet<S> {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Expected distance under `formula`; +inf for an empty set.
    pub fn expected_distance(&self, graph: &UncertainGraph<S>, formula: ExpectedFormula) -> S {
        let mut acc = ExpectedAccumulator::default();
        for p in &self.paths {
            match formula {
                ExpectedFormula::Definition => acc.add(p.length * p.probability, p.probability),
                ExpectedFormula::AlgorithmLiteral => {
                    let (mut num, mut den) = (S::zero(), S::zero());
                    for &e in &p.edges {
                        let edge = graph.edge(e);
                        num = num + edge.prob * edge.weight;
                        den = den + edge.prob;
                    }
                    acc.add(num, den)
                }
            }
        }
        acc.value()
    }
}

#[derive(Debug, Clone, Copy)]
struct ExpectedAccumulator<S> {
    num: S,
    den: S,
    paths: usize,
}

impl<S: Scalar> Default for ExpectedAccumulator<S> {
    fn default() -> Self {
        ExpectedAccumulator {
            num: S::zero(),
            den: S::zero(),
            paths: 0,
        }
    }
}

impl<S: Scalar> ExpectedAccumulator<S> {
    fn add(&mut self, num: S, den: S) {
        self.num = self.num + num;
        self.den = self.den + den;
        self.paths += 1;
    }

    fn value(&self) -> S {
        if self.paths == 0 || self.den <= S::zero() {
            S::infinity()
        } else {
            self.num / self.den
        }
    }
}

/// Depth-limited DFS from `source` over simple paths with on-path marking.
/// `visit` sees every path prefix (as vertex and edge stacks) of 1..=max_hops
/// edges; returning `false` stops extending that prefix.
fn walk_simple_paths<S, F>(
    graph: &UncertainGraph<S>,
    source: VertexId,
    max_hops: usize,
    mut visit: F,
) where
    S: Scalar,
    F: FnMut(&[VertexId], &[EdgeId]) -> bool,
{
    fn recurse<S: Scalar, F: FnMut(&[VertexId], &[EdgeId]) -> bool>(
        graph: &UncertainGraph<S>,
        max_hops: usize,
        on_path: &mut [bool],
        vertices: &mut Vec<VertexId>,
        edges: &mut Vec<EdgeId>,
        visit: &mut F,
    ) {
        let tip = *vertices.last().expect("path is never empty");
        for &(next, e) in graph.neighbors(tip) {
            if on_path[next.index()] {
                continue;
            }
            vertices.push(next);
            edges.push(e);
            if visit(vertices, edges) && edges.len() < max_hops {
                on_path[next.index()] = true;
                recurse(graph, max_hops, on_path, vertices, edges, visit);
                on_path[next.index()] = false;
            }
            vertices.pop();
            edges.pop();
        }
    }

    if max_hops == 0 {
        return;
    }
    let mut on_path = vec![false; graph.vertex_count()];
    on_path[source.index()] = true;
    let mut vertices = vec![source];
    let mut edges = Vec::with_capacity(max_hops);
    recurse(
        graph,
        max_hops,
        &mut on_path,
        &mut vertices,
        &mut edges,
        &mut visit,
    );
}

/// All simple `u`-`v` paths of at most `max_hops` edges.
pub fn enumerate_paths<S: Scalar>(
    graph: &UncertainGraph<S>,
    u: VertexId,
    v: VertexId,
    max_hops: usize,
) -> Result<BoundedPathSet<S>> {
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    if u == v {
        return Err(Error::Argument(format!("paths from {u} to itself")));
    }
    if max_hops == 0 {
        return Err(Error::Argument("max_hops must be at least 1".into()));
    }
    let mut paths = Vec::new();
    walk_simple_paths(graph, u, max_hops, |vertices, edges| {
        if *vertices.last().unwrap() != v {
            return true;
        }
        let (mut length, mut probability) = (S::zero(), S::one());
        for &e in edges {
            length = length + graph.edge(e).weight;
            probability = probability * graph.edge(e).prob;
        }
        paths.push(BoundedPath {
            vertices: vertices.to_vec(),
            edges: edges.to_vec(),
            length,
            probability,
        });
        false
    });
    Ok(BoundedPathSet {
        source: u,
        target: v,
        max_hops,
        paths,
    })
}

/// Expected distance between `u` and `v`; +inf when no path fits in `max_hops`.
pub fn expected_distance<S: Scalar>(
    graph: &UncertainGraph<S>,
    u: VertexId,
    v: VertexId,
    config: &ExpectedDistanceConfig,
) -> Result<S> {
    let paths = enumerate_paths(graph, u, v, config.max_hops)?;
    Ok(paths.expected_distance(graph, config.formula))
}

/// Expected distances from `source` to each of `targets` in one traversal.
pub fn expected_distances_to<S: Scalar>(
    graph: &UncertainGraph<S>,
    source: VertexId,
    targets: &[VertexId],
    config: &ExpectedDistanceConfig,
) -> Result<Vec<S>> {
    graph.check_vertex(source)?;
    targets.iter().try_for_each(|&t| graph.check_vertex(t))?;
    if config.max_hops == 0 {
        return Err(Error::Argument("max_hops must be at least 1".into()));
    }
    let mut acc = vec![ExpectedAccumulator::<S>::default(); graph.vertex_count()];
    // Running (length, product) or (sum p*w, sum p) per prefix depth.
    let mut prefix: Vec<(S, S)> = Vec::with_capacity(config.max_hops);
    walk_simple_paths(graph, source, config.max_hops, |vertices, edges| {
        prefix.truncate(edges.len() - 1);
        let edge = graph.edge(*edges.last().unwrap());
        let (a, b) = prefix.last().copied().unwrap_or(match config.formula {
            ExpectedFormula::Definition => (S::zero(), S::one()),
            ExpectedFormula::AlgorithmLiteral => (S::zero(), S::zero()),
        });
        let next = match config.formula {
            ExpectedFormula::Definition => (a + edge.weight, b * edge.prob),
            ExpectedFormula::AlgorithmLiteral => (a + edge.prob * edge.weight, b + edge.prob),
        };
        prefix.push(next);
        let slot = &mut acc[vertices.last().unwrap().index()];
        match config.formula {
            ExpectedFormula::Definition => slot.add(next.0 * next.1, next.1),
            ExpectedFormula::AlgorithmLiteral => slot.add(next.0, next.1),
        }
        true
    });
    Ok(targets.iter().map(|t| acc[t.index()].value()).collect())
}

// ---------------------------------------------------------------------------
// Distance matrix
// ---------------------------------------------------------------------------

/// Which uncertain distance fills the matrix.
#[derive(Debug, Clone, Copy)]
pub enum DistanceSemantics<'a, S> {
    Majority {
        samples: &'a SampleSet<S>,
        config: MajorityDistanceConfig,
    },
    Expected(ExpectedDistanceConfig),
}

/// Distance from every candidate (rows) to every query (columns). Each column
/// is computed by sweeping from its query vertex; columns run in parallel.
pub fn build_distance_matrix<S: Scalar>(
    graph: &UncertainGraph<S>,
    candidates: &[VertexId],
    queries: &[VertexId],
    semantics: DistanceSemantics<'_, S>,
) -> Result<DistanceMatrix<S>> {
    if queries.is_empty() {
        return Err(Error::Argument(
            "at least one query vertex is required".into(),
        ));
    }
    let query_set: HashSet<VertexId> = queries.iter().copied().collect();
    if let Some(c) = candidates.iter().find(|c| query_set.contains(c)) {
        return Err(Error::Argument(format!(
            "vertex {c} is both a candidate and a query"
        )));
    }
    let columns: Vec<Vec<S>> = queries
        .par_iter()
        .map(|&q| match semantics {
            DistanceSemantics::Majority { samples, config } => {
                majority_distances_to(graph, samples, q, candidates, config.weighting)
            }
            DistanceSemantics::Expected(config) => {
                expected_distances_to(graph, q, candidates, &config)
            }
        })
        .collect::<Result<_>>()?;
    let rows = (0..candidates.len())
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    DistanceMatrix::from_rows(candidates.to_vec(), queries.to_vec(), rows)
}
