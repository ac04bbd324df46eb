//! End-to-end pipeline, per-step timing and experiment sweeps with CSV output.
//!
//! A plan is a flat `key = value` file whose keys are the long CLI flags
//! without leading dashes:
//!
//! ```text
//! # toy sweep
//! graph = toy.txt
//! synthesize = true
//! distance = majority, expected
//! strategy = rand, hdeg
//! degree-threshold = 2
//! query-size = 2, 3
//! repeats = 3
//! samples = 200
//! seed = 7
//! out = results.csv
//! ```

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::distances::{
    build_distance_matrix, DistanceMatrix, DistanceSemantics, ExpectedDistanceConfig,
    ExpectedFormula, MajorityDistanceConfig, Weighting,
};
use crate::error::{Error, Result};
use crate::graph::{AttributeRanges, EdgeDefaults, RandomSeed, UncertainGraph};
use crate::pruning::{bfs_prune, distance_prune, CandidateSet, PruneConfig, QuerySet};
use crate::sampling::{draw_samples, enumerate_worlds, SampleSet};
use crate::scalar::Scalar;
use crate::skyline::{bnl_skyline, SkylineResult};
use crate::strategies::{select_queries, StrategyConfig, StrategyKind};

pub const CSV_HEADER: [&str; 14] = [
    "dataset",
    "strategy",
    "query_size",
    "repeat",
    "semantics",
    "candidate_size",
    "skyline_size",
    "t_sample",
    "t_bfs_prune",
    "t_dist_prune",
    "t_distance",
    "t_skyline",
    "t_total",
    "status",
];

/// Indices of the timing columns in [`CSV_HEADER`].
pub const TIMING_COLUMNS: std::ops::Range<usize> = 7..13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticsKind {
    Majority,
    Expected,
}

impl SemanticsKind {
    pub fn label(self) -> &'static str {
        match self {
            SemanticsKind::Majority => "majority",
            SemanticsKind::Expected => "expected",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SemanticsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "majority" | "md" => Ok(SemanticsKind::Majority),
            "expected" | "ed" => Ok(SemanticsKind::Expected),
            other => Err(Error::Config(format!(
                "unknown distance {other:?} (expected majority or expected)"
            ))),
        }
    }
}

/// Where the possible worlds for majority distance come from.
#[derive(Debug, Clone)]
pub enum SampleSource<S> {
    /// Draw `sample_count` worlds with this seed.
    Draw(RandomSeed),
    /// Every possible world (small graphs only); with paper weighting this is
    /// the exact majority distance.
    Exhaustive,
    /// Worlds drawn once and reused across runs.
    Shared(Arc<SampleSet<S>>),
}

#[derive(Debug, Clone)]
pub enum QuerySemantics<S> {
    Majority {
        config: MajorityDistanceConfig,
        samples: SampleSource<S>,
    },
    Expected(ExpectedDistanceConfig),
}

impl<S> QuerySemantics<S> {
    pub fn kind(&self) -> SemanticsKind {
        match self {
            QuerySemantics::Majority { .. } => SemanticsKind::Majority,
            QuerySemantics::Expected(_) => SemanticsKind::Expected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepTimings {
    pub sample_generation: Duration,
    pub bfs_pruning: Duration,
    pub distance_pruning: Duration,
    pub distance_computation: Duration,
    pub skyline_computation: Duration,
    pub total: Duration,
}

/// Everything produced by one pipeline execution.
#[derive(Debug, Clone)]
pub struct QueryOutcome<S> {
    pub candidates: CandidateSet,
    pub matrix: DistanceMatrix<S>,
    pub skyline: SkylineResult<S>,
    pub timings: StepTimings,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, Duration)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed()))
}

/// Prune, compute the candidate-by-query distance matrix, extract the skyline.
/// An empty candidate set yields an empty skyline.
pub fn run_query<S: Scalar>(
    graph: &UncertainGraph<S>,
    queries: &QuerySet,
    semantics: &QuerySemantics<S>,
    prune: &PruneConfig<S>,
) -> Result<QueryOutcome<S>> {
    let start = Instant::now();
    prune.validate()?;
    let mut timings = StepTimings::default();

    let (reachable, t) = timed(|| bfs_prune(graph, queries))?;
    timings.bfs_pruning = t;
    let candidates = if prune.skip_distance_pruning {
        reachable
    } else {
        let (c, t) = timed(|| distance_prune(graph, &reachable, queries, prune))?;
        timings.distance_pruning = t;
        c
    };

    let matrix = match semantics {
        QuerySemantics::Expected(config) => {
            let (m, t) = timed(|| {
                build_distance_matrix(
                    graph,
                    candidates.vertices(),
                    queries.vertices(),
                    DistanceSemantics::Expected(*config),
                )
            })?;
            timings.distance_computation = t;
            m
        }
        QuerySemantics::Majority { config, samples } => {
            if candidates.is_empty() {
                DistanceMatrix::from_rows(Vec::new(), queries.vertices().to_vec(), Vec::new())?
            } else {
                let (worlds, t) = timed(|| match samples {
                    SampleSource::Draw(seed) => {
                        Ok(Arc::new(draw_samples(graph, config.sample_count, *seed)?))
                    }
                    SampleSource::Exhaustive => Ok(Arc::new(enumerate_worlds(graph)?)),
                    SampleSource::Shared(set) => Ok(Arc::clone(set)),
                })?;
                timings.sample_generation = t;
                let (m, t) = timed(|| {
                    build_distance_matrix(
                        graph,
                        candidates.vertices(),
                        queries.vertices(),
                        DistanceSemantics::Majority {
                            samples: &worlds,
                            config: *config,
                        },
                    )
                })?;
                timings.distance_computation = t;
                m
            }
        }
    };

    let (skyline, t) = timed(|| Ok(bnl_skyline(&matrix)))?;
    timings.skyline_computation = t;
    timings.total = start.elapsed();
    Ok(QueryOutcome {
        candidates,
        matrix,
        skyline,
        timings,
    })
}

// ---------------------------------------------------------------------------
// Plans
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub graph: PathBuf,
    /// Label for the `dataset` column; defaults to the graph file stem.
    pub dataset: Option<String>,
    pub default_weight: Option<f64>,
    pub default_prob: Option<f64>,
    /// Redraw weights in [10, 100] and probabilities in (0, 1] from the plan seed.
    pub synthesize: bool,
    pub seed: u64,
    pub semantics: Vec<SemanticsKind>,
    pub strategies: Vec<StrategyKind>,
    pub query_sizes: Vec<usize>,
    pub repeats: usize,
    pub majority: MajorityDistanceConfig,
    pub expected: ExpectedDistanceConfig,
    pub prune: PruneConfig<f64>,
    /// Draw one sample set for the whole plan instead of one per run.
    pub share_samples: bool,
    pub max_attempts: usize,
    pub out: Option<PathBuf>,
}

impl ExperimentPlan {
    pub fn new(graph: impl Into<PathBuf>) -> Self {
        ExperimentPlan {
            graph: graph.into(),
            dataset: None,
            default_weight: None,
            default_prob: None,
            synthesize: false,
            seed: 0,
            semantics: vec![SemanticsKind::Majority, SemanticsKind::Expected],
            strategies: vec![StrategyKind::Rand],
            query_sizes: vec![2, 3, 5, 8, 10, 15, 20],
            repeats: 10,
            majority: MajorityDistanceConfig::default(),
            expected: ExpectedDistanceConfig::default(),
            prune: PruneConfig::default(),
            share_samples: false,
            max_attempts: 100,
            out: None,
        }
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new(""));
        Self::parse(&text, base)
    }

    /// Parses plan text; relative `graph` and `out` paths resolve against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("plan line {}: expected `key = value`", i + 1))
            })?;
            pairs.push((key.trim().to_string(), value.trim().to_string()));
        }
        Self::from_pairs(pairs, base)
    }

    /// Builds a plan from `(key, value)` pairs named like the CLI flags.
    pub fn from_pairs<I, K, V>(pairs: I, base: &Path) -> Result<Self>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
            value
                .parse()
                .map_err(|_| Error::Config(format!("invalid value {value:?} for {key}")))
        }
        fn list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
            value
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| num(key, s))
                .collect()
        }
        fn flag(key: &str, value: &str) -> Result<bool> {
            match value.to_ascii_lowercase().as_str() {
                "true" | "yes" | "1" | "on" => Ok(true),
                "false" | "no" | "0" | "off" => Ok(false),
                _ => Err(Error::Config(format!(
                    "invalid boolean {value:?} for {key}"
                ))),
            }
        }
        let resolve = |p: &str| {
            let p = PathBuf::from(p);
            if p.is_absolute() {
                p
            } else {
                base.join(p)
            }
        };

        let mut plan = ExperimentPlan::new(PathBuf::new());
        let mut graph = None;
        let mut strategy_names = vec!["rand".to_string()];
        let mut degree_threshold: Option<usize> = None;
        let mut clustering_threshold = 0.0f64;
        for (key, value) in pairs {
            let (key, value) = (key.as_ref(), value.as_ref());
            match key {
                "graph" => graph = Some(resolve(value)),
                "dataset" => plan.dataset = Some(value.to_string()),
                "default-weight" => plan.default_weight = Some(num(key, value)?),
                "default-prob" => plan.default_prob = Some(num(key, value)?),
                "synthesize" => plan.synthesize = flag(key, value)?,
                "seed" => plan.seed = num(key, value)?,
                "distance" => plan.semantics = list(key, value)?,
                "strategy" => {
                    strategy_names = value
                        .split(',')
                        .map(|s| s.trim().to_ascii_lowercase())
                        .filter(|s| !s.is_empty())
                        .collect()
                }
                "degree-threshold" => degree_threshold = Some(num(key, value)?),
                "clustering-threshold" => clustering_threshold = num(key, value)?,
                "query-size" | "query-sizes" => plan.query_sizes = list(key, value)?,
                "repeats" => plan.repeats = num(key, value)?,
                "samples" => plan.majority.sample_count = num(key, value)?,
                "weighting" => {
                    plan.majority.weighting = match value.to_ascii_lowercase().as_str() {
                        "paper" | "paper-weighted" | "paper_weighted" => Weighting::PaperWeighted,
                        "frequency" => Weighting::Frequency,
                        _ => return Err(Error::Config(format!("unknown weighting {value:?}"))),
                    }
                }
                "max-hops" => plan.expected.max_hops = num(key, value)?,
                "formula" => {
                    plan.expected.formula = match value.to_ascii_lowercase().as_str() {
                        "definition" => ExpectedFormula::Definition,
                        "literal" | "algorithm-literal" | "algorithm_literal" => {
                            ExpectedFormula::AlgorithmLiteral
                        }
                        _ => return Err(Error::Config(format!("unknown formula {value:?}"))),
                    }
                }
                "threshold" => plan.prune.distance_threshold = num(key, value)?,
                "no-distance-prune" => plan.prune.skip_distance_pruning = flag(key, value)?,
                "share-samples" => plan.share_samples = flag(key, value)?,
                "max-attempts" => plan.max_attempts = num(key, value)?,
                "out" => plan.out = Some(resolve(value)),
                other => return Err(Error::Config(format!("unknown plan key {other:?}"))),
            }
        }
        plan.graph = graph.ok_or_else(|| Error::Config("plan needs a `graph` entry".into()))?;
        plan.strategies = strategy_names
            .iter()
            .map(|name| match name.as_str() {
                "rand" => Ok(StrategyKind::Rand),
                "hdeg" => degree_threshold
                    .map(|threshold| StrategyKind::HighDegree { threshold })
                    .ok_or_else(|| Error::Config("strategy hdeg needs degree-threshold".into())),
                "hclus" => Ok(StrategyKind::HighClustering {
                    threshold: clustering_threshold,
                }),
                other => Err(Error::Config(format!("unknown strategy {other:?}"))),
            })
            .collect::<Result<_>>()?;
        plan.validate()?;
        Ok(plan)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::Config(m.to_string()));
        if self.query_sizes.is_empty() || self.query_sizes.contains(&0) {
            return fail("query sizes must be a non-empty list of positive integers");
        }
        if self.repeats == 0 {
            return fail("repeats must be at least 1");
        }
        if self.semantics.is_empty() {
            return fail("at least one distance is required");
        }
        if self.strategies.is_empty() {
            return fail("at least one strategy is required");
        }
        if self.majority.sample_count == 0 {
            return fail("samples must be at least 1");
        }
        if self.expected.max_hops == 0 {
            return fail("max-hops must be at least 1");
        }
        self.prune.validate()
    }

    pub fn dataset_name(&self) -> String {
        self.dataset.clone().unwrap_or_else(|| {
            self.graph
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".into())
        })
    }

    /// Loads the graph, synthesizing attributes when requested.
    pub fn load_graph<S: Scalar>(&self) -> Result<UncertainGraph<S>> {
        let fallback = if self.synthesize { Some(1.0) } else { None };
        let defaults = EdgeDefaults {
            weight: self.default_weight.or(fallback).map(S::of),
            prob: self.default_prob.or(fallback).map(S::of),
        };
        let graph = UncertainGraph::load_edge_list(&self.graph, defaults)?;
        if self.synthesize {
            graph.synthesize_attributes(
                RandomSeed(self.seed).derive(&[SEED_SYNTHESIS]),
                AttributeRanges::default(),
            )
        } else {
            Ok(graph)
        }
    }
}

const SEED_SYNTHESIS: u64 = 0;
const SEED_SELECTION: u64 = 1;
const SEED_SAMPLES: u64 = 2;
const SEED_SHARED_SAMPLES: u64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunStatus {
    Ok,
    /// Completed using the plan-wide sample set.
    OkSharedSamples,
    Skipped(String),
}

impl fmt::Display for RunStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunStatus::Ok => f.write_str("ok"),
            RunStatus::OkSharedSamples => f.write_str("ok (shared samples)"),
            RunStatus::Skipped(reason) => write!(f, "skipped: {reason}"),
        }
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub dataset: String,
    pub strategy: String,
    pub query_size: usize,
    pub repeat: usize,
    pub semantics: SemanticsKind,
    pub candidate_size: Option<usize>,
    pub skyline_size: Option<usize>,
    pub timings: StepTimings,
    pub status: RunStatus,
}

impl RunRecord {
    pub fn is_skipped(&self) -> bool {
        matches!(self.status, RunStatus::Skipped(_))
    }

    fn csv_fields(&self) -> Vec<String> {
        let t = |d: Duration| format!("{:.6}", d.as_secs_f64());
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.dataset.clone(),
            self.strategy.clone(),
            self.query_size.to_string(),
            self.repeat.to_string(),
            self.semantics.to_string(),
            opt(self.candidate_size),
            opt(self.skyline_size),
            t(self.timings.sample_generation),
            t(self.timings.bfs_pruning),
            t(self.timings.distance_pruning),
            t(self.timings.distance_computation),
            t(self.timings.skyline_computation),
            t(self.timings.total),
            self.status.to_string(),
        ]
    }
}

/// Appends records to a CSV sink, flushing after each one.
pub struct RecordWriter<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(sink: W) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(sink);
        inner.write_record(CSV_HEADER)?;
        inner.flush().map_err(|e| Error::io("csv output", e))?;
        Ok(RecordWriter { inner })
    }

    pub fn write(&mut self, record: &RunRecord) -> Result<()> {
        self.inner.write_record(record.csv_fields())?;
        self.inner.flush().map_err(|e| Error::io("csv output", e))
    }
}

/// Sweeps strategy x query size x repeat x distance, writing each record as it
/// completes. Selection failures become skipped rows; other errors abort.
pub fn run_plan<S: Scalar>(plan: &ExperimentPlan) -> Result<Vec<RunRecord>> {
    let sink: Box<dyn Write> = match &plan.out {
        Some(path) => Box::new(File::create(path).map_err(|e| Error::io(path, e))?),
        None => Box::new(io::stdout()),
    };
    run_plan_to::<S, _>(plan, sink)
}

/// [`run_plan`] with an explicit CSV sink (the plan's `out` is ignored).
pub fn run_plan_to<S: Scalar, W: Write>(plan: &ExperimentPlan, sink: W) -> Result<Vec<RunRecord>> {
    plan.validate()?;
    let graph: UncertainGraph<S> = plan.load_graph()?;
    let prune = PruneConfig {
        distance_threshold: S::of(plan.prune.distance_threshold),
        skip_distance_pruning: plan.prune.skip_distance_pruning,
    };
    let root = RandomSeed(plan.seed);
    let shared = if plan.share_samples && plan.semantics.contains(&SemanticsKind::Majority) {
        Some(Arc::new(draw_samples(
            &graph,
            plan.majority.sample_count,
            root.derive(&[SEED_SHARED_SAMPLES]),
        )?))
    } else {
        None
    };
    let dataset = plan.dataset_name();
    let mut writer = RecordWriter::new(sink)?;
    let mut records = Vec::new();

    for (si, &kind) in plan.strategies.iter().enumerate() {
        for &k in &plan.query_sizes {
            for repeat in 0..plan.repeats {
                let tag = [si as u64, k as u64, repeat as u64];
                let mut cfg = StrategyConfig::new(
                    kind,
                    k,
                    root.derive(&[SEED_SELECTION, tag[0], tag[1], tag[2]]),
                );
                cfg.max_attempts = plan.max_attempts;
                let selection = match select_queries(&graph, &cfg) {
                    Ok(q) => Ok(q),
                    Err(e @ (Error::SelectionInfeasible(_) | Error::Strategy(_))) => {
                        Err(e.to_string())
                    }
                    Err(e) => return Err(e),
                };
                for &sem in &plan.semantics {
                    let mut record = RunRecord {
                        dataset: dataset.clone(),
                        strategy: kind.label().to_string(),
                        query_size: k,
                        repeat,
                        semantics: sem,
                        candidate_size: None,
                        skyline_size: None,
                        timings: StepTimings::default(),
                        status: RunStatus::Ok,
                    };
                    match &selection {
                        Err(reason) => record.status = RunStatus::Skipped(reason.clone()),
                        Ok(queries) => {
                            let semantics = match sem {
                                SemanticsKind::Expected => QuerySemantics::Expected(plan.expected),
                                SemanticsKind::Majority => QuerySemantics::Majority {
                                    config: plan.majority,
                                    samples: match &shared {
                                        Some(set) => SampleSource::Shared(Arc::clone(set)),
                                        None => SampleSource::Draw(root.derive(&[
                                            SEED_SAMPLES,
                                            tag[0],
                                            tag[1],
                                            tag[2],
                                        ])),
                                    },
                                },
                            };
                            let outcome = run_query(&graph, queries, &semantics, &prune)?;
                            record.candidate_size = Some(outcome.candidates.len());
                            record.skyline_size = Some(outcome.skyline.len());
                            record.timings = outcome.timings;
                            if shared.is_some() && sem == SemanticsKind::Majority {
                                record.status = RunStatus::OkSharedSamples;
                            }
                        }
                    }
                    writer.write(&record)?;
                    records.push(record);
                }
            }
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn tree() -> UncertainGraph<f64> {
        UncertainGraph::from_edges(
            6,
            [
                (0, 1, 10.0, 1.0),
                (1, 2, 20.0, 1.0),
                (1, 3, 15.0, 1.0),
                (3, 4, 30.0, 1.0),
                (3, 5, 25.0, 1.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn empty_candidates_give_empty_skyline() {
        let g = tree();
        let qs = QuerySet::new(&g, vec![VertexId(0), VertexId(4)]).unwrap();
        for sem in [
            QuerySemantics::Expected(Default::default()),
            QuerySemantics::Majority {
                config: Default::default(),
                samples: SampleSource::Draw(RandomSeed(1)),
            },
        ] {
            let out = run_query(&g, &qs, &sem, &PruneConfig::with_threshold(5.0)).unwrap();
            assert!(out.candidates.is_empty());
            assert!(out.skyline.is_empty());
            assert_eq!(out.timings.sample_generation, Duration::ZERO);
        }
    }

    #[test]
    fn expected_runs_record_no_sampling_time() {
        let g = tree();
        let qs = QuerySet::new(&g, vec![VertexId(0), VertexId(4)]).unwrap();
        let out = run_query(
            &g,
            &qs,
            &QuerySemantics::Expected(Default::default()),
            &PruneConfig::default(),
        )
        .unwrap();
        assert_eq!(out.timings.sample_generation, Duration::ZERO);
        assert_eq!(out.candidates.len(), 4);
        assert!(out.skyline.len() <= out.candidates.len());
    }

    #[test]
    fn plan_parsing() {
        let text = "# comment\ngraph = g.txt\ndistance = expected\nstrategy = rand, hdeg\n\
                    degree-threshold = 3\nquery-size = 2,5\nrepeats = 4\nthreshold = inf\nout = o.csv\n";
        let plan = ExperimentPlan::parse(text, Path::new("/data")).unwrap();
        assert_eq!(plan.graph, PathBuf::from("/data/g.txt"));
        assert_eq!(plan.out, Some(PathBuf::from("/data/o.csv")));
        assert_eq!(plan.semantics, vec![SemanticsKind::Expected]);
        assert_eq!(
            plan.strategies,
            vec![
                StrategyKind::Rand,
                StrategyKind::HighDegree { threshold: 3 }
            ]
        );
        assert_eq!(plan.query_sizes, vec![2, 5]);
        assert_eq!(plan.repeats, 4);
        assert!(plan.prune.distance_threshold.is_infinite());
        assert_eq!(plan.dataset_name(), "g");
    }

    #[test]
    fn plan_errors() {
        let base = Path::new(".");
        assert!(ExperimentPlan::parse("distance = expected", base).is_err());
        assert!(ExperimentPlan::parse("graph = g\nstrategy = hdeg", base).is_err());
        assert!(ExperimentPlan::parse("graph = g\nbogus = 1", base).is_err());
        assert!(ExperimentPlan::parse("graph = g\nrepeats = 0", base).is_err());
        assert!(ExperimentPlan::parse("graph = g\nquery-size = 0", base).is_err());
        assert!(ExperimentPlan::parse("graph g", base).is_err());
        assert!(ExperimentPlan::parse("graph = g\nthreshold = -1", base).is_err());
    }

    #[test]
    fn status_strings() {
        assert_eq!(RunStatus::Ok.to_string(), "ok");
        assert_eq!(RunStatus::Skipped("x".into()).to_string(), "skipped: x");
    }
}
