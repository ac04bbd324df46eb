//! `uskyline`: run skyline query experiments on uncertain graphs.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 data error
//! (unreadable or malformed input), 3 every run in the plan was skipped.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use uskyline::graph::{EdgeDefaults, UncertainGraph};
use uskyline::harness::{run_plan, ExperimentPlan};
use uskyline::Error;

#[derive(Parser)]
#[command(
    name = "uskyline",
    version,
    about = "Dynamic skyline queries over uncertain graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment sweep described by flags.
    Run(Box<RunArgs>),
    /// Run the sweep described by a plan file.
    Sweep {
        #[arg(long)]
        plan: PathBuf,
    },
    /// Print size, density and degree statistics of an edge list.
    Stats {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        defaults: DefaultArgs,
    },
}

#[derive(Args)]
struct DefaultArgs {
    /// Weight for edge-list lines without a weight column.
    #[arg(long)]
    default_weight: Option<f64>,
    /// Probability for edge-list lines without a probability column.
    #[arg(long)]
    default_prob: Option<f64>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Label for the dataset column (default: graph file stem).
    #[arg(long)]
    dataset: Option<String>,
    /// Comma-separated: majority, expected.
    #[arg(long)]
    distance: Option<String>,
    /// Comma-separated: rand, hdeg, hclus.
    #[arg(long)]
    strategy: Option<String>,
    /// Comma-separated query sizes.
    #[arg(long)]
    query_size: Option<String>,
    #[arg(long)]
    samples: Option<usize>,
    /// paper (each world adds its probability) or frequency (each adds 1/N).
    #[arg(long)]
    weighting: Option<String>,
    #[arg(long)]
    max_hops: Option<usize>,
    /// definition or literal.
    #[arg(long)]
    formula: Option<String>,
    /// Distance threshold for pruning; `inf` disables it.
    #[arg(long)]
    threshold: Option<f64>,
    #[arg(long)]
    no_distance_prune: bool,
    #[arg(long)]
    degree_threshold: Option<usize>,
    #[arg(long)]
    clustering_threshold: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    repeats: Option<usize>,
    /// Seeded random weights in [10, 100] and probabilities in (0, 1].
    #[arg(long)]
    synthesize: bool,
    /// Draw one sample set for the whole sweep.
    #[arg(long)]
    share_samples: bool,
    #[arg(long)]
    max_attempts: Option<usize>,
    #[command(flatten)]
    defaults: DefaultArgs,
    /// CSV output path (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn plan(&self) -> Result<ExperimentPlan, Error> {
        let mut pairs: Vec<(&str, String)> = vec![("graph", self.graph.display().to_string())];
        let mut put = |key, value: Option<String>| {
            if let Some(v) = value {
                pairs.push((key, v));
            }
        };
        let s = |x: &Option<String>| x.clone();
        put("dataset", s(&self.dataset));
        put("distance", s(&self.distance));
        put("strategy", s(&self.strategy));
        put("query-size", s(&self.query_size));
        put("samples", self.samples.map(|x| x.to_string()));
        put("weighting", s(&self.weighting));
        put("max-hops", self.max_hops.map(|x| x.to_string()));
        put("formula", s(&self.formula));
        put("threshold", self.threshold.map(|x| x.to_string()));
        put(
            "no-distance-prune",
            Some(self.no_distance_prune.to_string()),
        );
        put(
            "degree-threshold",
            self.degree_threshold.map(|x| x.to_string()),
        );
        put(
            "clustering-threshold",
            self.clustering_threshold.map(|x| x.to_string()),
        );
        put("seed", self.seed.map(|x| x.to_string()));
        put("repeats", self.repeats.map(|x| x.to_string()));
        put("synthesize", Some(self.synthesize.to_string()));
        put("share-samples", Some(self.share_samples.to_string()));
        put("max-attempts", self.max_attempts.map(|x| x.to_string()));
        put(
            "default-weight",
            self.defaults.default_weight.map(|x| x.to_string()),
        );
        put(
            "default-prob",
            self.defaults.default_prob.map(|x| x.to_string()),
        );
        put("out", self.out.as_ref().map(|p| p.display().to_string()));
        // paths given on the command line are relative to the working directory
        ExperimentPlan::from_pairs(pairs, Path::new(""))
    }
}

fn sweep(plan: &ExperimentPlan) -> Result<ExitCode, Error> {
    let records = run_plan::<f64>(plan)?;
    let skipped = records.iter().filter(|r| r.is_skipped()).count();
    eprintln!("{} runs, {} skipped", records.len(), skipped);
    if !records.is_empty() && skipped == records.len() {
        eprintln!("error: every run was skipped");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(graph: &Path, defaults: &DefaultArgs) -> Result<ExitCode, Error> {
    // statistics only need topology, so missing columns default to 1
    let defaults = EdgeDefaults::new(
        defaults.default_weight.unwrap_or(1.0),
        defaults.default_prob.unwrap_or(1.0),
    );
    let g = UncertainGraph::<f64>::load_edge_list(graph, defaults)?;
    println!("{}", g.stats());
    if g.duplicates_collapsed() > 0 {
        println!("duplicates  {}", g.duplicates_collapsed());
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Run(args) => args.plan().and_then(|plan| sweep(&plan)),
        Command::Sweep { plan } => ExperimentPlan::from_file(plan).and_then(|plan| sweep(&plan)),
        Command::Stats { graph, defaults } => stats(graph, defaults),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_data_error() { 2 } else { 1 })
        }
    }
}
