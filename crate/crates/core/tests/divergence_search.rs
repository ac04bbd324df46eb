//! Seeded search for a small instance whose majority and expected skylines
//! differ. The instance it prints is frozen as `data/divergence.txt`.
//!
//! cargo test -p uskyline-core --test divergence_search -- --ignored --nocapture

mod common;

use common::{random_graph, random_queries, rng, Probs, Weights};
use uskyline::harness::{run_query, QuerySemantics, SampleSource};
use uskyline::pruning::QuerySet;
use uskyline::PruneConfig;

const PROBS: &[f64] = &[0.2, 0.5, 0.8, 0.95];

#[test]
#[ignore]
fn find_divergent_instance() {
    for seed in 0..10_000u64 {
        let mut r = rng(seed);
        let g = random_graph(
            &mut r,
            7,
            9,
            Weights::Integer(10, 100),
            Probs::Choice(PROBS),
        );
        let qs = QuerySet::new(&g, random_queries(&mut r, 7, 2)).unwrap();
        let majority = QuerySemantics::Majority {
            config: Default::default(),
            samples: SampleSource::Exhaustive,
        };
        let expected = QuerySemantics::Expected(Default::default());
        let prune = PruneConfig::default();
        let a = run_query(&g, &qs, &majority, &prune).unwrap();
        let b = run_query(&g, &qs, &expected, &prune).unwrap();
        let finite = |m: &uskyline::DistanceMatrix| m.rows().flatten().all(|d| d.is_finite());
        if !a.matrix.is_empty() && finite(&a.matrix) && a.skyline.vertices != b.skyline.vertices {
            println!("seed {seed}");
            println!(
                "# queries: {}",
                qs.vertices()
                    .iter()
                    .map(|q| q.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            print!("{}", g.to_edge_list_string());
            println!("majority {:?}\n{:?}", a.skyline.vertices, a.matrix);
            println!("expected {:?}\n{:?}", b.skyline.vertices, b.matrix);
            return;
        }
    }
    panic!("no divergent instance found");
}
