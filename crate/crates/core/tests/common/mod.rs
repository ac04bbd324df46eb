//! Random instances and independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uskyline::graph::UncertainGraph;
use uskyline::VertexId;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy)]
pub enum Weights {
    /// Integers in [lo, hi]; path sums are exact, so independent oracles agree bitwise.
    Integer(u32, u32),
    Continuous(f64, f64),
}

#[derive(Debug, Clone, Copy)]
pub enum Probs {
    Certain,
    Uniform,
    /// Each edge takes a random value from the list.
    Choice(&'static [f64]),
}

/// Random simple graph on `n` vertices with `m` distinct edges (capped at n(n-1)/2).
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    w: Weights,
    p: Probs,
) -> UncertainGraph<f64> {
    let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| {
            let weight = match w {
                Weights::Integer(lo, hi) => rng.gen_range(lo..=hi) as f64,
                Weights::Continuous(lo, hi) => rng.gen_range(lo..=hi),
            };
            let prob = match p {
                Probs::Certain => 1.0,
                Probs::Uniform => 1.0 - rng.gen::<f64>(),
                Probs::Choice(list) => *list.choose(rng).unwrap(),
            };
            (a, b, weight, prob)
        })
        .collect();
    UncertainGraph::from_edges(n, edges).unwrap()
}

/// Uniform random labelled tree (random parent for each vertex after the first).
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize, w: Weights, p: Probs) -> UncertainGraph<f64> {
    let edges: Vec<_> = (1..n)
        .map(|v| {
            let parent = rng.gen_range(0..v);
            let weight = match w {
                Weights::Integer(lo, hi) => rng.gen_range(lo..=hi) as f64,
                Weights::Continuous(lo, hi) => rng.gen_range(lo..=hi),
            };
            let prob = match p {
                Probs::Certain => 1.0,
                Probs::Uniform => 1.0 - rng.gen::<f64>(),
                Probs::Choice(list) => *list.choose(rng).unwrap(),
            };
            (parent, v, weight, prob)
        })
        .collect();
    UncertainGraph::from_edges(n, edges).unwrap()
}

pub fn random_queries(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<VertexId> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.into_iter().take(k).map(VertexId).collect()
}

/// All-pairs shortest paths by matrix relaxation (Floyd-Warshall) over `present` edges.
pub fn floyd_warshall_with(
    g: &UncertainGraph<f64>,
    present: impl Fn(usize) -> bool,
) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut d = vec![vec![f64::INFINITY; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    for (i, e) in g.edges().iter().enumerate() {
        if present(i) {
            let (a, b) = (e.u.index(), e.v.index());
            d[a][b] = d[a][b].min(e.weight);
            d[b][a] = d[b][a].min(e.weight);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn floyd_warshall(g: &UncertainGraph<f64>) -> Vec<Vec<f64>> {
    floyd_warshall_with(g, |_| true)
}

/// Simple u-v paths of at most `max_hops` edges found by checking every ordered
/// sequence of distinct intermediate vertices. Returns (length, product of probs)
/// per path, keyed by vertex sequence.
pub fn brute_force_paths(
    g: &UncertainGraph<f64>,
    u: usize,
    v: usize,
    max_hops: usize,
) -> Vec<(Vec<usize>, f64, f64)> {
    let lookup: HashMap<(usize, usize), (f64, f64)> = g
        .edges()
        .iter()
        .flat_map(|e| {
            let (a, b) = (e.u.index(), e.v.index());
            [((a, b), (e.weight, e.prob)), ((b, a), (e.weight, e.prob))]
        })
        .collect();
    let others: Vec<usize> = (0..g.vertex_count())
        .filter(|&x| x != u && x != v)
        .collect();
    let mut out = Vec::new();
    for inner in 0..max_hops {
        for mid in others.iter().copied().permutations(inner) {
            let seq: Vec<usize> = std::iter::once(u)
                .chain(mid)
                .chain(std::iter::once(v))
                .collect();
            let mut len = 0.0;
            let mut prob = 1.0;
            let mut ok = true;
            for w in seq.windows(2) {
                match lookup.get(&(w[0], w[1])) {
                    Some(&(wt, p)) => {
                        len += wt;
                        prob *= p;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.push((seq, len, prob));
            }
        }
    }
    out
}

/// Expected distance straight from its definition over the brute-force path set.
pub fn brute_force_expected(g: &UncertainGraph<f64>, u: usize, v: usize, max_hops: usize) -> f64 {
    let paths = brute_force_paths(g, u, v, max_hops);
    if paths.is_empty() {
        return f64::INFINITY;
    }
    let total: f64 = paths.iter().map(|p| p.2).sum();
    paths
        .iter()
        .map(|(_, len, prob)| len * (prob / total))
        .sum()
}

/// Reachable-within-threshold filter over data vertices, from Floyd-Warshall.
pub fn brute_force_candidates(
    g: &UncertainGraph<f64>,
    queries: &[VertexId],
    threshold: f64,
) -> Vec<VertexId> {
    let d = floyd_warshall(g);
    let qs: BTreeSet<usize> = queries.iter().map(|q| q.index()).collect();
    (0..g.vertex_count())
        .filter(|v| !qs.contains(v))
        .filter(|&v| {
            qs.iter()
                .all(|&q| d[q][v].is_finite() && d[q][v] <= threshold)
        })
        .map(VertexId)
        .collect()
}

/// Skyline by all-pairs comparison written independently of the library.
pub fn brute_force_skyline(rows: &[(VertexId, Vec<f64>)]) -> BTreeSet<VertexId> {
    let dominated = |a: &[f64], b: &[f64]| {
        a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
    };
    rows.iter()
        .filter(|(_, r)| !rows.iter().any(|(_, s)| dominated(s, r)))
        .map(|(v, _)| *v)
        .collect()
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        return a == b;
    }
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}
