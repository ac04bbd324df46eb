//! Uncertain graph model, edge-list I/O and attribute synthesis.
//!
//! Vertices are stored under compact ids `0..n`. The original ids read from an
//! edge list are kept so that everything written back out uses them.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Compact vertex index in `0..vertex_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Position of an edge in [`UncertainGraph::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<S> {
    pub u: VertexId,
    pub v: VertexId,
    /// Length of the edge, strictly positive.
    pub weight: S,
    /// Existence probability in `(0, 1]`.
    pub prob: S,
}

impl<S> Edge<S> {
    /// The endpoint opposite to `from`.
    #[inline]
    pub fn other(&self, from: VertexId) -> VertexId {
        if self.u == from {
            self.v
        } else {
            self.u
        }
    }
}

/// Root of every random stream in the crate.
///
/// Equal seeds and equal inputs give bit-identical synthesis, sampling and
/// selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RandomSeed(pub u64);

impl RandomSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Independent ChaCha stream `stream` under this seed.
    pub fn stream(self, stream: u64) -> ChaCha8Rng {
        let mut rng = self.rng();
        rng.set_stream(stream);
        rng
    }

    /// Child seed for a labelled sub-task, e.g. one repeat of an experiment.
    pub fn derive(self, parts: &[u64]) -> RandomSeed {
        let mut h = self.0 ^ 0x9e37_79b9_7f4a_7c15;
        for &p in parts {
            h = splitmix(h ^ splitmix(p));
        }
        RandomSeed(h)
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Simple, finite, undirected graph whose edges carry a length and an
/// independent existence probability. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertainGraph<S> {
    edges: Vec<Edge<S>>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    original_ids: Vec<u64>,
    id_lookup: HashMap<u64, VertexId>,
    pair_lookup: HashMap<(usize, usize), EdgeId>,
    duplicates_collapsed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub avg_degree: f64,
    pub max_degree: usize,
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n           {}", self.n)?;
        writeln!(f, "m           {}", self.m)?;
        writeln!(f, "density     {:.3e}", self.density)?;
        writeln!(f, "avg_degree  {:.2}", self.avg_degree)?;
        write!(f, "max_degree  {}", self.max_degree)
    }
}

/// Values used for the weight and probability columns when an edge-list line
/// omits them.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EdgeDefaults<S> {
    pub weight: Option<S>,
    pub prob: Option<S>,
}

impl<S: Scalar> EdgeDefaults<S> {
    pub fn new(weight: S, prob: S) -> Self {
        EdgeDefaults {
            weight: Some(weight),
            prob: Some(prob),
        }
    }
}

/// Sampling intervals for [`UncertainGraph::synthesize_attributes`].
///
/// Probabilities are drawn from the half-open `(low, high]`, weights from the
/// closed `[low, high]`, both continuous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttributeRanges {
    pub prob: (f64, f64),
    pub weight: (f64, f64),
}

impl Default for AttributeRanges {
    fn default() -> Self {
        AttributeRanges {
            prob: (0.0, 1.0),
            weight: (10.0, 100.0),
        }
    }
}

impl AttributeRanges {
    fn validate(&self) -> Result<()> {
        let (pl, ph) = self.prob;
        let (wl, wh) = self.weight;
        if !(pl >= 0.0 && pl < ph && ph <= 1.0) {
            return Err(Error::Config(format!(
                "probability range ({pl}, {ph}] must satisfy 0 <= low < high <= 1"
            )));
        }
        if !(wl > 0.0 && wl < wh && wh.is_finite()) {
            return Err(Error::Config(format!(
                "weight range [{wl}, {wh}] must satisfy 0 < low < high < inf"
            )));
        }
        Ok(())
    }
}

fn check_attributes<S: Scalar>(weight: S, prob: S) -> std::result::Result<(), String> {
    if !(weight > S::zero() && weight.is_finite()) {
        return Err(format!("weight {weight} is not a positive finite number"));
    }
    if !(prob > S::zero() && prob <= S::one()) {
        return Err(format!("probability {prob} is outside (0, 1]"));
    }
    Ok(())
}

impl<S: Scalar> UncertainGraph<S> {
    /// Builds a graph on vertices `0..vertex_count` (used verbatim as original
    /// ids). Duplicate undirected edges keep their first occurrence.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, S, S)>,
    {
        let mut graph = Self::with_original_ids((0..vertex_count as u64).collect());
        for (u, v, weight, prob) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop on vertex {u}")));
            }
            check_attributes(weight, prob)
                .map_err(|m| Error::Validation(format!("edge ({u}, {v}): {m}")))?;
            graph.push_edge(VertexId(u), VertexId(v), weight, prob);
        }
        Ok(graph)
    }

    fn with_original_ids(original_ids: Vec<u64>) -> Self {
        let id_lookup = original_ids
            .iter()
            .enumerate()
            .map(|(i, &o)| (o, VertexId(i)))
            .collect();
        UncertainGraph {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); original_ids.len()],
            original_ids,
            id_lookup,
            pair_lookup: HashMap::new(),
            duplicates_collapsed: 0,
        }
    }

    fn intern(&mut self, original: u64) -> VertexId {
        if let Some(&v) = self.id_lookup.get(&original) {
            return v;
        }
        let v = VertexId(self.original_ids.len());
        self.original_ids.push(original);
        self.adjacency.push(Vec::new());
        self.id_lookup.insert(original, v);
        v
    }

    /// Returns false when the pair already had an edge.
    fn push_edge(&mut self, u: VertexId, v: VertexId, weight: S, prob: S) -> bool {
        let key = (u.0.min(v.0), u.0.max(v.0));
        if self.pair_lookup.contains_key(&key) {
            self.duplicates_collapsed += 1;
            return false;
        }
        let id = EdgeId(self.edges.len());
        self.pair_lookup.insert(key, id);
        self.edges.push(Edge { u, v, weight, prob });
        self.adjacency[u.0].push((v, id));
        self.adjacency[v.0].push((u, id));
        true
    }

    /// Reads a whitespace-separated edge list: `u v [weight] [prob]` per line,
    /// `#` comments. Missing columns come from `defaults`.
    pub fn load_edge_list(path: impl AsRef<Path>, defaults: EdgeDefaults<S>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse_edge_list(&text, path, defaults)
    }

    /// Parses edge-list text; `source` only labels error messages.
    pub fn parse_edge_list(
        text: &str,
        source: impl AsRef<Path>,
        defaults: EdgeDefaults<S>,
    ) -> Result<Self> {
        let source = source.as_ref();
        let parse_err = |line: usize, message: String| Error::Parse {
            path: source.to_path_buf(),
            line,
            message,
        };
        let mut graph = Self::with_original_ids(Vec::new());
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if !(2..=4).contains(&fields.len()) {
                return Err(parse_err(
                    line_no,
                    format!("expected 2 to 4 fields, found {}", fields.len()),
                ));
            }
            let id = |s: &str| {
                s.parse::<u64>()
                    .map_err(|_| parse_err(line_no, format!("invalid vertex id {s:?}")))
            };
            let num = |s: &str, what: &str| {
                s.parse::<S>()
                    .map_err(|_| parse_err(line_no, format!("invalid {what} {s:?}")))
            };
            let (u, v) = (id(fields[0])?, id(fields[1])?);
            if u == v {
                return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
            }
            let weight = match fields.get(2) {
                Some(s) => num(s, "weight")?,
                None => defaults.weight.ok_or_else(|| {
                    Error::Config(format!(
                        "{}: line {line_no} has no weight column and no default weight was given",
                        source.display()
                    ))
                })?,
            };
            let prob = match fields.get(3) {
                Some(s) => num(s, "probability")?,
                None => defaults.prob.ok_or_else(|| {
                    Error::Config(format!(
                        "{}: line {line_no} has no probability column and no default probability was given",
                        source.display()
                    ))
                })?,
            };
            check_attributes(weight, prob).map_err(|m| {
                Error::Validation(format!("{}: line {line_no}: {m}", source.display()))
            })?;
            let (u, v) = (graph.intern(u), graph.intern(v));
            graph.push_edge(u, v, weight, prob);
        }
        Ok(graph)
    }

    /// Writes the graph as 4-column edge-list lines using original ids.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# u v weight prob")?;
        for e in &self.edges {
            writeln!(
                out,
                "{} {} {} {}",
                self.original_ids[e.u.0], self.original_ids[e.v.0], e.weight, e.prob
            )?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ascii")
    }

    /// Copy of the graph with every weight and probability redrawn uniformly from
    /// `ranges`. Depends only on the edge order, `seed` and `ranges`.
    pub fn synthesize_attributes(&self, seed: RandomSeed, ranges: AttributeRanges) -> Result<Self> {
        ranges.validate()?;
        let mut out = self.clone();
        if out.edges.is_empty() {
            return Ok(out);
        }
        let mut rng = seed.rng();
        let weights = Uniform::new_inclusive(ranges.weight.0, ranges.weight.1);
        let (p_low, p_high) = ranges.prob;
        for e in &mut out.edges {
            let w = weights.sample(&mut rng);
            // u in [0, 1) maps to (low, high]
            let u: f64 = rng.gen();
            let p = p_high - u * (p_high - p_low);
            e.weight = S::of(w);
            e.prob = S::of(p);
            // f32 rounding can land exactly on the open end
            if e.prob <= S::of(p_low) {
                e.prob = S::of(p_high);
            }
        }
        Ok(out)
    }

    /// Copy with every probability replaced, e.g. to collapse the graph to a
    /// single certain world.
    pub fn with_uniform_probability(&self, prob: S) -> Result<Self> {
        check_attributes(S::one(), prob).map_err(Error::Validation)?;
        let mut out = self.clone();
        for e in &mut out.edges {
            e.prob = prob;
        }
        Ok(out)
    }

    pub fn stats(&self) -> GraphStats {
        let n = self.vertex_count();
        let m = self.edge_count();
        let density = if n < 2 {
            0.0
        } else {
            2.0 * m as f64 / (n as f64 * (n as f64 - 1.0))
        };
        let avg_degree = if n == 0 {
            0.0
        } else {
            2.0 * m as f64 / n as f64
        };
        GraphStats {
            n,
            m,
            density,
            avg_degree,
            max_degree: self.adjacency.iter().map(Vec::len).max().unwrap_or(0),
        }
    }

    /// Vertices at hop distance 1 or 2 from `v`, excluding `v`.
    pub fn two_hop_neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        let mut out = BTreeSet::new();
        for &(a, _) in &self.adjacency[v.0] {
            out.insert(a);
            for &(b, _) in &self.adjacency[a.0] {
                out.insert(b);
            }
        }
        out.remove(&v);
        Ok(out)
    }

    /// Unweighted BFS over all edges; `true` for every vertex reachable from `source`.
    pub fn reachable_from(&self, source: VertexId) -> Result<Vec<bool>> {
        self.check_vertex(source)?;
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([source]);
        seen[source.0] = true;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &self.adjacency[x.0] {
                if !seen[y.0] {
                    seen[y.0] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge<S>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge<S> {
        &self.edges[id.0]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.pair_lookup.get(&(u.0.min(v.0), u.0.max(v.0))).copied()
    }

    /// `(neighbor, edge)` pairs incident to `v`, in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v.0]
    }

    pub fn vertex_by_original(&self, original: u64) -> Option<VertexId> {
        self.id_lookup.get(&original).copied()
    }

    /// Number of input lines dropped because their vertex pair already had an edge.
    pub fn duplicates_collapsed(&self) -> usize {
        self.duplicates_collapsed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn defaults() -> EdgeDefaults<f64> {
        EdgeDefaults::new(1.0, 1.0)
    }

    fn path(n: usize) -> UncertainGraph<f64> {
        UncertainGraph::from_edges(n, (1..n).map(|i| (i - 1, i, 1.0, 1.0))).unwrap()
    }

    #[test]
    fn minimal_path_file() {
        let g = UncertainGraph::parse_edge_list("0 1\n1 2", "t", defaults()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
    }

    #[test]
    fn self_loop_is_a_parse_error() {
        let err =
            UncertainGraph::<f64>::parse_edge_list("0 1\n0 0 5 0.5", "t", defaults()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn malformed_lines() {
        for bad in ["0", "0 1 2 0.5 9", "a 1", "0 1 x"] {
            let err = UncertainGraph::<f64>::parse_edge_list(bad, "t", defaults()).unwrap_err();
            assert!(matches!(err, Error::Parse { line: 1, .. }), "{bad}: {err}");
        }
    }

    #[test]
    fn invalid_attributes_are_validation_errors() {
        for bad in ["0 1 0 0.5", "0 1 -3 0.5", "0 1 5 0", "0 1 5 1.5"] {
            let err = UncertainGraph::<f64>::parse_edge_list(bad, "t", defaults()).unwrap_err();
            assert!(matches!(err, Error::Validation(_)), "{bad}: {err}");
        }
    }

    #[test]
    fn missing_columns_need_defaults() {
        let none = EdgeDefaults::<f64>::default();
        let err = UncertainGraph::parse_edge_list("0 1", "t", none).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
        let only_weight = EdgeDefaults {
            weight: None,
            prob: Some(0.5),
        };
        assert!(UncertainGraph::parse_edge_list("0 1 3", "t", only_weight).is_ok());
        assert!(UncertainGraph::parse_edge_list("0 1", "t", only_weight).is_err());
    }

    #[test]
    fn comments_duplicates_and_compaction() {
        let text = "# header\n10 20 5 0.5\n\n20 10 7 0.9\n20 30 1 1\n";
        let g = UncertainGraph::<f64>::parse_edge_list(text, "t", defaults()).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.duplicates_collapsed(), 1);
        let a = g.vertex_by_original(10).unwrap();
        let b = g.vertex_by_original(20).unwrap();
        assert_eq!(a, VertexId(0));
        assert_eq!(g.original_id(VertexId(2)), 30);
        // first occurrence wins
        assert_eq!(g.edge(g.edge_between(a, b).unwrap()).weight, 5.0);
    }

    #[test]
    fn loads_f32_graphs() {
        let g = UncertainGraph::<f32>::parse_edge_list("0 1 2.5 0.25", "t", Default::default())
            .unwrap();
        assert_eq!(g.edges()[0].prob, 0.25f32);
    }

    #[test]
    fn stats_small_graphs() {
        let tri =
            UncertainGraph::from_edges(3, [(0, 1, 1.0, 1.0), (1, 2, 1.0, 1.0), (0, 2, 1.0, 1.0)])
                .unwrap();
        let s = tri.stats();
        assert_eq!(s.density, 1.0);
        assert_eq!(s.avg_degree, 2.0);
        assert_eq!(s.max_degree, 2);

        let s = path(3).stats();
        assert!((s.avg_degree - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.max_degree, 2);
    }

    #[test]
    fn two_hop_examples() {
        let g = path(4);
        let got: Vec<_> = g
            .two_hop_neighbors(VertexId(0))
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, vec![VertexId(1), VertexId(2)]);

        let isolated = UncertainGraph::from_edges(3, [(0, 1, 1.0, 1.0)]).unwrap();
        assert!(isolated.two_hop_neighbors(VertexId(2)).unwrap().is_empty());

        let star = UncertainGraph::from_edges(5, (1..5).map(|i| (0, i, 1.0, 1.0))).unwrap();
        assert_eq!(star.two_hop_neighbors(VertexId(0)).unwrap().len(), 4);

        assert!(matches!(
            g.two_hop_neighbors(VertexId(9)),
            Err(Error::UnknownVertex(VertexId(9)))
        ));
    }

    #[test]
    fn synthesis_is_deterministic_and_in_range() {
        let g = path(200);
        let a = g
            .synthesize_attributes(RandomSeed(7), AttributeRanges::default())
            .unwrap();
        let b = g
            .synthesize_attributes(RandomSeed(7), AttributeRanges::default())
            .unwrap();
        let c = g
            .synthesize_attributes(RandomSeed(8), AttributeRanges::default())
            .unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        for e in a.edges() {
            assert!((10.0..=100.0).contains(&e.weight));
            assert!(e.prob > 0.0 && e.prob <= 1.0);
        }
    }

    #[test]
    fn synthesis_rejects_bad_ranges_and_skips_empty_graphs() {
        let g = path(3);
        let bad = AttributeRanges {
            prob: (0.5, 1.5),
            ..Default::default()
        };
        assert!(matches!(
            g.synthesize_attributes(RandomSeed(1), bad),
            Err(Error::Config(_))
        ));
        let empty = UncertainGraph::<f64>::from_edges(0, []).unwrap();
        let out = empty
            .synthesize_attributes(RandomSeed(1), AttributeRanges::default())
            .unwrap();
        assert_eq!(out, empty);
    }

    #[test]
    fn synthesized_weight_mean_is_near_the_interval_midpoint() {
        // 10^4 draws of U[10,100]: sd of the mean is 90/sqrt(12)/100 ~ 0.26
        let g = path(10_001);
        for seed in 0..5 {
            let s = g
                .synthesize_attributes(RandomSeed(seed), AttributeRanges::default())
                .unwrap();
            let mean = s.edges().iter().map(|e| e.weight).sum::<f64>() / s.edge_count() as f64;
            assert!((52.0..=58.0).contains(&mean), "seed {seed}: mean {mean}");
        }
    }

    #[test]
    fn derived_seeds_differ_per_part() {
        let root = RandomSeed(42);
        assert_eq!(root.derive(&[1, 2]), root.derive(&[1, 2]));
        assert_ne!(root.derive(&[1, 2]), root.derive(&[2, 1]));
        assert_ne!(root.derive(&[1]), RandomSeed(43).derive(&[1]));
    }
}
