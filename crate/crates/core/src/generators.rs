//! Graph families with fixed labelings, seeded random in-class sampling, and
//! exhaustive enumeration of small labelled graphs.
//!
//! Labelings:
//! - path and cycle: consecutive indices `0-1-2-...`; the cycle closes with
//!   `(n-1)-0`.
//! - star on `n` vertices: centre `0`, leaves `1..n`.
//! - complete multipartite, complete buoy and cycle expansion: parts take
//!   consecutive index blocks in the order given.
//! - enumeration: bit `k` of the mask is the `k`-th vertex pair in graph6
//!   column order `(0,1), (0,2), (1,2), (0,3), ...`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::pattern::{contains_induced, PatternKind};

/// Rejection-sampling attempts before giving up.
pub const DEFAULT_ATTEMPT_BUDGET: usize = 10_000;

/// Environment variable overriding [`DEFAULT_ATTEMPT_BUDGET`].
pub const ATTEMPT_BUDGET_ENV: &str = "SECDOM_ATTEMPT_BUDGET";

/// Largest `n` accepted by [`enumerate_labeled`].
pub const ENUMERATION_MAX_N: usize = 7;

pub fn default_attempt_budget() -> usize {
    std::env::var(ATTEMPT_BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ATTEMPT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasicFamily {
    Path,
    Cycle,
    Star,
    Complete,
}

impl std::str::FromStr for BasicFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(BasicFamily::Path),
            "cycle" => Ok(BasicFamily::Cycle),
            "star" => Ok(BasicFamily::Star),
            "complete" => Ok(BasicFamily::Complete),
            _ => Err(Error::Parameter(format!("unknown family `{s}`"))),
        }
    }
}

pub fn gen_basic(family: BasicFamily, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter("need at least one vertex".into()));
    }
    let edges: Vec<(Vertex, Vertex)> = match family {
        BasicFamily::Path => (1..n).map(|v| (v - 1, v)).collect(),
        BasicFamily::Cycle => {
            if n < 3 {
                return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
            }
            (0..n).map(|v| (v, (v + 1) % n)).collect()
        }
        BasicFamily::Star => (1..n).map(|v| (0, v)).collect(),
        BasicFamily::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
    };
    Graph::new(n, edges)
}

/// `k` disjoint copies of C5; `k = 0` gives the empty graph.
pub fn gen_disjoint_c5(k: usize) -> Graph {
    let c5 = PatternKind::C5.graph();
    Graph::disjoint_union(std::iter::repeat_n(&c5, k))
}

/// Index blocks for consecutive parts.
fn blocks(sizes: &[usize]) -> Vec<std::ops::Range<Vertex>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}

pub fn gen_complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::Parameter("need at least one part".into()));
    }
    if sizes.contains(&0) {
        return Err(Error::Parameter("parts must be non-empty".into()));
    }
    let parts = blocks(sizes);
    let mut edges = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            for u in a.clone() {
                edges.extend(b.clone().map(|v| (u, v)));
            }
        }
    }
    Graph::new(sizes.iter().sum(), edges)
}

/// Blow-up of C5: part `i` joined completely to parts `i±1`; each part is a
/// clique when `cliques` is set, otherwise independent.
fn c5_blow_up(sizes: [usize; 5], cliques: bool) -> Result<Graph> {
    if sizes.contains(&0) {
        return Err(Error::Parameter("all five parts must be non-empty".into()));
    }
    let parts = blocks(&sizes);
    let mut edges = Vec::new();
    for i in 0..5 {
        let a = parts[i].clone();
        if cliques {
            for u in a.clone() {
                edges.extend((u + 1..a.end).map(|v| (u, v)));
            }
        }
        for u in a {
            edges.extend(parts[(i + 1) % 5].clone().map(|v| (u, v)));
        }
    }
    Graph::new(sizes.iter().sum(), edges)
}

/// Complete buoy with clique parts of the given sizes.
pub fn gen_complete_buoy(sizes: [usize; 5]) -> Result<Graph> {
    c5_blow_up(sizes, true)
}

/// Expansion of C5 by independent sets of the given sizes.
pub fn gen_cycle_expansion(sizes: [usize; 5]) -> Result<Graph> {
    c5_blow_up(sizes, false)
}

/// Parameters for rejection sampling of random in-class graphs.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomClassSpec {
    pub n: usize,
    pub p: f64,
    pub forbidden: Vec<PatternKind>,
    pub connected: bool,
    pub seed: u64,
    pub budget: usize,
}

impl RandomClassSpec {
    pub fn new(n: usize, p: f64, forbidden: &[PatternKind], seed: u64) -> Self {
        Self {
            n,
            p,
            forbidden: forbidden.to_vec(),
            connected: false,
            seed,
            budget: default_attempt_budget(),
        }
    }

    pub fn connected(mut self, connected: bool) -> Self {
        self.connected = connected;
        self
    }

    pub fn budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }
}

fn sample_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("sampled pairs are in range")
}

/// Samples `G(n, p)` until a graph avoids every forbidden pattern (and is
/// connected, if requested). `None` when the attempt budget runs out.
pub fn gen_random_class(spec: &RandomClassSpec) -> Result<Option<Graph>> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(Error::Parameter(format!("edge probability {} outside [0, 1]", spec.p)));
    }
    let patterns: Vec<_> = spec.forbidden.iter().map(|k| k.spec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.budget {
        let g = sample_gnp(&mut rng, spec.n, spec.p);
        if spec.connected && !g.is_connected() {
            continue;
        }
        if patterns.iter().all(|p| contains_induced(&g, p).is_none()) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// How a vertex is replaced by a set of twins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// An independent set (non-adjacent twins).
    False,
    /// A clique (adjacent twins).
    True,
}

/// Replaces vertex `v` of `template` by `sizes[v]` twins of the given kind;
/// the copies of `v` are numbered consecutively, in vertex order.
pub fn blow_up(template: &Graph, sizes: &[usize], kind: TwinKind) -> Result<Graph> {
    if sizes.len() != template.n() {
        return Err(Error::Parameter(format!(
            "{} sizes for a template on {} vertices",
            sizes.len(),
            template.n()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::Parameter("blow-up sizes must be positive".into()));
    }
    let parts = blocks(sizes);
    let mut edges = Vec::new();
    if kind == TwinKind::True {
        for part in &parts {
            for u in part.clone() {
                edges.extend((u + 1..part.end).map(|v| (u, v)));
            }
        }
    }
    for (a, b) in template.edges() {
        for u in parts[a].clone() {
            edges.extend(parts[b].clone().map(|v| (u, v)));
        }
    }
    Graph::new(sizes.iter().sum(), edges)
}

/// Rejection sampling with a twin blow-up proposal: a template on `k`
/// vertices, `n/3 <= k <= min(n, max_template)`, is drawn by
/// [`gen_random_class`], its vertices are
/// blown up to `n` vertices in total with random multiplicities, and the
/// result is kept only if it passes the same membership test. Reaches
/// larger members of classes that `G(n, p)` rarely hits.
pub fn gen_random_blowup(
    spec: &RandomClassSpec,
    kind: TwinKind,
    max_template: usize,
) -> Result<Option<Graph>> {
    let patterns: Vec<_> = spec.forbidden.iter().map(|k| k.spec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    if spec.n == 0 {
        return gen_random_class(spec);
    }
    let lo = spec.n.div_ceil(3);
    let k = rng.gen_range(lo..=spec.n.min(max_template).max(lo));
    let template_spec = RandomClassSpec {
        n: k,
        seed: rng.gen(),
        ..spec.clone()
    };
    let Some(template) = gen_random_class(&template_spec)? else {
        return Ok(None);
    };
    for _ in 0..spec.budget {
        let mut sizes = vec![1; k];
        for _ in k..spec.n {
            sizes[rng.gen_range(0..k)] += 1;
        }
        let g = blow_up(&template, &sizes, kind)?;
        if spec.connected && !g.is_connected() {
            continue;
        }
        if patterns.iter().all(|p| contains_induced(&g, p).is_none()) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Number of vertex pairs, i.e. bits in an enumeration mask.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labelled graph on `n` vertices encoded by `mask` (graph6 pair order).
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("pairs are in range")
}

/// All `2^(n choose 2)` labelled graphs on `n <= 7` vertices, in mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::Parameter(format!(
            "enumeration is limited to n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let total: u64 = 1 << pair_count(n);
    Ok((0..total).map(move |mask| labeled_graph(n, mask)))
}

/// A reproducible description of one generated graph.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    Basic { family: BasicFamily, n: usize },
    DisjointC5 { k: usize },
    CompleteMultipartite { sizes: Vec<usize> },
    CompleteBuoy { sizes: [usize; 5] },
    CycleExpansion { sizes: [usize; 5] },
    Random(RandomClassSpec),
    RandomBlowup {
        spec: RandomClassSpec,
        kind: TwinKind,
        max_template: usize,
    },
}

impl GeneratorSpec {
    /// `Ok(None)` only for a random family whose budget ran out.
    pub fn generate(&self) -> Result<Option<Graph>> {
        Ok(Some(match self {
            GeneratorSpec::Basic { family, n } => gen_basic(*family, *n)?,
            GeneratorSpec::DisjointC5 { k } => gen_disjoint_c5(*k),
            GeneratorSpec::CompleteMultipartite { sizes } => gen_complete_multipartite(sizes)?,
            GeneratorSpec::CompleteBuoy { sizes } => gen_complete_buoy(*sizes)?,
            GeneratorSpec::CycleExpansion { sizes } => gen_cycle_expansion(*sizes)?,
            GeneratorSpec::Random(spec) => return gen_random_class(spec),
            GeneratorSpec::RandomBlowup {
                spec,
                kind,
                max_template,
            } => return gen_random_blowup(spec, *kind, *max_template),
        }))
    }
}

impl fmt::Display for BasicFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicFamily::Path => "path",
            BasicFamily::Cycle => "cycle",
            BasicFamily::Star => "star",
            BasicFamily::Complete => "complete",
        })
    }
}
