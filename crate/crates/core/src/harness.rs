//! Bound verification over enumerated and sampled graphs, and the bench
//! table over the tight families.

use std::fmt;
use std::io;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::construct::{Bound, ConstructionClass, Options};
use crate::domination::{independence_number, min_secure_dominating_set};
use crate::error::{Error, Result};
use crate::generators::{
    gen_basic, gen_complete_buoy, gen_cycle_expansion, gen_disjoint_c5, gen_random_blowup,
    gen_random_class, labeled_graph, pair_count, BasicFamily, RandomClassSpec, TwinKind,
    ENUMERATION_MAX_N,
};
use crate::graph::Graph;

/// Largest graph for which bench rows include the exact secure domination
/// number.
pub const BENCH_EXACT_MAX_N: usize = 16;

/// Largest graph on which verification compares against the exact solver.
pub const VERIFY_EXACT_MAX_N: usize = 12;

/// One row of the bench table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub class: ConstructionClass,
    pub instance: String,
    pub n: usize,
    pub alpha: usize,
    pub gamma_s_exact: Option<usize>,
    pub constructed_size: usize,
    pub bound: Bound,
    pub within_bound: bool,
    pub runtime_ms: u128,
}

pub const BENCH_COLUMNS: [&str; 9] = [
    "class",
    "instance",
    "n",
    "alpha",
    "gamma_s_exact",
    "constructed_size",
    "bound",
    "within_bound",
    "runtime_ms",
];

impl BenchRow {
    fn record(&self) -> [String; 9] {
        [
            self.class.name().to_string(),
            self.instance.clone(),
            self.n.to_string(),
            self.alpha.to_string(),
            self.gamma_s_exact.map(|g| g.to_string()).unwrap_or_default(),
            self.constructed_size.to_string(),
            self.bound.to_string(),
            self.within_bound.to_string(),
            self.runtime_ms.to_string(),
        ]
    }
}

/// A named graph with the class whose construction it exercises.
#[derive(Clone, Debug)]
pub struct BenchInstance {
    pub class: ConstructionClass,
    pub instance: String,
    pub graph: Graph,
}

fn sizes_id(prefix: &str, sizes: [usize; 5]) -> String {
    let parts: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("{prefix}-{}", parts.join("-"))
}

/// Stars on 1..=10 vertices, 1..=3 disjoint 5-cycles, complete buoys and
/// 5-cycle expansions.
pub fn tight_families() -> Result<Vec<BenchInstance>> {
    let mut out = Vec::new();
    for n in 1..=10 {
        let graph = gen_basic(BasicFamily::Star, n)?;
        for class in [ConstructionClass::P5Free, ConstructionClass::P5PawFree] {
            out.push(BenchInstance {
                class,
                instance: format!("star-n{n:02}"),
                graph: graph.clone(),
            });
        }
    }
    for k in 1..=3 {
        let graph = gen_disjoint_c5(k);
        for class in [ConstructionClass::P5Free, ConstructionClass::P3UnionP2Free] {
            if k > 1 && class == ConstructionClass::P3UnionP2Free {
                continue;
            }
            out.push(BenchInstance {
                class,
                instance: format!("c5x{k}"),
                graph: graph.clone(),
            });
        }
    }
    for sizes in [
        [1, 1, 1, 1, 1],
        [2, 1, 1, 1, 1],
        [2, 2, 1, 1, 1],
        [3, 1, 2, 1, 1],
        [2, 2, 2, 2, 2],
    ] {
        out.push(BenchInstance {
            class: ConstructionClass::P5C4Free,
            instance: sizes_id("buoy", sizes),
            graph: gen_complete_buoy(sizes)?,
        });
    }
    for sizes in [
        [1, 1, 1, 1, 1],
        [2, 1, 1, 1, 1],
        [3, 1, 1, 1, 1],
        [2, 2, 1, 1, 1],
        [2, 2, 2, 2, 2],
    ] {
        out.push(BenchInstance {
            class: ConstructionClass::P5C3Free,
            instance: sizes_id("expansion", sizes),
            graph: gen_cycle_expansion(sizes)?,
        });
    }
    Ok(out)
}

pub fn bench_row(inst: &BenchInstance) -> Result<BenchRow> {
    let g = &inst.graph;
    let start = Instant::now();
    let result = crate::construct::construct_for_class(g, inst.class, Options::default())?;
    let runtime_ms = start.elapsed().as_millis();
    let gamma_s_exact = if g.n() <= BENCH_EXACT_MAX_N {
        Some(min_secure_dominating_set(g)?.0.len())
    } else {
        None
    };
    Ok(BenchRow {
        class: inst.class,
        instance: inst.instance.clone(),
        n: g.n(),
        alpha: independence_number(g)?,
        gamma_s_exact,
        constructed_size: result.size(),
        bound: result.bound,
        within_bound: result.within_bound(),
        runtime_ms,
    })
}

/// Rows for every tight-family instance, ordered by instance identifier
/// then class.
pub fn bench_rows() -> Result<Vec<BenchRow>> {
    let instances = tight_families()?;
    let mut rows = instances
        .par_iter()
        .map(bench_row)
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.instance.cmp(&b.instance).then(a.class.cmp(&b.class)));
    Ok(rows)
}

pub fn write_bench_csv<W: io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io_err = |e: csv::Error| Error::Parameter(format!("writing CSV: {e}"));
    w.write_record(BENCH_COLUMNS).map_err(io_err)?;
    for row in rows {
        w.write_record(row.record()).map_err(io_err)?;
    }
    w.flush()
        .map_err(|e| Error::Parameter(format!("writing CSV: {e}")))?;
    Ok(())
}

/// Settings for a verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub class: ConstructionClass,
    /// Every labeled graph with at most this many vertices is checked.
    pub nmax: usize,
    pub seed: u64,
    /// Number of random in-scope graphs to check.
    pub samples: usize,
    /// Sampled graphs have between 1 and this many vertices.
    pub sample_nmax: usize,
    pub budget: usize,
}

impl VerifyConfig {
    pub fn new(class: ConstructionClass, nmax: usize) -> Self {
        Self {
            class,
            nmax,
            seed: 0,
            samples: 0,
            sample_nmax: VERIFY_EXACT_MAX_N,
            budget: crate::generators::default_attempt_budget(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub instance: String,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.instance, self.reason)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub exhaustive_checked: usize,
    pub sampled_checked: usize,
    /// Draws for which rejection sampling ran out of attempts.
    pub sampled_absent: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Whether `g` is an instance the class's bound speaks about: it avoids the
/// forbidden patterns and, for connected-only classes, is connected.
pub fn in_scope(class: ConstructionClass, g: &Graph) -> bool {
    (!class.connected_only() || g.is_connected()) && class.contains(g)
}

/// Constructs, certifies and checks the bound on one in-scope graph; also
/// checks the exact secure domination number against the set size and the
/// bound when the graph is small enough.
pub fn check_instance(class: ConstructionClass, g: &Graph) -> std::result::Result<(), String> {
    let r = class
        .construct(g, Options::skip_validation())
        .map_err(|e| format!("construction failed: {e}"))?;
    if !r.within_bound() {
        return Err(format!("size {} exceeds bound {}", r.size(), r.bound));
    }
    r.certificate
        .verify(g)
        .map_err(|e| format!("certificate rejected: {e}"))?;
    if g.n() <= VERIFY_EXACT_MAX_N {
        let gs = min_secure_dominating_set(g)
            .map_err(|e| format!("exact solver failed: {e}"))?
            .0
            .len();
        if r.size() < gs {
            return Err(format!("size {} below exact optimum {gs}", r.size()));
        }
        if !r.bound.admits(gs) {
            return Err(format!("exact optimum {gs} exceeds bound {}", r.bound));
        }
    }
    Ok(())
}

/// How random instances of a class are proposed before the membership
/// test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Proposal {
    /// Plain `G(n, p)`.
    Gnp,
    /// Twin blow-up of a smaller `G(k, p)` member.
    Blowup(TwinKind),
}

/// Largest template drawn for blow-up proposals.
pub const BLOWUP_MAX_TEMPLATE: usize = 8;

/// Proposal and edge-probability range per class. Blow-ups by false twins
/// cannot create P5, C3 or a paw; blow-ups by true twins cannot create P5
/// or C4. Plain sampling suffices for the other classes.
fn proposal(class: ConstructionClass, index: usize) -> (Proposal, f64, f64) {
    use ConstructionClass as C;
    match class {
        C::P5Free if index.is_multiple_of(2) => (Proposal::Gnp, 0.2, 0.8),
        C::P5Free => (Proposal::Blowup(TwinKind::False), 0.2, 0.8),
        C::P3UnionP2Free | C::P3UnionP1Free | C::K2UnionTwoK1Free => (Proposal::Gnp, 0.5, 0.95),
        C::P5C3Free | C::P5PawFree => (Proposal::Blowup(TwinKind::False), 0.25, 0.6),
        C::P5C4Free => (Proposal::Blowup(TwinKind::True), 0.4, 0.95),
    }
}

/// Sample `index` of a run seeded by `seed`: `None` when rejection
/// sampling ran out of attempts.
pub fn sample_instance(
    class: ConstructionClass,
    seed: u64,
    index: usize,
    nmax: usize,
    budget: usize,
) -> Result<Option<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(1..=nmax.max(1));
    let (how, lo, hi) = proposal(class, index);
    let p = rng.gen_range(lo..=hi);
    let spec = RandomClassSpec::new(n, p, class.forbidden(), rng.gen())
        .connected(class.connected_only())
        .budget(budget);
    match how {
        Proposal::Gnp => gen_random_class(&spec),
        Proposal::Blowup(kind) => gen_random_blowup(&spec, kind, BLOWUP_MAX_TEMPLATE),
    }
}

/// Up to `count` in-class samples, in index order, drawing at most
/// `SAMPLE_DRAW_FACTOR * count` candidates. Returns the samples with their
/// draw index and the number of draws that came back empty.
pub fn sample_instances(
    class: ConstructionClass,
    seed: u64,
    count: usize,
    nmax: usize,
    budget: usize,
) -> Result<(Vec<(usize, Graph)>, usize)> {
    let mut found = Vec::new();
    let mut absent = 0;
    let mut next = 0;
    while found.len() < count && next < SAMPLE_DRAW_FACTOR * count {
        let end = (next + count - found.len()).min(SAMPLE_DRAW_FACTOR * count);
        let batch: Vec<Option<Graph>> = (next..end)
            .into_par_iter()
            .map(|i| sample_instance(class, seed, i, nmax, budget))
            .collect::<Result<_>>()?;
        for (i, g) in (next..end).zip(batch) {
            match g {
                Some(g) => found.push((i, g)),
                None => absent += 1,
            }
        }
        next = end;
    }
    Ok((found, absent))
}

/// Cap on draws per requested sample.
pub const SAMPLE_DRAW_FACTOR: usize = 4;

/// Exhaustive check over labeled graphs with at most `nmax` vertices plus
/// `samples` seeded random in-scope graphs. Deterministic given the config.
pub fn verify_bounds(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.nmax > ENUMERATION_MAX_N {
        return Err(Error::Parameter(format!(
            "nmax {} exceeds the enumeration limit {ENUMERATION_MAX_N}",
            cfg.nmax
        )));
    }
    let mut report = VerifyReport::default();
    for n in 1..=cfg.nmax {
        let total: u64 = 1 << pair_count(n);
        let results: Vec<Option<Violation>> = (0..total)
            .into_par_iter()
            .filter_map(|mask| {
                let g = labeled_graph(n, mask);
                if !in_scope(cfg.class, &g) {
                    return None;
                }
                let violation = check_instance(cfg.class, &g).err().map(|reason| Violation {
                    instance: format!("labeled-n{n}-{mask:07}"),
                    reason,
                });
                Some(violation)
            })
            .collect();
        report.exhaustive_checked += results.len();
        report.violations.extend(results.into_iter().flatten());
    }
    let (samples, absent) =
        sample_instances(cfg.class, cfg.seed, cfg.samples, cfg.sample_nmax, cfg.budget)?;
    report.sampled_absent = absent;
    report.sampled_checked = samples.len();
    let violations: Vec<Violation> = samples
        .par_iter()
        .filter_map(|(i, g)| {
            check_instance(cfg.class, g).err().map(|reason| Violation {
                instance: format!("random-{i:05}-n{}", g.n()),
                reason,
            })
        })
        .collect();
    report.violations.extend(violations);
    report.violations.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(report)
}
