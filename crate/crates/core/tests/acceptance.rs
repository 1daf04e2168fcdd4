//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Built with `harness = false` so the lines show up in plain `cargo test`
//! output. Set `SECDOM_ACCEPTANCE_N7=1` to extend the exhaustive P5-free
//! sweep to seven vertices.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secdom::construct::{c5_expansion_parts, sds_p5_free};
use secdom::domination::{ab_partition, ABPartition};
use secdom::format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use secdom::generators::{
    default_attempt_budget, enumerate_labeled, gen_basic, gen_complete_buoy, gen_disjoint_c5,
    blow_up, BasicFamily, TwinKind,
};
use secdom::recognition::free_of_kinds;
use secdom::subsets::Combinations;
use secdom::harness::{in_scope, sample_instances, verify_bounds, VerifyConfig};
use secdom::{
    defended_by, epn, independence_number, is_dominating, is_secure_dominating,
    max_independent_set, min_dominating_set, min_secure_dominating_set, ConstructionClass,
    Graph, Options, PatternKind, Vertex, VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CORPUS_SEED: u64 = 1;
const N7_FLAG: &str = "SECDOM_ACCEPTANCE_N7";

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gamma_s(g: &Graph) -> usize {
    min_secure_dominating_set(g).unwrap().0.len()
}

fn alpha(g: &Graph) -> usize {
    independence_number(g).unwrap()
}

fn exhaustive(class: ConstructionClass, nmax: usize) -> Outcome {
    let report = verify_bounds(&VerifyConfig::new(class, nmax)).map_err(|e| e.to_string())?;
    match report.violations.first() {
        Some(v) => Err(format!("{class}: {} violations, first {v}", report.violations.len())),
        None => Ok(format!("{class} {} graphs", report.exhaustive_checked)),
    }
}

fn labeled_up_to(nmax: usize) -> impl Iterator<Item = Graph> {
    (1..=nmax).flat_map(|n| enumerate_labeled(n).unwrap())
}

fn known_values() -> Outcome {
    let start = Instant::now();
    let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
    ensure(gamma_s(&c5) == 3 && alpha(&c5) == 2, || "C5".into())?;
    for leaves in 1..=8 {
        let star = gen_basic(BasicFamily::Star, leaves + 1).unwrap();
        ensure(gamma_s(&star) == leaves && alpha(&star) == leaves, || {
            format!("K_1,{leaves}")
        })?;
    }
    for k in 1..=3 {
        let g = gen_disjoint_c5(k);
        ensure(gamma_s(&g) == 3 * k && alpha(&g) == 2 * k, || format!("{k}C5"))?;
    }
    let mut buoys = 0;
    for total in 5..=10usize {
        let mut cuts = Combinations::new(total - 1, 4);
        while let Some(cut) = cuts.next_subset() {
            let mut sizes = [0; 5];
            let mut prev = 0;
            for (i, &c) in cut.iter().enumerate() {
                sizes[i] = c + 1 - prev;
                prev = c + 1;
            }
            sizes[4] = total - prev;
            let g = gen_complete_buoy(sizes).unwrap();
            ensure(alpha(&g) == 2 && gamma_s(&g) == 3, || format!("buoy {sizes:?}"))?;
            buoys += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 10.0, || format!("took {elapsed:?}"))?;
    Ok(format!("C5, 8 stars, 3 cycle unions, {buoys} buoys in {elapsed:.2?}"))
}

fn p5_free_exhaustive() -> Outcome {
    let nmax = if std::env::var_os(N7_FLAG).is_some() { 7 } else { 6 };
    exhaustive(ConstructionClass::P5Free, nmax).map(|s| format!("n <= {nmax}: {s}"))
}

fn p3_union_p2() -> Outcome {
    let summary = exhaustive(ConstructionClass::P3UnionP2Free, 6)?;
    let c5 = gen_basic(BasicFamily::Cycle, 5).unwrap();
    let r = ConstructionClass::P3UnionP2Free.construct(&c5, Options::default()).unwrap();
    ensure(r.size() == alpha(&c5) + 1 && gamma_s(&c5) == 3, || {
        format!("C5 gave size {}", r.size())
    })?;
    Ok(format!("{summary}; C5 attains alpha + 1"))
}

fn alpha_set_classes() -> Outcome {
    let mut notes = Vec::new();
    for class in [ConstructionClass::P3UnionP1Free, ConstructionClass::K2UnionTwoK1Free] {
        notes.push(exhaustive(class, 6)?);
        let mut large = 0;
        for g in labeled_up_to(6).filter(|g| class.contains(g)) {
            let i = max_independent_set(&g).unwrap();
            if i.len() >= 3 {
                let r = class.construct(&g, Options::default()).unwrap();
                ensure(r.set == i, || format!("{class}: {g:?} did not return the alpha-set"))?;
                large += 1;
            }
        }
        notes.push(format!("{large} with alpha >= 3 return the alpha-set"));
    }
    Ok(notes.join("; "))
}

fn connected_classes() -> Outcome {
    let mut notes = Vec::new();
    for class in [
        ConstructionClass::P5C3Free,
        ConstructionClass::P5PawFree,
        ConstructionClass::P5C4Free,
    ] {
        let mut cfg = VerifyConfig::new(class, 6);
        cfg.seed = CORPUS_SEED;
        cfg.samples = 500;
        cfg.sample_nmax = 12;
        let report = verify_bounds(&cfg).map_err(|e| e.to_string())?;
        if let Some(v) = report.violations.first() {
            return Err(format!("{class}: {v}"));
        }
        ensure(report.sampled_checked == 500, || {
            format!("{class}: only {} samples", report.sampled_checked)
        })?;
        notes.push(format!("{class} {}+{}", report.exhaustive_checked, report.sampled_checked));
    }
    Ok(notes.join(", "))
}

fn undefended(g: &Graph, s: &VertexSet) -> Vec<Vertex> {
    s.complement()
        .iter()
        .filter(|&v| defended_by(g, s, v).unwrap().is_none())
        .collect()
}

/// A P5-free graph on at most 12 vertices around one or two planted C5s,
/// the structure that makes a maximum independent set insecure: a random
/// template whose first five (and next five) vertices form induced C5s,
/// blown up by twins. Substitution cannot create a P5, which is prime; the
/// result is still re-tested. Two cycles give two-step runs.
fn planted_c5(rng: &mut ChaCha8Rng) -> Option<Graph> {
    let cycles = rng.gen_range(1..=2);
    let k = rng.gen_range(5 * cycles..=8.max(5 * cycles + 2));
    let p = rng.gen_range(0.05..0.8);
    let block = |v: Vertex| if v < 5 * cycles { v / 5 } else { usize::MAX };
    let template = (0..1000).find_map(|_| {
        let mut edges: Vec<(Vertex, Vertex)> = (0..5 * cycles)
            .map(|v| (v, v - v % 5 + (v + 1) % 5))
            .collect();
        for v in 0..k {
            for u in 0..v {
                if (block(u) != block(v) || block(v) == usize::MAX) && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let t = Graph::new(k, edges).unwrap();
        free_of_kinds(&t, &[PatternKind::P5]).then_some(t)
    })?;
    let mut sizes = vec![1; k];
    for _ in k..rng.gen_range(k..=12) {
        sizes[rng.gen_range(0..k)] += 1;
    }
    let kind = if rng.gen_bool(0.5) { TwinKind::False } else { TwinKind::True };
    let g = blow_up(&template, &sizes, kind).unwrap();
    ConstructionClass::P5Free.contains(&g).then_some(g)
}

fn trace_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    let mut steps = 0;
    let mut draws = 0;
    let (mut longest, mut deepest) = (0, 0);
    while checked < 1000 {
        ensure(draws < 20_000, || format!("only {checked} insecure instances found"))?;
        draws += 1;
        let Some(g) = planted_c5(&mut rng) else { continue };
        let i = max_independent_set(&g).unwrap();
        if is_secure_dominating(&g, &i).is_ok() {
            continue;
        }
        checked += 1;
        let r = sds_p5_free(&g, Options::default()).map_err(|e| format!("{g:?}: {e}"))?;
        let trace = r.trace.as_ref().ok_or("missing trace")?;
        ensure(trace.initial == i, || format!("{g:?}: initial set differs"))?;
        let sets = trace.sets();
        longest = longest.max(trace.steps.len());
        deepest = trace.steps.iter().map(|st| st.threshold).max().unwrap_or(0).max(deepest);
        for (k, step) in trace.steps.iter().enumerate() {
            let (s, next) = (&sets[k], &sets[k + 1]);
            let fail = |what: &str| format!("{g:?} step {k}: {what}");
            let nv = g.adjacency(step.v);
            ensure(!s.contains(step.v) && defended_by(&g, s, step.v).unwrap().is_none(), || {
                fail("v not undefended")
            })?;
            ensure(nv.intersection_len(s) == step.threshold, || fail("wrong count"))?;
            ensure(s.contains(step.u) && nv.contains(step.u), || fail("u"))?;
            let private = epn(&g, s, step.u).unwrap();
            ensure(private.contains(step.x) && !nv.contains(step.x), || fail("x"))?;
            let before: ABPartition = ab_partition(&g, s).unwrap();
            let after = ab_partition(&g, next).unwrap();
            ensure(after.a_set.len() + 2 <= before.a_set.len(), || fail("A did not drop by 2"))?;
            ensure(after.b_set.contains(step.u) && after.b_set.contains(step.x), || {
                fail("u or x not in B")
            })?;
            for w in undefended(&g, next) {
                let a = g.adjacency(w);
                ensure(a.intersection_len(next) == a.intersection_len(&i), || {
                    fail("neighbour count changed")
                })?;
            }
            steps += 1;
        }
        ensure(r.certificate.verify(&g).is_ok(), || format!("{g:?}: not secure"))?;
    }
    Ok(format!(
        "{checked} instances from {draws} draws, {steps} steps, at most {longest} per run, threshold up to {deepest}"
    ))
}

/// Greedy maximal independent set: `seed` first, then ascending order.
fn greedy_extend(g: &Graph, seed: &VertexSet, order: &[Vertex]) -> VertexSet {
    let mut out = seed.clone();
    for &v in order {
        if !out.contains(v) && g.adjacency(v).is_disjoint(&out) {
            out.insert(v);
        }
    }
    out
}

/// Structural checks on one dominating `s`; `part` is its A/B split.
fn check_dominating(g: &Graph, s: &VertexSet, part: &ABPartition, a: usize) -> Result<(), String> {
    let fail = |what: &str| format!("{g:?} S={s:?}: {what}");
    for u in part.a_set.iter() {
        ensure(!epn(g, s, u).unwrap().is_empty(), || fail("A member with empty epn"))?;
    }
    let contains_alpha_set = independence_number(&g.induced(s)).unwrap() == a;
    for v in undefended(g, s) {
        let ns = g.adjacency(v).intersection(s);
        ensure(ns.is_subset(&part.a_set), || fail("undefended neighbour outside A"))?;
        let closed = g.closed_neighborhood(v);
        for u in ns.iter() {
            ensure(!epn(g, s, u).unwrap().is_subset(&closed), || fail("epn inside N[v]"))?;
        }
        if contains_alpha_set {
            ensure(ns.intersection_len(&part.a_set) >= 2, || fail("fewer than two A neighbours"))?;
        }
    }
    Ok(())
}

fn check_monotone(g: &Graph, s: &ABPartition, t: &ABPartition) -> Result<(), String> {
    ensure(t.a_set.is_subset(&s.a_set) && s.b_set.is_subset(&t.b_set), || {
        format!("{g:?}: A/B not monotone")
    })
}

fn check_graph(g: &Graph, seeds: &[VertexSet]) -> Result<(), String> {
    let a = alpha(g);
    let i = max_independent_set(g).unwrap();
    for u in i.iter() {
        ensure(g.is_clique(&epn(g, &i, u).unwrap()), || format!("{g:?}: epn({u}, I) not a clique"))?;
    }
    let order: Vec<Vertex> = g.vertices().collect();
    for seed in seeds.iter().filter(|x| g.is_independent(x)) {
        ensure(is_dominating(g, &greedy_extend(g, seed, &order)), || {
            format!("{g:?}: maximal independent set not dominating")
        })?;
    }
    ensure(min_dominating_set(g).unwrap().len() <= a, || format!("{g:?}: gamma > alpha"))?;
    ensure(gamma_s(g) < 2 * a, || format!("{g:?}: gamma_s > 2 alpha - 1"))
}

fn structure_suite() -> Outcome {
    let mut sets_checked = 0;
    for g in labeled_up_to(5) {
        let n = g.n();
        let all: Vec<VertexSet> = (0u32..1 << n)
            .map(|m| VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1)))
            .collect();
        check_graph(&g, &all)?;
        let parts: Vec<Option<ABPartition>> = all.iter().map(|s| ab_partition(&g, s).ok()).collect();
        for (m, s) in all.iter().enumerate() {
            let Some(part) = &parts[m] else { continue };
            check_dominating(&g, s, part, alpha(&g))?;
            sets_checked += 1;
            for (m2, t) in parts.iter().enumerate() {
                if let Some(t) = t.as_ref().filter(|_| m & !m2 == 0) {
                    check_monotone(&g, part, t)?;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let edges: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let i = max_independent_set(&g).unwrap();
        let mut grow = |base: &VertexSet| {
            let q = rng.gen_range(0.0..0.5);
            VertexSet::from_vertices(n, (0..n).filter(|&v| base.contains(v) || rng.gen_bool(q)))
        };
        let s = grow(&i);
        let t = grow(&s);
        let seed = VertexSet::from_vertices(n, [rng.gen_range(0..n)]);
        check_graph(&g, &[seed])?;
        let (ps, pt) = (ab_partition(&g, &s).unwrap(), ab_partition(&g, &t).unwrap());
        check_dominating(&g, &s, &ps, i.len())?;
        check_dominating(&g, &t, &pt, i.len())?;
        check_monotone(&g, &ps, &pt)?;
    }
    Ok(format!("{sets_checked} dominating sets on n <= 5, 2000 random pairs"))
}

/// Independent of the library: each vertex off `cycle` sees exactly two
/// cycle positions, and they are not consecutive.
fn sees_two_opposite(g: &Graph, cycle: &[Vertex]) -> bool {
    g.vertices().filter(|v| !cycle.contains(v)).all(|v| {
        let pos: Vec<usize> = (0..5).filter(|&i| g.is_adjacent(v, cycle[i])).collect();
        pos.len() == 2 && !matches!(pos[1] - pos[0], 1 | 4)
    })
}

fn c5_neighbourhoods() -> Outcome {
    let class = ConstructionClass::P5C3Free;
    let (samples, _) =
        sample_instances(class, CORPUS_SEED, 500, 12, default_attempt_budget()).unwrap();
    let corpus = labeled_up_to(6)
        .filter(|g| in_scope(class, g))
        .chain(samples.into_iter().map(|(_, g)| g));
    let c5 = PatternKind::C5.spec();
    let (mut total, mut with_c5) = (0, 0);
    for g in corpus {
        total += 1;
        let Some(image) = secdom::contains_induced(&g, &c5) else { continue };
        with_c5 += 1;
        let cycle: [Vertex; 5] = image.try_into().unwrap();
        ensure(sees_two_opposite(&g, &cycle), || format!("{g:?} around {cycle:?}"))?;
        c5_expansion_parts(&g, &cycle).map_err(|e| format!("{g:?}: {e}"))?;
    }
    Ok(format!("{with_c5} of {total} instances contain a C5"))
}

fn round_trip(g: &Graph) -> Result<(), String> {
    let g6 = emit_graph6(g);
    let back = parse_graph6(&g6).map_err(|e| e.to_string())?;
    ensure(&back == g && emit_graph6(&back) == g6, || format!("graph6 {g6}"))?;
    let el = emit_edge_list(g);
    let back = parse_edge_list(&el).map_err(|e| e.to_string())?;
    ensure(&back == g && emit_edge_list(&back) == el, || format!("edge list of {g6}"))
}

fn format_round_trip() -> Outcome {
    let budget = default_attempt_budget();
    let mut count = 0;
    for g in (0..=5).flat_map(|n| enumerate_labeled(n).unwrap()) {
        round_trip(&g)?;
        count += 1;
    }
    for class in ConstructionClass::ALL {
        for (_, g) in sample_instances(class, CORPUS_SEED, 300, 12, budget).unwrap().0 {
            round_trip(&g)?;
            count += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    while count < 10_000 {
        let n = rng.gen_range(0..=130);
        let p: f64 = rng.gen();
        let edges: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        round_trip(&Graph::new(n, edges).unwrap())?;
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("known values", known_values),
        ("P5-free exhaustive", p5_free_exhaustive),
        ("(P3+P2)-free exhaustive", p3_union_p2),
        ("(P3+P1)- and (K2+2K1)-free exhaustive", alpha_set_classes),
        ("connected classes", connected_classes),
        ("construction trace", trace_suite),
        ("domination structure", structure_suite),
        ("C5 neighbourhoods in (P5,C3)-free graphs", c5_neighbourhoods),
        ("format round-trip", format_round_trip),
    ];
    // `cargo test --test acceptance -- 6 7` runs a subset.
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(k + 1)) {
            continue;
        }
        let start = Instant::now();
        let (tag, detail) = match run() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {}: {tag} {name} ({detail}) [{:.1?}]", k + 1, start.elapsed());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
