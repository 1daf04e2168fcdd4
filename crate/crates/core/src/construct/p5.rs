//! The `3α/2` construction for P5-free graphs.

use crate::construct::{certify, validate_patterns, Bound, ConstructionResult, Options};
use crate::domination::{ab_partition_unchecked, epn_unchecked, is_defended, max_independent_set};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::pattern::PatternKind;

/// One augmentation: `x` was added to `S` to fix undefended `v` with
/// exactly `threshold` neighbours in `S`, using `v`'s neighbour `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub threshold: usize,
    pub v: Vertex,
    pub u: Vertex,
    pub x: Vertex,
    pub size_s_after: usize,
    pub size_a_before: usize,
    pub size_a_after: usize,
}

/// The starting independent set and every augmentation, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgorithmTrace {
    pub initial: VertexSet,
    pub steps: Vec<TraceStep>,
}

impl AlgorithmTrace {
    /// Replays the steps from the initial set.
    pub fn sets(&self) -> Vec<VertexSet> {
        let mut s = self.initial.clone();
        let mut out = vec![s.clone()];
        for step in &self.steps {
            s.insert(step.x);
            out.push(s.clone());
        }
        out
    }
}

fn undefended_with_count(g: &Graph, s: &VertexSet, count: usize) -> Option<Vertex> {
    s.complement()
        .iter()
        .find(|&v| g.adjacency(v).intersection_len(s) == count && !is_defended(g, s, v))
}

/// Secure dominating set of size at most `3α/2` for a P5-free graph.
///
/// Starts from the lexicographically least maximum independent set `I`.
/// For `i = 2, 3, ..., |I|`, while some outside vertex `v` with exactly `i`
/// neighbours in `S` is undefended, picks the smallest such `v`, its
/// smallest neighbour `u` in `S`, and adds the smallest private external
/// neighbour of `u` that is not adjacent to `v`. P5-freeness guarantees
/// that vertex exists; if it does not, or an undefended vertex ever gains a
/// neighbour in `S`, the input was not P5-free and an error is returned.
pub fn sds_p5_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    if opts.validate {
        validate_patterns(g, "p5-free", &[PatternKind::P5])?;
    }
    let initial = max_independent_set(g)?;
    let alpha = initial.len();
    let mut s = initial.clone();
    let mut steps = Vec::new();
    let mut a_size = ab_partition_unchecked(g, &s).a_set.len();
    let mut i = 2;
    while i <= alpha {
        let Some(v) = undefended_with_count(g, &s, i) else {
            i += 1;
            continue;
        };
        let u = g
            .adjacency(v)
            .intersection(&s)
            .first()
            .expect("v has i >= 2 neighbours in S");
        let x = epn_unchecked(g, &s, u)
            .difference(g.adjacency(v))
            .first()
            .ok_or_else(|| {
                Error::Structure(format!(
                    "no private neighbour of {u} outside N({v}); graph is not P5-free"
                ))
            })?;
        s.insert(x);
        let a_after = ab_partition_unchecked(g, &s).a_set.len();
        steps.push(TraceStep {
            threshold: i,
            v,
            u,
            x,
            size_s_after: s.len(),
            size_a_before: a_size,
            size_a_after: a_after,
        });
        a_size = a_after;
        check_undefended_counts(g, &s, &initial)?;
    }
    let trace = AlgorithmTrace { initial, steps };
    certify(g, s, Bound::three_halves(alpha), Some(trace))
}

/// Undefended vertices have exactly the neighbours in `S` they had in `I`.
fn check_undefended_counts(g: &Graph, s: &VertexSet, initial: &VertexSet) -> Result<()> {
    for w in s.complement().iter() {
        let adj = g.adjacency(w);
        if adj.intersection_len(s) != adj.intersection_len(initial) && !is_defended(g, s, w) {
            return Err(Error::Structure(format!(
                "undefended vertex {w} gained a neighbour in S; graph is not P5-free"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_basic, gen_disjoint_c5, BasicFamily};

    #[test]
    fn c5_needs_one_step() {
        let g = gen_basic(BasicFamily::Cycle, 5).unwrap();
        let r = sds_p5_free(&g, Options::default()).unwrap();
        let trace = r.trace.clone().unwrap();
        assert_eq!(trace.initial, VertexSet::from_vertices(5, [0, 2]));
        assert_eq!(trace.steps.len(), 1);
        let step = trace.steps[0];
        assert_eq!((step.threshold, step.v, step.u, step.x), (2, 1, 0, 4));
        assert_eq!(r.set, VertexSet::from_vertices(5, [0, 2, 4]));
        assert_eq!(r.bound.to_string(), "3.0");
    }

    #[test]
    fn stars_and_cliques_need_no_steps() {
        for n in 1..=8 {
            let star = gen_basic(BasicFamily::Star, n).unwrap();
            let r = sds_p5_free(&star, Options::default()).unwrap();
            assert!(r.trace.as_ref().unwrap().steps.is_empty());
            assert_eq!(r.size(), if n == 1 { 1 } else { n - 1 });
            let k = gen_basic(BasicFamily::Complete, n).unwrap();
            assert_eq!(sds_p5_free(&k, Options::default()).unwrap().size(), 1);
        }
    }

    #[test]
    fn disjoint_c5_meets_the_bound() {
        for k in 1..=3 {
            let r = sds_p5_free(&gen_disjoint_c5(k), Options::default()).unwrap();
            assert_eq!(r.size(), 3 * k);
            assert_eq!(r.bound.floor(), 3 * k);
        }
    }

    #[test]
    fn rejects_p5() {
        let p5 = gen_basic(BasicFamily::Path, 5).unwrap();
        assert!(matches!(
            sds_p5_free(&p5, Options::default()),
            Err(Error::ClassValidation { .. })
        ));
    }

    #[test]
    fn replayed_sets_end_at_result() {
        let r = sds_p5_free(&gen_disjoint_c5(2), Options::default()).unwrap();
        let sets = r.trace.as_ref().unwrap().sets();
        assert_eq!(sets.last().unwrap(), &r.set);
    }
}
