//! `max{3, α}` constructions for connected (P5, C3)-free and (P5, paw)-free
//! graphs. A connected (P5, C3)-free graph with an induced 5-cycle is a
//! blow-up of that cycle by independent sets, which the construction
//! exploits directly.

use crate::construct::{
    certify, exact_within_alpha, require_connected, validate_patterns, Bound, ConstructionResult,
    Options,
};
use crate::domination::max_independent_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::classes::is_complete_multipartite;
use crate::recognition::pattern::{contains_induced, PatternKind};

/// Splits the vertices around an induced 5-cycle `cycle`: part `i` holds
/// `cycle[i]` and every vertex whose neighbours on the cycle are exactly
/// `cycle[i-1]` and `cycle[i+1]`.
///
/// In a connected (P5, C3)-free graph every vertex off the cycle has that
/// shape; any other vertex is reported as a structural error.
pub fn c5_expansion_parts(g: &Graph, cycle: &[Vertex; 5]) -> Result<[VertexSet; 5]> {
    for &c in cycle {
        g.check_vertex(c)?;
    }
    let n = g.n();
    let mut parts: [VertexSet; 5] = std::array::from_fn(|i| VertexSet::from_vertices(n, [cycle[i]]));
    for w in g.vertices().filter(|w| !cycle.contains(w)) {
        let mask: u8 = (0..5)
            .filter(|&i| g.is_adjacent(w, cycle[i]))
            .fold(0, |m, i| m | 1 << i);
        let slot = (0..5).find(|&i| mask == (1 << ((i + 4) % 5)) | (1 << ((i + 1) % 5)));
        match slot {
            Some(i) => parts[i].insert(w),
            None => {
                return Err(Error::Structure(format!(
                    "vertex {w} does not see exactly two non-consecutive cycle vertices"
                )))
            }
        }
    }
    Ok(parts)
}

/// The ten symmetries of a 5-cycle as maps from new position to old.
fn dihedral() -> impl Iterator<Item = [usize; 5]> {
    let rotations = (0..5).map(|r| std::array::from_fn(|j| (j + r) % 5));
    let reflections = (0..5).map(|r| std::array::from_fn(|j| (r + 5 - j) % 5));
    rotations.chain(reflections)
}

fn orient(sizes: &[usize; 5], want: impl Fn(&[usize; 5]) -> bool) -> Option<[usize; 5]> {
    dihedral().find(|sigma| want(&std::array::from_fn(|j| sizes[sigma[j]])))
}

/// Secure dominating set of size at most `max{3, α}` for a connected
/// (P5, C3)-free graph.
///
/// Without an induced 5-cycle the exact solver is used. Otherwise, with
/// `U1..U5` the parts around the first induced cycle `u1..u5`:
/// `α >= 5` gives the cycle itself; `α = 4` gives `u1..u4` after orienting
/// the cycle so that a part of size 3, if any, is `U2` and `|U1| <= 2`;
/// `α <= 3` gives `{u1, u2, u4}` after orienting so that `|U1| = 2` and
/// `|U5| = 1`.
pub fn sds_p5_c3_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    require_connected(g, "p5c3-free")?;
    if opts.validate {
        validate_patterns(g, "p5c3-free", &[PatternKind::P5, PatternKind::C3])?;
    }
    let alpha = max_independent_set(g)?.len();
    let set = p5_c3_core(g, alpha)?;
    certify(g, set, Bound::max_three(alpha), None)
}

fn p5_c3_core(g: &Graph, alpha: usize) -> Result<VertexSet> {
    let Some(emb) = contains_induced(g, &PatternKind::C5.spec()) else {
        return exact_within_alpha(g, alpha);
    };
    let cycle: [Vertex; 5] = std::array::from_fn(|i| emb[i]);
    let parts = c5_expansion_parts(g, &cycle)?;
    let sizes: [usize; 5] = std::array::from_fn(|i| parts[i].len());
    let pick = |sigma: [usize; 5], positions: &[usize]| {
        VertexSet::from_vertices(g.n(), positions.iter().map(|&j| cycle[sigma[j]]))
    };
    let identity = [0, 1, 2, 3, 4];
    let set = if alpha >= 5 {
        pick(identity, &[0, 1, 2, 3, 4])
    } else if alpha == 4 {
        if sizes.iter().all(|&s| s <= 2) {
            pick(identity, &[0, 1, 2, 3])
        } else {
            let sigma = orient(&sizes, |s| s[1] == 3 && s[0] <= 2).ok_or_else(|| {
                Error::Structure(format!("no orientation of part sizes {sizes:?} fits α = 4"))
            })?;
            pick(sigma, &[0, 1, 2, 3])
        }
    } else if sizes == [1; 5] {
        pick(identity, &[0, 1, 3])
    } else {
        let sigma = orient(&sizes, |s| s[0] == 2 && s[4] == 1).ok_or_else(|| {
            Error::Structure(format!("no orientation of part sizes {sizes:?} fits α = 3"))
        })?;
        pick(sigma, &[0, 1, 3])
    };
    Ok(set)
}

/// Secure dominating set of size at most `max{3, α}` for a connected
/// (P5, paw)-free graph: such a graph is complete multipartite (solved
/// exactly) or triangle-free.
pub fn sds_p5_paw_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    require_connected(g, "p5paw-free")?;
    if opts.validate {
        validate_patterns(g, "p5paw-free", &[PatternKind::P5, PatternKind::Paw])?;
    }
    let alpha = max_independent_set(g)?.len();
    let set = if is_complete_multipartite(g).is_some() {
        exact_within_alpha(g, alpha)?
    } else if contains_induced(g, &PatternKind::C3.spec()).is_none() {
        p5_c3_core(g, alpha)?
    } else {
        return Err(Error::Structure(
            "paw-free graph is neither complete multipartite nor triangle-free".into(),
        ));
    };
    certify(g, set, Bound::max_three(alpha), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_basic, gen_complete_multipartite, gen_cycle_expansion, BasicFamily};

    fn sizes(parts: &[VertexSet; 5]) -> [usize; 5] {
        std::array::from_fn(|i| parts[i].len())
    }

    #[test]
    fn c5_gives_three_cycle_vertices() {
        let g = gen_basic(BasicFamily::Cycle, 5).unwrap();
        let r = sds_p5_c3_free(&g, Options::default()).unwrap();
        assert_eq!(r.set, VertexSet::from_vertices(5, [0, 1, 3]));
        assert_eq!(r.bound, Bound::from_int(3));
    }

    #[test]
    fn expansion_parts_are_recovered() {
        let g = gen_cycle_expansion([2, 1, 3, 1, 1]).unwrap();
        let cycle: [Vertex; 5] = {
            let emb = contains_induced(&g, &PatternKind::C5.spec()).unwrap();
            std::array::from_fn(|i| emb[i])
        };
        let parts = c5_expansion_parts(&g, &cycle).unwrap();
        assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), g.n());
        let mut got = sizes(&parts);
        got.sort_unstable();
        assert_eq!(got, [1, 1, 1, 2, 3]);
        for p in &parts {
            assert!(g.is_independent(p));
        }
    }

    #[test]
    fn every_small_expansion_is_handled() {
        // All part-size vectors with entries in 1..=3.
        for code in 0..243usize {
            let s: [usize; 5] = std::array::from_fn(|i| code / 3usize.pow(i as u32) % 3 + 1);
            let g = gen_cycle_expansion(s).unwrap();
            let r = sds_p5_c3_free(&g, Options::default()).unwrap();
            assert!(r.within_bound(), "{s:?}");
            r.certificate.verify(&g).unwrap();
        }
    }

    #[test]
    fn paw_free_branches() {
        let k = gen_complete_multipartite(&[2, 2, 3]).unwrap();
        let r = sds_p5_paw_free(&k, Options::default()).unwrap();
        assert!(r.size() <= 3);
        let e = gen_cycle_expansion([1, 2, 1, 2, 1]).unwrap();
        assert!(sds_p5_paw_free(&e, Options::default()).unwrap().within_bound());
    }

    #[test]
    fn rejects_out_of_class() {
        let two_c5 = crate::generators::gen_disjoint_c5(2);
        assert!(matches!(
            sds_p5_c3_free(&two_c5, Options::default()),
            Err(Error::ClassValidation { .. })
        ));
        let k3 = gen_basic(BasicFamily::Complete, 3).unwrap();
        assert!(matches!(
            sds_p5_c3_free(&k3, Options::default()),
            Err(Error::ClassValidation { .. })
        ));
        let paw = PatternKind::Paw.graph();
        assert!(matches!(
            sds_p5_paw_free(&paw, Options::default()),
            Err(Error::ClassValidation { .. })
        ));
    }
}
