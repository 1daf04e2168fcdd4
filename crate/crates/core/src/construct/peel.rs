//! `max{3, α}` construction for connected (P5, C4)-free graphs, by peeling
//! one part off a complete buoy and recursing.

use crate::construct::{
    certify, exact_within_alpha, require_connected, validate_patterns, Bound, ConstructionResult,
    Options,
};
use crate::domination::{is_secure_dominating, max_independent_set};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::buoy::fouquet_decompose;
use crate::recognition::pattern::PatternKind;

/// Secure dominating set of size at most `max{3, α}` for a connected
/// (P5, C4)-free graph.
///
/// Without buoys the graph is C5-free and the exact solver is used. A graph
/// that is a single buoy `A1..A5` gets `{a1, a2, a4}`. Otherwise, for the
/// first buoy `B` (whose neighbourhood is a non-empty clique), the set
/// `S'` for `G - A5` is computed recursively and repaired:
/// if `S'` misses `N(B)`, two of its vertices in `B` are swapped for one
/// vertex of `A2` and one of `N(B)`; if `S'` meets `N(B)` and has at least
/// two vertices in `B`, those two are swapped for one vertex each of `A2`
/// and `A4`; otherwise `S'` is kept. Every level is certified.
pub fn sds_p5_c4_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    require_connected(g, "p5c4-free")?;
    if opts.validate {
        validate_patterns(g, "p5c4-free", &[PatternKind::P5, PatternKind::C4])?;
    }
    let alpha = max_independent_set(g)?.len();
    let set = peel(g)?;
    certify(g, set, Bound::max_three(alpha), None)
}

fn peel(g: &Graph) -> Result<VertexSet> {
    if g.n() <= 1 {
        return Ok(g.vertex_set());
    }
    let dec = fouquet_decompose(g)?;
    let Some(first) = dec.buoys.first() else {
        let alpha = max_independent_set(g)?.len();
        return exact_within_alpha(g, alpha);
    };
    let b = first.vertices();
    let nb = g.set_neighborhood(&b);
    let lead = |i: usize| first.parts[i].first().expect("buoy parts are non-empty");
    if nb.is_empty() {
        // Connected, so G is the buoy.
        return certified(g, VertexSet::from_vertices(g.n(), [lead(0), lead(1), lead(3)]));
    }
    let keep = first.parts[4].complement();
    let (h, map) = g.induced_subgraph(&keep)?;
    if !h.is_connected() {
        return Err(Error::Structure("removing a buoy part disconnected the graph".into()));
    }
    let inner = peel(&h)?;
    let s = VertexSet::from_vertices(g.n(), inner.iter().map(|v| map[v]));
    let in_b = s.intersection(&b).to_vec();
    let repaired = if s.is_disjoint(&nb) {
        if in_b.len() < 2 {
            return Err(Error::Structure(
                "recursive set misses N(B) but has fewer than two buoy vertices".into(),
            ));
        }
        let x = nb.first().expect("N(B) is non-empty");
        s.without(in_b[0]).without(in_b[1]).with(lead(1)).with(x)
    } else if in_b.len() >= 2 {
        s.without(in_b[0]).without(in_b[1]).with(lead(1)).with(lead(3))
    } else {
        s
    };
    certified(g, repaired)
}

fn certified(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    is_secure_dominating(g, &s).map_err(|e| Error::Certification { vertex: e.vertex() })?;
    Ok(s)
}
