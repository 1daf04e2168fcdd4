//! Constructions of size at most `α + 1` or `max{3, α}` for graphs without
//! an induced P3+P2, P3+P1 or K2+2K1.

use crate::construct::{certify, validate_patterns, Bound, ConstructionResult, Options};
use crate::domination::{ab_partition_unchecked, epn_unchecked, max_independent_set};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::pattern::PatternKind;

/// `I` itself if it is already secure, otherwise `I + x` where `x` is a
/// private external neighbour of the smallest member of `I` with an
/// undefended neighbour.
fn add_one_private(g: &Graph, i: &VertexSet) -> Result<VertexSet> {
    let ab = ab_partition_unchecked(g, i);
    let Some(u) = ab.a_set.first() else {
        return Ok(i.clone());
    };
    let x = epn_unchecked(g, i, u).first().ok_or_else(|| {
        Error::Structure(format!(
            "{u} has an undefended neighbour but no private neighbour"
        ))
    })?;
    Ok(i.with(x))
}

/// Secure dominating set of size at most `α + 1` for a (P3+P2)-free graph.
pub fn sds_p3p2_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    if opts.validate {
        validate_patterns(g, "p3up2-free", &[PatternKind::P3UnionP2])?;
    }
    let i = max_independent_set(g)?;
    let alpha = i.len();
    let s = add_one_private(g, &i)?;
    certify(g, s, Bound::from_int(alpha + 1), None)
}

/// When `α >= 3` the maximum independent set is itself secure; otherwise
/// the graph is (P3+P2)-free and the `α + 1` construction applies.
fn max_three_construction(g: &Graph) -> Result<ConstructionResult> {
    let i = max_independent_set(g)?;
    let alpha = i.len();
    let s = if alpha >= 3 { i } else { add_one_private(g, &i)? };
    certify(g, s, Bound::max_three(alpha), None)
}

/// Secure dominating set of size at most `max{3, α}` for a (P3+P1)-free
/// graph.
pub fn sds_p3p1_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    if opts.validate {
        validate_patterns(g, "p3up1-free", &[PatternKind::P3UnionP1])?;
    }
    max_three_construction(g)
}

/// Secure dominating set of size at most `max{3, α}` for a (K2+2K1)-free
/// graph.
pub fn sds_k2_2k1_free(g: &Graph, opts: Options) -> Result<ConstructionResult> {
    if opts.validate {
        validate_patterns(g, "k2u2k1-free", &[PatternKind::K2UnionTwoK1])?;
    }
    max_three_construction(g)
}
