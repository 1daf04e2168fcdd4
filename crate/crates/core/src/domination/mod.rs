//! Domination, secure domination and the defended-vertex machinery, plus
//! exact solvers for the independence, domination and secure domination
//! numbers.

mod exact;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use exact::{
    independence_number, max_independent_set, min_dominating_set, min_secure_dominating_set,
    EXACT_MAX_VERTICES,
};

/// Whether every vertex outside `s` has a neighbour in `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    first_undominated(g, s).is_none()
}

/// Smallest vertex with no neighbour in `s` (members of `s` dominate
/// themselves).
pub fn first_undominated(g: &Graph, s: &VertexSet) -> Option<Vertex> {
    g.vertices()
        .find(|&v| !s.contains(v) && g.adjacency(v).is_disjoint(s))
}

/// External private neighbourhood of `u` with respect to `d`: the vertices
/// outside `d` whose only neighbour in `d` is `u`.
pub fn epn(g: &Graph, d: &VertexSet, u: Vertex) -> Result<VertexSet> {
    g.check_set(d)?;
    g.check_vertex(u)?;
    if !d.contains(u) {
        return Err(Error::NotInSet(u));
    }
    Ok(epn_unchecked(g, d, u))
}

pub(crate) fn epn_unchecked(g: &Graph, d: &VertexSet, u: Vertex) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for w in g.adjacency(u).iter() {
        if !d.contains(w) && g.adjacency(w).intersection_len(d) == 1 {
            out.insert(w);
        }
    }
    out
}

/// Smallest `u` in `N(v) ∩ s` such that swapping `u` out for `v` keeps `s`
/// dominating.
///
/// Requires `s` dominating and `v` outside `s`.
pub fn defended_by(g: &Graph, s: &VertexSet, v: Vertex) -> Result<Option<Vertex>> {
    g.check_set(s)?;
    g.check_vertex(v)?;
    if s.contains(v) {
        return Err(Error::InSet(v));
    }
    if let Some(w) = first_undominated(g, s) {
        return Err(Error::NotDominating(w));
    }
    Ok(defender_unchecked(g, s, v))
}

/// The swap `u -> v` keeps domination exactly when every private external
/// neighbour of `u` lies in `N[v]`.
pub(crate) fn defender_unchecked(g: &Graph, s: &VertexSet, v: Vertex) -> Option<Vertex> {
    let closed_v = g.closed_neighborhood(v);
    g.adjacency(v)
        .intersection(s)
        .iter()
        .find(|&u| epn_unchecked(g, s, u).is_subset(&closed_v))
}

pub(crate) fn is_defended(g: &Graph, s: &VertexSet, v: Vertex) -> bool {
    defender_unchecked(g, s, v).is_some()
}

/// A secure dominating set together with one defender per outside vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefenseCertificate {
    pub set: VertexSet,
    pub defenders: BTreeMap<Vertex, Vertex>,
}

impl DefenseCertificate {
    /// Re-checks the certificate from the definition: `set` dominates, and
    /// every swap `(set - u) + v` dominates.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.set)?;
        if let Some(w) = first_undominated(g, &self.set) {
            return Err(Error::NotDominating(w));
        }
        for v in self.set.complement().iter() {
            let Some(&u) = self.defenders.get(&v) else {
                return Err(Error::Certification { vertex: v });
            };
            if !self.set.contains(u) || !g.is_adjacent(u, v) {
                return Err(Error::Certification { vertex: v });
            }
            let swapped = self.set.without(u).with(v);
            if !is_dominating(g, &swapped) {
                return Err(Error::Certification { vertex: v });
            }
        }
        if self.defenders.keys().any(|&v| self.set.contains(v)) {
            return Err(Error::Structure("defender listed for a member of the set".into()));
        }
        Ok(())
    }
}

/// Why a set failed to be secure dominating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insecurity {
    /// The smallest vertex without a neighbour in the set.
    Undominated(Vertex),
    /// The smallest outside vertex without a defender.
    Undefended(Vertex),
}

impl Insecurity {
    pub fn vertex(self) -> Vertex {
        match self {
            Insecurity::Undominated(v) | Insecurity::Undefended(v) => v,
        }
    }
}

/// Certificate when `s` is a secure dominating set, otherwise the first
/// failing vertex.
pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> std::result::Result<DefenseCertificate, Insecurity> {
    assert_eq!(s.universe(), g.n(), "vertex set from a different graph");
    if let Some(w) = first_undominated(g, s) {
        return Err(Insecurity::Undominated(w));
    }
    let mut defenders = BTreeMap::new();
    for v in s.complement().iter() {
        match defender_unchecked(g, s, v) {
            Some(u) => {
                defenders.insert(v, u);
            }
            None => return Err(Insecurity::Undefended(v)),
        }
    }
    Ok(DefenseCertificate {
        set: s.clone(),
        defenders,
    })
}

/// Split of a dominating set into members with an undefended outside
/// neighbour (`a_set`) and the rest (`b_set`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABPartition {
    pub a_set: VertexSet,
    pub b_set: VertexSet,
}

pub fn ab_partition(g: &Graph, d: &VertexSet) -> Result<ABPartition> {
    g.check_set(d)?;
    if let Some(w) = first_undominated(g, d) {
        return Err(Error::NotDominating(w));
    }
    Ok(ab_partition_unchecked(g, d))
}

pub(crate) fn ab_partition_unchecked(g: &Graph, d: &VertexSet) -> ABPartition {
    let mut a_set = VertexSet::empty(g.n());
    for v in d.complement().iter() {
        if !is_defended(g, d, v) {
            a_set = a_set.union(&g.adjacency(v).intersection(d));
        }
    }
    ABPartition {
        b_set: d.difference(&a_set),
        a_set,
    }
}
