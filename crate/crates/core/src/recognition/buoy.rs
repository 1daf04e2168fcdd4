//! Complete buoys (clique blow-ups of a 5-cycle) and the decomposition of
//! connected (P5, C4)-free graphs into a cycle-free part and buoys.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::pattern::{contains_induced, free_of_kinds, PatternKind};

/// Five cliques `A1..A5` in cyclic order; consecutive parts are completely
/// joined and parts two apart have no edges between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuoyDecomposition {
    pub parts: [VertexSet; 5],
}

impl BuoyDecomposition {
    pub fn vertices(&self) -> VertexSet {
        self.parts
            .iter()
            .skip(1)
            .fold(self.parts[0].clone(), |acc, p| acc.union(p))
    }

    /// Checks the defining conditions of a complete buoy on `g`, restricted
    /// to the buoy's own vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (i, part) in self.parts.iter().enumerate() {
            g.check_set(part)?;
            if part.is_empty() {
                return Err(Error::Structure(format!("buoy part A{} is empty", i + 1)));
            }
            if !g.is_clique(part) {
                return Err(Error::Structure(format!("buoy part A{} is not a clique", i + 1)));
            }
            for j in i + 1..5 {
                if !part.is_disjoint(&self.parts[j]) {
                    return Err(Error::Structure("buoy parts overlap".into()));
                }
            }
            let next = &self.parts[(i + 1) % 5];
            let skip = &self.parts[(i + 2) % 5];
            for v in part.iter() {
                if !next.is_subset(g.adjacency(v)) {
                    return Err(Error::Structure(format!(
                        "[A{}, A{}] is not complete",
                        i + 1,
                        (i + 1) % 5 + 1
                    )));
                }
                if !skip.is_disjoint(g.adjacency(v)) {
                    return Err(Error::Structure(format!(
                        "[A{}, A{}] is not empty",
                        i + 1,
                        (i + 2) % 5 + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Slot `i` for a vertex adjacent to exactly cycle positions `i-1, i, i+1`
/// of `cycle` (restricted to `within`), or `None`.
fn slot_on_cycle(g: &Graph, cycle: &[Vertex; 5], w: Vertex) -> Option<usize> {
    let mask: u8 = (0..5)
        .filter(|&i| g.is_adjacent(w, cycle[i]))
        .fold(0, |m, i| m | (1 << i));
    (0..5).find(|&i| mask == (1 << i) | (1 << ((i + 4) % 5)) | (1 << ((i + 1) % 5)))
}

/// Grows a buoy around an induced 5-cycle: each vertex of `pool` whose
/// neighbourhood on the cycle is three consecutive cycle vertices joins the
/// part of the middle one.
fn grow_from_cycle(g: &Graph, cycle: [Vertex; 5], pool: &VertexSet) -> BuoyDecomposition {
    let n = g.n();
    let mut parts: [VertexSet; 5] = std::array::from_fn(|i| VertexSet::from_vertices(n, [cycle[i]]));
    for w in pool.iter() {
        if cycle.contains(&w) {
            continue;
        }
        if let Some(i) = slot_on_cycle(g, &cycle, w) {
            parts[i].insert(w);
        }
    }
    BuoyDecomposition { parts }
}

/// First induced 5-cycle of `g[within]`, in cyclic order, as vertices of `g`.
fn find_c5_within(g: &Graph, within: &VertexSet) -> Option<[Vertex; 5]> {
    let (sub, map) = g.induced_subgraph(within).ok()?;
    let emb = contains_induced(&sub, &PatternKind::C5.spec())?;
    Some(std::array::from_fn(|i| map[emb[i]]))
}

/// Recognises `g` itself as a complete buoy.
///
/// The parts are seeded from the first induced 5-cycle; part `i` holds the
/// vertices adjacent to exactly cycle positions `i-1, i, i+1`.
pub fn find_buoy(g: &Graph) -> Option<BuoyDecomposition> {
    let all = g.vertex_set();
    let cycle = find_c5_within(g, &all)?;
    let buoy = grow_from_cycle(g, cycle, &all);
    if buoy.vertices().len() != g.n() {
        return None;
    }
    buoy.validate(g).ok()?;
    Some(buoy)
}

/// `V1` (no induced cycle of length 4 or 5) plus vertex-disjoint maximal
/// complete buoys covering the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FouquetDecomposition {
    pub v1: VertexSet,
    pub buoys: Vec<BuoyDecomposition>,
}

impl FouquetDecomposition {
    /// Re-checks every structural property the decomposition promises.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.v1)?;
        let mut covered = self.v1.clone();
        for buoy in &self.buoys {
            buoy.validate(g)?;
            let b = buoy.vertices();
            if !covered.is_disjoint(&b) {
                return Err(Error::Structure("buoys overlap each other or V1".into()));
            }
            covered = covered.union(&b);
            check_homogeneous(g, &b)?;
            let nb = g.set_neighborhood(&b);
            if !nb.is_subset(&self.v1) {
                return Err(Error::Structure("buoy neighbourhood leaves V1".into()));
            }
            if !g.is_clique(&nb) {
                return Err(Error::Structure("buoy neighbourhood is not a clique".into()));
            }
        }
        if covered.len() != g.n() {
            return Err(Error::Structure("decomposition does not cover V".into()));
        }
        let v1 = g.induced(&self.v1);
        if !free_of_kinds(&v1, &[PatternKind::C4, PatternKind::C5]) {
            return Err(Error::Structure("G[V1] has an induced C4 or C5".into()));
        }
        Ok(())
    }
}

fn check_homogeneous(g: &Graph, b: &VertexSet) -> Result<()> {
    for w in b.complement().iter() {
        let k = g.adjacency(w).intersection_len(b);
        if k != 0 && k != b.len() {
            return Err(Error::Structure(format!(
                "vertex {w} sees part but not all of a buoy"
            )));
        }
    }
    Ok(())
}

/// Decomposes a connected (P5, C4)-free graph.
///
/// Repeatedly takes the first induced 5-cycle among the vertices not yet
/// placed in a buoy, grows it to the buoy of all vertices with a
/// three-consecutive pattern on the cycle, and checks the buoy is a
/// homogeneous set with a clique neighbourhood. The vertices left over
/// form `V1`.
pub fn fouquet_decompose(g: &Graph) -> Result<FouquetDecomposition> {
    if !g.is_connected() {
        return Err(Error::ClassValidation {
            class: "connected (P5,C4)-free".into(),
            reason: "graph is disconnected".into(),
        });
    }
    for kind in [PatternKind::P5, PatternKind::C4] {
        if contains_induced(g, &kind.spec()).is_some() {
            return Err(Error::ClassValidation {
                class: "connected (P5,C4)-free".into(),
                reason: format!("contains an induced {kind}"),
            });
        }
    }
    let mut remaining = g.vertex_set();
    let mut buoys = Vec::new();
    while let Some(cycle) = find_c5_within(g, &remaining) {
        let buoy = grow_from_cycle(g, cycle, &remaining);
        buoy.validate(g)?;
        let b = buoy.vertices();
        check_homogeneous(g, &b)?;
        if !g.is_clique(&g.set_neighborhood(&b)) {
            return Err(Error::Structure("buoy neighbourhood is not a clique".into()));
        }
        remaining = remaining.difference(&b);
        buoys.push(buoy);
    }
    let dec = FouquetDecomposition {
        v1: remaining,
        buoys,
    };
    dec.validate(g)?;
    Ok(dec)
}
