//! Small forbidden patterns and exhaustive induced-subgraph search.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::subsets::Combinations;

/// The named patterns used by the graph classes in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    P3,
    P4,
    P5,
    C3,
    C4,
    C5,
    K2,
    TwoK2,
    ThreeK1,
    Claw,
    Paw,
    P3UnionP1,
    P3UnionP2,
    K2UnionTwoK1,
}

impl PatternKind {
    pub const ALL: [PatternKind; 14] = [
        PatternKind::P3,
        PatternKind::P4,
        PatternKind::P5,
        PatternKind::C3,
        PatternKind::C4,
        PatternKind::C5,
        PatternKind::K2,
        PatternKind::TwoK2,
        PatternKind::ThreeK1,
        PatternKind::Claw,
        PatternKind::Paw,
        PatternKind::P3UnionP1,
        PatternKind::P3UnionP2,
        PatternKind::K2UnionTwoK1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::P3 => "P3",
            PatternKind::P4 => "P4",
            PatternKind::P5 => "P5",
            PatternKind::C3 => "C3",
            PatternKind::C4 => "C4",
            PatternKind::C5 => "C5",
            PatternKind::K2 => "K2",
            PatternKind::TwoK2 => "2K2",
            PatternKind::ThreeK1 => "3K1",
            PatternKind::Claw => "claw",
            PatternKind::Paw => "paw",
            PatternKind::P3UnionP1 => "P3+P1",
            PatternKind::P3UnionP2 => "P3+P2",
            PatternKind::K2UnionTwoK1 => "K2+2K1",
        }
    }

    /// Canonical labelled copy of the pattern.
    pub fn graph(self) -> Graph {
        let (n, edges): (usize, &[(Vertex, Vertex)]) = match self {
            PatternKind::P3 => (3, &[(0, 1), (1, 2)]),
            PatternKind::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            PatternKind::P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            PatternKind::C3 => (3, &[(0, 1), (1, 2), (0, 2)]),
            PatternKind::C4 => (4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
            PatternKind::C5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
            PatternKind::K2 => (2, &[(0, 1)]),
            PatternKind::TwoK2 => (4, &[(0, 1), (2, 3)]),
            PatternKind::ThreeK1 => (3, &[]),
            PatternKind::Claw => (4, &[(0, 1), (0, 2), (0, 3)]),
            PatternKind::Paw => (4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
            PatternKind::P3UnionP1 => (4, &[(0, 1), (1, 2)]),
            PatternKind::P3UnionP2 => (5, &[(0, 1), (1, 2), (3, 4)]),
            PatternKind::K2UnionTwoK1 => (4, &[(0, 1)]),
        };
        Graph::new(n, edges.iter().copied()).expect("built-in pattern")
    }

    pub fn spec(self) -> PatternSpec {
        PatternSpec {
            kind: self,
            graph: self.graph(),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase()
            .replace('∪', "+");
        PatternKind::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown pattern `{s}`")))
    }
}

/// A named pattern together with an explicit copy of its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSpec {
    kind: PatternKind,
    graph: Graph,
}

impl PatternSpec {
    /// Accepts any labelling of the named pattern; rejects graphs that are
    /// not isomorphic to it.
    pub fn new(kind: PatternKind, graph: Graph) -> Result<Self> {
        if !is_isomorphic(&graph, &kind.graph()) {
            return Err(Error::Structure(format!(
                "graph {graph:?} is not a copy of {kind}"
            )));
        }
        Ok(Self { kind, graph })
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl From<PatternKind> for PatternSpec {
    fn from(kind: PatternKind) -> Self {
        kind.spec()
    }
}

/// Brute-force isomorphism test; intended for graphs of at most a handful
/// of vertices.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    (0..a.n())
        .permutations(a.n())
        .any(|perm| preserves_adjacency(b, a, &perm))
}

/// True when pattern vertex `i -> image[i]` maps `pattern` onto an induced
/// copy inside `host`.
fn preserves_adjacency(pattern: &Graph, host: &Graph, image: &[Vertex]) -> bool {
    let k = pattern.n();
    (0..k).all(|i| (i + 1..k).all(|j| pattern.is_adjacent(i, j) == host.is_adjacent(image[i], image[j])))
}

/// Precomputed data for repeated searches of one pattern.
struct Matcher<'a> {
    pattern: &'a Graph,
    degrees: Vec<usize>,
    perms: Vec<Vec<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Graph) -> Self {
        let k = pattern.n();
        let mut degrees: Vec<usize> = pattern.vertices().map(|v| pattern.degree(v)).collect();
        degrees.sort_unstable();
        Self {
            pattern,
            degrees,
            perms: (0..k).permutations(k).collect(),
        }
    }

    fn find(&self, g: &Graph) -> Option<Vec<Vertex>> {
        let k = self.pattern.n();
        if k > g.n() {
            return None;
        }
        let mut combos = Combinations::new(g.n(), k);
        let mut degs = vec![0usize; k];
        let mut image = vec![0usize; k];
        while let Some(sub) = combos.next_subset() {
            let mut edges = 0;
            for (i, &u) in sub.iter().enumerate() {
                degs[i] = sub.iter().filter(|&&w| g.is_adjacent(u, w)).count();
                edges += degs[i];
            }
            if edges != 2 * self.pattern.edge_count() {
                continue;
            }
            degs.sort_unstable();
            if degs != self.degrees {
                continue;
            }
            for perm in &self.perms {
                for i in 0..k {
                    image[i] = sub[perm[i]];
                }
                if preserves_adjacency(self.pattern, g, &image) {
                    return Some(image);
                }
            }
        }
        None
    }
}

/// Finds an induced copy of `p` in `g`.
///
/// Subsets of `g` are scanned in lexicographic order and, within a subset,
/// assignments in lexicographic permutation order, so the returned witness
/// is reproducible. `result[i]` is the host vertex playing pattern vertex `i`.
pub fn contains_induced(g: &Graph, p: &PatternSpec) -> Option<Vec<Vertex>> {
    Matcher::new(p.graph()).find(g)
}

/// Whether `g` contains none of `patterns` as an induced subgraph.
pub fn free_of(g: &Graph, patterns: &[PatternSpec]) -> bool {
    patterns.iter().all(|p| contains_induced(g, p).is_none())
}

/// [`free_of`] over built-in pattern names.
pub fn free_of_kinds(g: &Graph, kinds: &[PatternKind]) -> bool {
    kinds.iter().all(|k| contains_induced(g, &k.spec()).is_none())
}

/// Whether an embedding returned by [`contains_induced`] really is an
/// induced, injective copy of `p`.
pub fn verify_embedding(g: &Graph, p: &PatternSpec, image: &[Vertex]) -> bool {
    let k = p.graph().n();
    image.len() == k
        && image.iter().all(|&v| v < g.n())
        && image.iter().all_unique()
        && preserves_adjacency(p.graph(), g, image)
}
