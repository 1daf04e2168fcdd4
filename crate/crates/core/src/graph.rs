//! Immutable simple undirected graphs over dense vertex indices, and vertex
//! subsets of such graphs.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex index in `0..n`.
pub type Vertex = usize;

/// A subset of the vertices of a graph with `universe` vertices.
///
/// Iteration is always in ascending vertex order. Sets compare
/// lexicographically by their ascending membership sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from members; panics if a member is `>= universe`.
    pub fn from_vertices(universe: usize, members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = Self::empty(universe);
        for v in members {
            set.insert(v);
        }
        set
    }

    /// Like [`VertexSet::from_vertices`] but reports out-of-range members.
    pub fn try_from_vertices(
        universe: usize,
        members: impl IntoIterator<Item = Vertex>,
    ) -> Result<Self> {
        let mut set = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Number of vertices of the owning graph.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe()
        );
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.universe() {
            self.bits.set(v, false);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    /// Copy of `self` with `v` added.
    pub fn with(&self, v: Vertex) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// Copy of `self` with `v` removed.
    pub fn without(&self, v: Vertex) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Whether a vertex set is checked for independence or for being a clique.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Independent,
    Clique,
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bit row per vertex, so pair queries and
/// neighbourhood reads do not depend on the number of edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Self { adj, edge_count })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Open neighbourhood of `v` without bounds checking beyond the slice index.
    pub fn adjacency(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// Open or closed neighbourhood of `v`.
    pub fn neighbors(&self, v: Vertex, closed: bool) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(if closed {
            self.adj[v].with(v)
        } else {
            self.adj[v].clone()
        })
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N(X)`: vertices outside `x` with a neighbour in `x`.
    pub fn set_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n());
        for v in x.iter() {
            out = out.union(&self.adj[v]);
        }
        out.difference(x)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        if x.universe() == self.n() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.n(),
                found: x.universe(),
            })
        }
    }

    /// Subgraph induced by `x`. The returned map sends each new index to its
    /// original vertex; new indices follow ascending original order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(x)?;
        let map = x.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::empty(k); k];
        let mut edge_count = 0;
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(x).iter() {
                adj[i].insert(position[w]);
                if w > v {
                    edge_count += 1;
                }
            }
        }
        Ok((Graph { adj, edge_count }, map))
    }

    /// Subgraph induced by `x`, returning only the graph.
    pub fn induced(&self, x: &VertexSet) -> Graph {
        self.induced_subgraph(x)
            .expect("set drawn from this graph")
            .0
    }

    /// Disjoint union; the `k`-th graph's vertices are offset by the total
    /// size of the graphs before it.
    pub fn disjoint_union<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Graph {
        let graphs: Vec<&Graph> = graphs.into_iter().collect();
        let n = graphs.iter().map(|g| g.n()).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in &graphs {
            edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += g.n();
        }
        Graph::new(n, edges).expect("offset edges stay in range")
    }

    /// Connected components ordered by their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(n);
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn set_predicate(&self, x: &VertexSet, kind: SetKind) -> bool {
        match kind {
            SetKind::Independent => self.is_independent(x),
            SetKind::Clique => self.is_clique(x),
        }
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        let k = x.len();
        x.iter().all(|v| self.adj[v].intersection_len(x) + 1 == k)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.is_adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("complement of a valid graph")
    }

    /// Graph with vertices renamed by `perm` (old `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        Graph::new(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
