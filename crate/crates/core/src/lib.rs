//! Secure domination in P5-free graphs and related classes.
//!
//! The crate provides an undirected simple graph type, induced-pattern
//! recognition, exact solvers for the independence, domination and secure
//! domination numbers, certified constructions of small secure dominating
//! sets, graph generators, and the evaluation harness used by the CLI.

pub mod construct;
pub mod domination;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod recognition;
pub mod subsets;

pub use construct::{construct_for_class, Bound, ConstructionClass, ConstructionResult, Options};
pub use domination::{
    defended_by, epn, independence_number, is_dominating, is_secure_dominating,
    max_independent_set, min_dominating_set, min_secure_dominating_set, DefenseCertificate,
    Insecurity,
};
pub use error::{Error, Result};
pub use graph::{Graph, SetKind, Vertex, VertexSet};
pub use recognition::{classify, contains_induced, GraphClass, PatternKind, PatternSpec};
