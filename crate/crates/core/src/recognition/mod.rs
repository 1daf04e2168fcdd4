//! Forbidden-pattern tests, class recognition and buoy structure.

pub mod buoy;
pub mod classes;
pub mod pattern;

pub use buoy::{find_buoy, fouquet_decompose, BuoyDecomposition, FouquetDecomposition};
pub use classes::{classify, is_bipartite, is_complete_multipartite, ClassReport, GraphClass};
pub use pattern::{
    contains_induced, free_of, free_of_kinds, is_isomorphic, verify_embedding, PatternKind,
    PatternSpec,
};
