//! Minimum simple set representations of line graphs and complete graphs.

pub mod canon;
pub mod classify;
pub mod cover;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod representation;
pub mod theorems;

pub use canon::{canonical_form, isomorphic, partition_into_classes, CanonicalForm, IsoClass};
pub use cover::{egp_cover, egp_set, CliqueCover, CoverReport};
pub use error::{Error, Result};
pub use graph::{line_graph, parse_graph, Graph, LineGraphMap};
pub use representation::{
    category_flags, represents, Category, CategoryFlags, Represents, SetRepresentation,
};
