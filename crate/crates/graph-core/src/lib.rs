//! Core tree types shared by the rest of the workspace.
//!
//! A [`Tree`] is validated once at construction and never mutated afterwards,
//! so it can be shared freely between worker threads.

mod canonical;
mod degree;
mod export;
pub mod graph6;
mod tree;

pub use canonical::{canonical_form, canonical_tree, centroids};
pub use degree::{DegreeSequence, SequenceError};
pub use export::{to_dot, to_json, tree_from_json, TreeJson};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use tree::{validate_tree, RootedView, Tree, TreeError};
