//! Greedy trees and degree-sequence enumeration.
//!
//! The greedy tree of a degree sequence minimizes the ABC index among all
//! trees with that sequence, so a search for the minimum over all trees of
//! order n only has to look at one tree per sequence.

mod filter;
mod greedy;
mod sequences;

pub use filter::{FilterError, SequenceFilter};
pub use greedy::{greedy_from_degrees, greedy_tree, random_tree_with_degrees};
pub use sequences::{count_degree_sequences, enumerate_degree_sequences, Checkpoint, SequenceStream};
