//! Search for trees of minimum ABC index.
//!
//! Two independent methods: exhaustive enumeration of free trees, and the
//! minimum over degree sequences of the greedy tree. Results go to an
//! append-only JSON-lines store so that sweeps can be resumed.

mod growth;
mod search;
mod store;

pub use growth::{check_growth, growth_bound, GrowthViolation};
pub use search::{
    brute_force_min, brute_force_min_with, greedy_sequence_min, greedy_sequence_min_with, sweep, Method,
    SearchConfig, SearchError, SearchRecord, SweepMethod, TIE_TOLERANCE,
};
pub use store::{ResultStore, STORE_SCHEMA};
