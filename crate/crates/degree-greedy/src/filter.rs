use branch_structure::analyze;
use graph_core::DegreeSequence;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::greedy::greedy_tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown filter '{0}' (known: forbid-internal-degree-2, pendant-path-budget, bk-count-caps, all, none)")]
pub struct FilterError(pub String);

/// Structural pruning of degree sequences. Each toggle removes sequences that
/// cannot belong to an ABC-minimal tree.
///
/// `forbid_internal_degree_2` and `bk_count_caps` are decided on the greedy
/// realization: if a sequence attains the minimum, its greedy tree is itself
/// minimal and therefore has no internal path and respects the caps.
/// The length-based toggles only act for n >= 10 and non-path sequences.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFilter {
    /// No path of degree-2 vertices between two branching vertices.
    pub forbid_internal_degree_2: bool,
    /// Pendant paths have length 2 or 3, at most one of length 3, so the
    /// number of degree-2 vertices is the leaf count or one more.
    pub pendant_path_budget: bool,
    /// At most four B_1, eleven B_2 and four B_4 branches, none larger.
    pub bk_count_caps: bool,
}

impl SequenceFilter {
    pub const NAMES: [&'static str; 3] = ["forbid-internal-degree-2", "pendant-path-budget", "bk-count-caps"];

    pub fn none() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        SequenceFilter { forbid_internal_degree_2: true, pendant_path_budget: true, bk_count_caps: true }
    }

    /// Parses a comma-separated list of toggle names; `all` and `none` are
    /// accepted as shorthands.
    pub fn parse(spec: &str) -> Result<Self, FilterError> {
        let mut f = Self::none();
        for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "all" => f = Self::all(),
                "none" => {}
                "forbid-internal-degree-2" => f.forbid_internal_degree_2 = true,
                "pendant-path-budget" => f.pendant_path_budget = true,
                "bk-count-caps" => f.bk_count_caps = true,
                other => return Err(FilterError(other.to_string())),
            }
        }
        Ok(f)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let on = [self.forbid_internal_degree_2, self.pendant_path_budget, self.bk_count_caps];
        Self::NAMES.iter().zip(on).filter(|(_, b)| *b).map(|(n, _)| *n).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.names().is_empty()
    }

    pub fn admits(&self, ds: &DegreeSequence) -> bool {
        let n = ds.order();
        if self.is_empty() || n < 10 || ds.max_degree() <= 2 {
            return true;
        }
        if self.pendant_path_budget {
            let (n1, n2) = (ds.count(1), ds.count(2));
            if n2 < n1 || n2 > n1 + 1 {
                return false;
            }
        }
        if self.forbid_internal_degree_2 || self.bk_count_caps {
            let p = analyze(&greedy_tree(ds));
            if self.forbid_internal_degree_2 && !p.internal_paths.is_empty() {
                return false;
            }
            if self.bk_count_caps {
                let big = p.b_counts.iter().any(|(&k, &c)| k >= 5 && c > 0);
                if big || p.b_count(1) > 4 || p.b_count(2) > 11 || p.b_count(4) > 4 {
                    return false;
                }
            }
        }
        true
    }
}
