use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("infeasible degree sequence: {0}")]
    InfeasibleSequence(String),
}

/// Nonincreasing vertex degrees of a tree, leaves included.
///
/// The single-vertex tree is the one exception to "all entries are
/// positive": its sequence is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Accepts degrees in any order, sorts them nonincreasing and checks the
    /// tree conditions.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, SequenceError> {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let n = degrees.len();
        if n == 0 {
            return Err(SequenceError::InfeasibleSequence("empty sequence".into()));
        }
        if n == 1 {
            return if degrees[0] == 0 {
                Ok(DegreeSequence(degrees))
            } else {
                Err(SequenceError::InfeasibleSequence("a single vertex has degree 0".into()))
            };
        }
        if degrees[n - 1] == 0 {
            return Err(SequenceError::InfeasibleSequence("zero degree in a tree with n >= 2".into()));
        }
        let sum: usize = degrees.iter().sum();
        if sum != 2 * (n - 1) {
            return Err(SequenceError::InfeasibleSequence(format!(
                "degrees sum to {sum}, expected 2(n-1) = {}",
                2 * (n - 1)
            )));
        }
        Ok(DegreeSequence(degrees))
    }

    pub(crate) fn from_tree_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    /// Wraps a sequence the caller already knows is nonincreasing and valid.
    pub fn from_sorted_unchecked(degrees: Vec<usize>) -> Self {
        debug_assert!(DegreeSequence::new(degrees.clone()).is_ok());
        DegreeSequence(degrees)
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn count(&self, d: usize) -> usize {
        self.0.iter().filter(|&&x| x == d).count()
    }

    pub fn max_degree(&self) -> usize {
        self.0[0]
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = SequenceError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(d: DegreeSequence) -> Self {
        d.0
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}
