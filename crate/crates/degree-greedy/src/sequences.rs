use graph_core::DegreeSequence;
use serde::{Deserialize, Serialize};

use crate::filter::SequenceFilter;

/// Resume point of a sequence stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    pub last_emitted: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
struct Frame {
    /// Next value to try for the part after this prefix; below 2 once the
    /// children are exhausted.
    next_part: usize,
    /// Smallest value allowed for that part.
    low: usize,
    /// Whether this prefix completed with ones has been considered.
    done: bool,
}

/// Degree sequences of trees of order `n` in lexicographically decreasing
/// order.
///
/// A degree sequence minus one in every entry is a partition of `n - 2`
/// padded with zeros. The stream walks the parts of size at least 2 depth
/// first, largest first; a prefix completed with ones comes after all of its
/// extensions. With the pendant-path budget on, prefixes that can no longer
/// satisfy it are cut, which keeps orders around 100 tractable.
#[derive(Debug, Clone)]
pub struct SequenceStream {
    n: usize,
    filter: SequenceFilter,
    parts: Vec<usize>,
    frames: Vec<Frame>,
    rem: usize,
    /// The all-ones completion of the empty prefix (the path) is emitted.
    emit_path: bool,
    last_emitted: Option<Vec<usize>>,
}

/// Every degree sequence of order `n` passing `filter`.
pub fn enumerate_degree_sequences(n: usize, filter: SequenceFilter) -> SequenceStream {
    let m = n.saturating_sub(2);
    let frames = if n >= 2 { vec![Frame { next_part: m, low: 2, done: false }] } else { Vec::new() };
    SequenceStream { n, filter, parts: Vec::new(), frames, rem: m, emit_path: true, last_emitted: None }
}

/// Number of unfiltered degree sequences of order `n`, i.e. p(n - 2).
pub fn count_degree_sequences(n: usize) -> u64 {
    if n < 2 {
        return 0;
    }
    let m = n - 2;
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for s in part..=m {
            p[s] += p[s - part];
        }
    }
    p[m]
}

impl SequenceStream {
    /// Restricts the stream to sequences whose largest degree is `max_degree`.
    /// Shards for different values are disjoint and together cover the stream.
    pub fn shard(mut self, max_degree: usize) -> Self {
        let m = self.n.saturating_sub(2);
        let path_degree = if m == 0 { 1 } else { 2 };
        self.emit_path = max_degree == path_degree;
        if let Some(root) = self.frames.first_mut() {
            if max_degree >= 3 && max_degree - 1 <= m {
                root.next_part = max_degree - 1;
                root.low = max_degree - 1;
            } else {
                root.next_part = 0;
            }
        }
        self
    }

    /// Continues after the sequence recorded in `cp`.
    pub fn resume(cp: &Checkpoint, filter: SequenceFilter) -> Self {
        let mut s = enumerate_degree_sequences(cp.n, filter);
        let Some(last) = &cp.last_emitted else { return s };
        s.last_emitted = Some(last.clone());
        let big: Vec<usize> = last.iter().map(|d| d - 1).filter(|&x| x >= 2).collect();
        let m = cp.n - 2;
        s.frames.clear();
        s.frames.push(Frame { next_part: big.first().map_or(0, |v| v - 1), low: 2, done: false });
        let mut rem = m;
        for (i, &v) in big.iter().enumerate() {
            rem -= v;
            let next_part = if i + 1 < big.len() { big[i + 1] - 1 } else { 0 };
            s.frames.push(Frame { next_part, low: 2, done: false });
        }
        s.frames.last_mut().unwrap().done = true;
        s.parts = big;
        s.rem = rem;
        s
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint { n: self.n, last_emitted: self.last_emitted.clone() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn budget_active(&self) -> bool {
        self.filter.pendant_path_budget && self.n >= 10
    }

    /// 2 * (degree-2 count) - (leaf count) once the prefix is completed with
    /// ones. The budget needs this in {0, 1}; every further part lowers it.
    fn slack(&self, q: usize, rem: usize) -> i64 {
        2 * rem as i64 + q as i64 - self.n as i64
    }

    fn sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = self.parts.iter().map(|x| x + 1).collect();
        d.extend(std::iter::repeat_n(2, self.rem));
        d.resize(self.n, 1);
        DegreeSequence::from_sorted_unchecked(d)
    }
}

impl Iterator for SequenceStream {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let depth = self.frames.len();
            let top = self.frames.last_mut()?;
            let cap = top.next_part.min(self.rem);
            if cap >= top.low && cap >= 2 {
                top.next_part = cap - 1;
                let v = cap;
                if self.budget_active() && self.slack(depth, self.rem - v) < 0 {
                    // smaller parts leave more slack, so keep trying
                    continue;
                }
                self.parts.push(v);
                self.rem -= v;
                self.frames.push(Frame { next_part: v, low: 2, done: false });
                continue;
            }
            if !top.done {
                top.done = true;
                let is_path = self.parts.is_empty();
                let keep = if is_path {
                    self.emit_path
                } else {
                    !self.budget_active() || (0..=1).contains(&self.slack(self.parts.len(), self.rem))
                };
                if keep {
                    let ds = self.sequence();
                    if self.filter.admits(&ds) {
                        self.last_emitted = Some(ds.as_slice().to_vec());
                        return Some(ds);
                    }
                }
                continue;
            }
            self.frames.pop();
            if let Some(v) = self.parts.pop() {
                self.rem += v;
            }
        }
    }
}
