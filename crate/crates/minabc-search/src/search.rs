use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use abc_metric::abc_index;
use degree_greedy::{enumerate_degree_sequences, greedy_tree, SequenceFilter};
use graph_core::{canonical_form, canonical_tree, decode_graph6, encode_graph6, Tree};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use tree_enum::{enumerate_free_trees, EnumError};

use crate::store::ResultStore;

/// Two trees whose ABC values differ by at most this much count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

const BATCH: usize = 8192;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("empty range: from {from} is larger than to {to}")]
    EmptyRange { from: usize, to: usize },
    #[error("result store is corrupt at line {line}: {reason}")]
    StoreCorrupt { line: usize, reason: String },
    #[error("i/o error on the result store: {0}")]
    Io(#[from] std::io::Error),
    #[error("could not start the worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("brute force and greedy-seq disagree at n = {n}: {brute} vs {greedy}")]
    Mismatch { n: usize, brute: f64, greedy: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "greedy-seq")]
    GreedySeq,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::GreedySeq => "greedy-seq",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMethod {
    Brute,
    GreedySeq,
    Both,
}

impl SweepMethod {
    fn methods(self) -> &'static [Method] {
        match self {
            SweepMethod::Brute => &[Method::Brute],
            SweepMethod::GreedySeq => &[Method::GreedySeq],
            SweepMethod::Both => &[Method::Brute, Method::GreedySeq],
        }
    }
}

impl FromStr for SweepMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "brute" => Ok(SweepMethod::Brute),
            "greedy-seq" | "greedy" => Ok(SweepMethod::GreedySeq),
            "both" => Ok(SweepMethod::Both),
            _ => Err(format!("unknown method '{s}' (expected brute, greedy-seq or both)")),
        }
    }
}

/// Result of a search at one order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchRecord {
    pub n: usize,
    pub abc: f64,
    /// graph6 of the canonical form of the witness.
    pub tree_g6: String,
    pub degree_sequence: Vec<usize>,
    pub method: Method,
    /// Seconds.
    pub wall_time: f64,
    /// Number of non-isomorphic minimizers seen; greedy-seq counts one per
    /// degree sequence.
    pub ties: u64,
}

impl SearchRecord {
    pub fn witness(&self) -> Result<Tree, String> {
        decode_graph6(&self.tree_g6).map_err(|e| e.to_string())
    }

    /// Checks that the witness reproduces the stored order, value and degree
    /// sequence.
    pub fn verify(&self) -> Result<(), String> {
        let t = self.witness()?;
        if t.order() != self.n {
            return Err(format!("witness has order {}, record says {}", t.order(), self.n));
        }
        let a = abc_index(&t);
        if (a - self.abc).abs() > TIE_TOLERANCE {
            return Err(format!("witness has abc {a:.15}, record says {:.15}", self.abc));
        }
        if t.degree_sequence().as_slice() != self.degree_sequence.as_slice() {
            return Err("degree sequence does not match the witness".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchConfig {
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Recompute orders that are already in the store.
    pub force: bool,
}

/// Running minimum with canonical-form tie-break.
struct Best {
    abc: f64,
    form: Vec<u8>,
    tree: Option<Tree>,
    ties: u64,
}

impl Best {
    fn new() -> Self {
        Best { abc: f64::INFINITY, form: Vec::new(), tree: None, ties: 0 }
    }

    fn offer(&mut self, a: f64, t: impl FnOnce() -> Tree) {
        if a < self.abc - TIE_TOLERANCE {
            let t = t();
            self.abc = a;
            self.form = canonical_form(&t);
            self.tree = Some(t);
            self.ties = 1;
        } else if (a - self.abc).abs() <= TIE_TOLERANCE {
            let t = t();
            let form = canonical_form(&t);
            self.ties += 1;
            if form < self.form {
                self.abc = a;
                self.form = form;
                self.tree = Some(t);
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        let Some(t) = other.tree else { return self };
        if other.abc < self.abc - TIE_TOLERANCE {
            return Best { tree: Some(t), ..other };
        }
        if (other.abc - self.abc).abs() <= TIE_TOLERANCE {
            self.ties += other.ties;
            if other.form < self.form {
                self.abc = other.abc;
                self.form = other.form;
                self.tree = Some(t);
            }
        }
        self
    }

    fn into_record(self, n: usize, method: Method, start: Instant) -> SearchRecord {
        let t = canonical_tree(&self.tree.expect("at least one tree per order"));
        SearchRecord {
            n,
            abc: abc_index(&t),
            tree_g6: encode_graph6(&t),
            degree_sequence: t.degree_sequence().as_slice().to_vec(),
            method,
            wall_time: start.elapsed().as_secs_f64(),
            ties: self.ties,
        }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, SearchError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(workers).build()?)
}

pub fn brute_force_min(n: usize) -> Result<SearchRecord, SearchError> {
    brute_force_min_with(n, 0)
}

/// Exhaustive minimum over all free trees of order `n`. Trees are scored in
/// parallel batches and folded in stream order, so the result does not depend
/// on the worker count.
pub fn brute_force_min_with(n: usize, workers: usize) -> Result<SearchRecord, SearchError> {
    if n < 2 {
        return Err(SearchError::OrderTooSmall(n));
    }
    let start = Instant::now();
    let mut trees = enumerate_free_trees(n)?;
    let pool = pool(workers)?;
    let mut best = Best::new();
    loop {
        let batch: Vec<Tree> = trees.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        let scores: Vec<f64> = pool.install(|| batch.par_iter().map(abc_index).collect());
        for (t, a) in batch.into_iter().zip(scores) {
            best.offer(a, || t);
        }
    }
    Ok(best.into_record(n, Method::Brute, start))
}

pub fn greedy_sequence_min(n: usize, filter: SequenceFilter) -> Result<SearchRecord, SearchError> {
    greedy_sequence_min_with(n, filter, 0)
}

/// Minimum of the greedy tree over all degree sequences passing `filter`.
/// Shards by largest degree run in parallel and are merged in shard order.
pub fn greedy_sequence_min_with(n: usize, filter: SequenceFilter, workers: usize) -> Result<SearchRecord, SearchError> {
    if n < 2 {
        return Err(SearchError::OrderTooSmall(n));
    }
    let start = Instant::now();
    let pool = pool(workers)?;
    let shards: Vec<Best> = pool.install(|| {
        (1..n)
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|d| {
                let mut best = Best::new();
                for ds in enumerate_degree_sequences(n, filter).shard(d) {
                    let t = greedy_tree(&ds);
                    best.offer(abc_index(&t), || t);
                }
                best
            })
            .collect()
    });
    let best = shards.into_iter().fold(Best::new(), Best::merge);
    Ok(best.into_record(n, Method::GreedySeq, start))
}

/// Runs `method` for every order in `from..=to`, skipping orders already in
/// the store unless `config.force` is set. With [`SweepMethod::Both`] the two
/// results must agree.
pub fn sweep(
    from: usize,
    to: usize,
    method: SweepMethod,
    filter: SequenceFilter,
    mut store: Option<&mut ResultStore>,
    config: SearchConfig,
) -> Result<Vec<SearchRecord>, SearchError> {
    if from > to {
        return Err(SearchError::EmptyRange { from, to });
    }
    if from < 2 {
        return Err(SearchError::OrderTooSmall(from));
    }
    let mut out = Vec::new();
    for n in from..=to {
        for &m in method.methods() {
            let cached = store.as_ref().and_then(|s| s.get(n, m)).filter(|_| !config.force).cloned();
            let rec = match cached {
                Some(r) => r,
                None => {
                    let r = match m {
                        Method::Brute => brute_force_min_with(n, config.workers)?,
                        Method::GreedySeq => greedy_sequence_min_with(n, filter, config.workers)?,
                    };
                    if let Some(s) = store.as_deref_mut() {
                        s.append(&r)?;
                    }
                    r
                }
            };
            out.push(rec);
        }
        if method == SweepMethod::Both {
            let (b, g) = (&out[out.len() - 2], &out[out.len() - 1]);
            if (b.abc - g.abc).abs() > TIE_TOLERANCE {
                return Err(SearchError::Mismatch { n, brute: b.abc, greedy: g.abc });
            }
        }
    }
    Ok(out)
}
