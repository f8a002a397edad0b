use std::collections::{BTreeMap, VecDeque};

use graph_core::Tree;
use serde::Serialize;

/// A pendant path, identified by the vertex it hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PendantPath {
    pub attach: usize,
    /// First vertex after `attach`.
    pub start: usize,
    pub leaf: usize,
    /// Number of edges from `attach` to `leaf`.
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InternalPath {
    pub ends: (usize, usize),
    pub interior: Vec<usize>,
}

impl InternalPath {
    pub fn interior_len(&self) -> usize {
        self.interior.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BranchRoot {
    pub root: usize,
    pub k: usize,
    /// The one neighbour of the root that is not part of the branch.
    pub parent: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchProfile {
    pub order: usize,
    /// The vertex the tree is hung from: maximum degree, then minimum
    /// eccentricity, then smallest id.
    pub root: usize,
    pub pendant_paths: Vec<PendantPath>,
    pub internal_paths: Vec<InternalPath>,
    pub b_roots: Vec<BranchRoot>,
    /// Always has keys 1..=4; larger k appear only when present.
    pub b_counts: BTreeMap<usize, usize>,
    pub b3_star: usize,
    pub terminal_vertices: Vec<(usize, usize)>,
    pub proper_tk_roots: Vec<(usize, usize)>,
}

impl BranchProfile {
    pub fn b_count(&self, k: usize) -> usize {
        self.b_counts.get(&k).copied().unwrap_or(0)
    }

    pub fn is_path(&self) -> bool {
        self.pendant_paths.is_empty() && self.internal_paths.is_empty() && self.b_roots.is_empty()
    }
}

/// Walks from `from` into neighbour `next` through degree-2 vertices.
/// Returns the vertex where the walk stops and the number of edges walked.
fn walk(t: &Tree, from: usize, next: usize) -> (Vec<usize>, usize) {
    let mut prev = from;
    let mut cur = next;
    let mut interior = Vec::new();
    while t.degree(cur) == 2 {
        interior.push(cur);
        let nb = t.neighbors(cur);
        let nxt = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = nxt;
    }
    (interior, cur)
}

/// If `start` (a neighbour of `from`) begins a pendant path, its length in edges.
pub fn pendant_length(t: &Tree, from: usize, start: usize) -> Option<usize> {
    let (interior, end) = walk(t, from, start);
    (t.degree(end) == 1).then_some(interior.len() + 1)
}

/// True if `a` begins a pendant path of length exactly 2 away from `from`.
pub fn is_p2_start(t: &Tree, from: usize, a: usize) -> bool {
    t.degree(a) == 2 && t.neighbors(a).iter().any(|&b| b != from && t.degree(b) == 1)
}

/// Recognises `r` as the root of a B_k-branch and returns (k, parent).
pub fn bk_root(t: &Tree, r: usize) -> Option<(usize, usize)> {
    let d = t.degree(r);
    if d == 2 {
        let nb = t.neighbors(r);
        for (x, p) in [(nb[0], nb[1]), (nb[1], nb[0])] {
            if is_p2_start(t, r, x) && t.degree(p) >= 3 {
                return Some((1, p));
            }
        }
        return None;
    }
    if d < 3 {
        return None;
    }
    let others: Vec<usize> = t.neighbors(r).iter().copied().filter(|&a| !is_p2_start(t, r, a)).collect();
    match others.as_slice() {
        [p] => Some((d - 1, *p)),
        _ => None,
    }
}

/// B_k roots hanging from `parent`, as (root, k).
pub fn bk_children(t: &Tree, parent: usize) -> Vec<(usize, usize)> {
    t.neighbors(parent)
        .iter()
        .filter_map(|&r| match bk_root(t, r) {
            Some((k, p)) if p == parent => Some((r, k)),
            _ => None,
        })
        .collect()
}

fn bfs_dist(t: &Tree, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; t.order()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in t.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    dist
}

pub fn tree_root(t: &Tree) -> usize {
    let dmax = t.max_degree();
    (0..t.order())
        .filter(|&v| t.degree(v) == dmax)
        .map(|v| (bfs_dist(t, v).into_iter().max().unwrap_or(0), v))
        .min()
        .map(|(_, v)| v)
        .unwrap_or(0)
}

pub fn analyze(t: &Tree) -> BranchProfile {
    let n = t.order();
    let root = tree_root(t);
    let mut pendant_paths = Vec::new();
    let mut internal_paths = Vec::new();
    for u in 0..n {
        if t.degree(u) < 3 {
            continue;
        }
        for &a in t.neighbors(u) {
            let (interior, end) = walk(t, u, a);
            if t.degree(end) == 1 {
                pendant_paths.push(PendantPath { attach: u, start: a, leaf: end, length: interior.len() + 1 });
            } else if !interior.is_empty() && u < end {
                internal_paths.push(InternalPath { ends: (u, end), interior });
            }
        }
    }
    pendant_paths.sort();
    internal_paths.sort();

    let mut b_roots = Vec::new();
    if t.max_degree() >= 3 {
        for r in 0..n {
            if let Some((k, parent)) = bk_root(t, r) {
                b_roots.push(BranchRoot { root: r, k, parent });
            }
        }
    }
    let mut b_counts: BTreeMap<usize, usize> = (1..=4).map(|k| (k, 0)).collect();
    for b in &b_roots {
        *b_counts.entry(b.k).or_insert(0) += 1;
    }

    let mut per_attach: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in &pendant_paths {
        per_attach.entry(p.attach).or_default().push(p.length);
    }
    let b3_star = per_attach
        .iter()
        .filter(|(&v, lens)| {
            let mut l = (*lens).clone();
            l.sort_unstable();
            t.degree(v) == 4 && l == [2, 2, 3]
        })
        .count();
    let terminal_vertices: Vec<(usize, usize)> = per_attach
        .iter()
        .filter(|(_, lens)| lens.iter().any(|&l| l == 2 || l == 3))
        .map(|(&v, _)| (v, t.degree(v)))
        .collect();

    let view = t.rooted(root);
    let proper_tk_roots = terminal_vertices
        .iter()
        .filter(|&&(v, _)| v != root && view.children[v].iter().any(|&c| t.degree(c) >= 3))
        .map(|&(v, d)| (v, d - 1))
        .collect();

    BranchProfile {
        order: n,
        root,
        pendant_paths,
        internal_paths,
        b_roots,
        b_counts,
        b3_star,
        terminal_vertices,
        proper_tk_roots,
    }
}
