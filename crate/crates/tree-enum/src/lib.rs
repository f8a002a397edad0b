//! Free trees of a given order, one per isomorphism class.
//!
//! Generation follows the level-sequence successor scheme of Wright,
//! Richmond, Odlyzko and McKay: the state is the canonical level sequence of
//! a tree rooted at its center, and each step costs constant amortized time.
//! `L[i]` is the level of vertex `i` in preorder, `W[i]` its parent.

use graph_core::{encode_graph6, Tree};
use thiserror::Error;

/// Default ceiling on the order; t(22) is about 2.1 million trees.
pub const DEFAULT_MAX_ORDER: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
}

/// Iterator over all free trees on `n` vertices.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    n: usize,
    emitted: u64,
    // 1-based arrays; index 0 unused
    l: Vec<usize>,
    w: Vec<usize>,
    p: usize,
    q: usize,
    h1: usize,
    h2: usize,
    c: usize,
    r: usize,
    started: bool,
    done: bool,
}

pub fn enumerate_free_trees(n: usize) -> Result<EnumerationCursor, EnumError> {
    enumerate_free_trees_capped(n, DEFAULT_MAX_ORDER)
}

pub fn enumerate_free_trees_capped(n: usize, cap: usize) -> Result<EnumerationCursor, EnumError> {
    if n == 0 {
        return Err(EnumError::EmptyOrder);
    }
    if n > cap {
        return Err(EnumError::OrderTooLarge { n, cap });
    }
    Ok(EnumerationCursor::new(n))
}

/// Number of free trees on `n` vertices, counted by running the generator.
pub fn count_free_trees(n: usize) -> Result<u64, EnumError> {
    let mut cur = enumerate_free_trees(n)?;
    let mut count = 0;
    while cur.advance() {
        count += 1;
    }
    Ok(count)
}

impl EnumerationCursor {
    fn new(n: usize) -> Self {
        let inf = 2 * n + 2;
        let mut cur = EnumerationCursor {
            n,
            emitted: 0,
            l: vec![0; n + 1],
            w: vec![0; n + 1],
            p: 0,
            q: 0,
            h1: 0,
            h2: 0,
            c: inf,
            r: 0,
            started: false,
            done: false,
        };
        if n >= 4 {
            let k = n / 2 + 1;
            cur.p = if n == 4 { 3 } else { n };
            cur.q = n - 1;
            cur.h1 = k;
            cur.h2 = n;
            cur.r = k;
            cur.c = if n.is_multiple_of(2) { n + 1 } else { inf };
            for i in 1..=k {
                cur.l[i] = i;
                cur.w[i] = i - 1;
            }
            for i in k + 1..=n {
                cur.l[i] = i - k + 1;
                cur.w[i] = i - 1;
            }
            cur.w[k + 1] = 1;
        } else {
            // the unique tree of each order 1..=3 is a path
            for i in 1..=n {
                cur.l[i] = i;
                cur.w[i] = i - 1;
            }
        }
        cur
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Current level sequence (levels start at 1 for the root).
    pub fn level_sequence(&self) -> &[usize] {
        &self.l[1..]
    }

    /// Moves to the next tree; false once the stream is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
        } else if self.n < 4 || self.q == 0 {
            self.done = true;
            return false;
        } else {
            self.step();
        }
        self.emitted += 1;
        true
    }

    /// The tree for the current state, vertex `i - 1` for array slot `i`.
    pub fn current(&self) -> Tree {
        let edges: Vec<(usize, usize)> = (2..=self.n).map(|i| (self.w[i] - 1, i - 1)).collect();
        if self.n == 1 {
            return Tree::single_vertex();
        }
        Tree::from_edges_unchecked(self.n, &edges)
    }

    fn step(&mut self) {
        let n = self.n;
        let inf = 2 * n + 2;
        let (l, w) = (&mut self.l, &mut self.w);
        let (mut p, mut q, mut h1, mut h2, mut c, mut r) = (self.p, self.q, self.h1, self.h2, self.c, self.r);
        let mut fixit = false;

        if c == n + 1
            || (p == h2
                && ((l[h1] == l[h2] + 1 && n - h2 > r - h1) || (l[h1] == l[h2] && n - h2 + 1 < r - h1)))
        {
            if l[r] > 3 {
                p = r;
                q = w[r];
                if h1 == r {
                    h1 -= 1;
                }
                fixit = true;
            } else {
                p = r;
                r -= 1;
                q = 2;
            }
        }

        let (mut needr, mut needc, mut needh2) = (false, false, false);
        if p <= h1 {
            h1 = p - 1;
        }
        if p <= r {
            needr = true;
        } else if p <= h2 {
            needh2 = true;
        } else if l[h2] + 1 == l[h1] && n - h2 == r - h1 {
            if p <= c {
                needc = true;
            }
        } else {
            c = inf;
        }

        let oldp = p;
        // q < p, so the copy source index i - (p - q) is always behind i
        let back = p - q;
        let oldlq = l[q];
        let oldwq = w[q];
        p = inf;

        for i in oldp..=n {
            l[i] = l[i - back];
            if l[i] == 2 {
                w[i] = 1;
            } else {
                p = i;
                q = if l[i] == oldlq { oldwq } else { w[i - back] + back };
                w[i] = q;
            }
            if needr && l[i] == 2 {
                needr = false;
                needh2 = true;
                r = i - 1;
            }
            if needh2 && l[i] <= l[i - 1] && i > r + 1 {
                needh2 = false;
                h2 = i - 1;
                if l[h2] + 1 == l[h1] && n - h2 == r - h1 {
                    needc = true;
                } else {
                    c = inf;
                }
            }
            if needc {
                if l[i] + 1 != l[i + h1 - h2] {
                    needc = false;
                    c = i;
                } else {
                    c = i + 1;
                }
            }
        }

        if fixit {
            r = n - h1 + 1;
            for i in r + 1..=n {
                l[i] = i - r + 1;
                w[i] = i - 1;
            }
            w[r + 1] = 1;
            h2 = n;
            p = n;
            q = p - 1;
            c = inf;
        } else {
            if p == inf {
                p = if l[oldp - 1] != 2 { oldp - 1 } else { oldp - 2 };
                q = w[p];
            }
            if needh2 {
                h2 = n;
                if l[h2] + 1 == l[h1] && h1 == r {
                    c = n + 1;
                } else {
                    c = inf;
                }
            }
        }
        self.p = p;
        self.q = q;
        self.h1 = h1;
        self.h2 = h2;
        self.c = c;
        self.r = r;
    }

    /// Writes every remaining tree as one graph6 line.
    pub fn dump_graph6(mut self, out: &mut impl std::io::Write) -> std::io::Result<u64> {
        let mut k = 0;
        while self.advance() {
            writeln!(out, "{}", encode_graph6(&self.current()))?;
            k += 1;
        }
        Ok(k)
    }
}

impl Iterator for EnumerationCursor {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }
}
