use std::collections::VecDeque;

use thiserror::Error;

use crate::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("edge ({u},{v}) names a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u},{v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u},{v}) closes a cycle")]
    CycleDetected { u: usize, v: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
}

/// An undirected simple tree on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Checks that `edges` form a tree on `n` vertices and builds it.
///
/// Errors are reported in the order self-loop, duplicate edge, cycle,
/// disconnection, so a triangle reports a cycle rather than an edge count.
pub fn validate_tree(n: usize, edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(TreeError::VertexOutOfRange { u, v, n });
        }
        if u == v {
            return Err(TreeError::SelfLoop { v });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for (u, list) in adj.iter_mut().enumerate() {
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let v = w[0];
            return Err(TreeError::DuplicateEdge { u: u.min(v), v: u.max(v) });
        }
    }
    let mut dsu = Dsu::new(n);
    let mut joined = 0;
    for &(u, v) in edges {
        if !dsu.union(u, v) {
            return Err(TreeError::CycleDetected { u, v });
        }
        joined += 1;
    }
    if joined != n - 1 {
        return Err(TreeError::Disconnected { components: n - joined });
    }
    Ok(Tree { adj })
}

impl Tree {
    /// Builds a tree from adjacency lists produced by trusted code in this
    /// workspace. Lists are sorted here; the structure is checked in debug builds.
    pub fn from_edges_unchecked(n: usize, edges: &[(usize, usize)]) -> Tree {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let t = Tree { adj };
        debug_assert!(validate_tree(n, &t.edges()).is_ok());
        t
    }

    pub fn single_vertex() -> Tree {
        Tree { adj: vec![Vec::new()] }
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Tree {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::from_edges_unchecked(n, &edges)
    }

    /// The star with center 0.
    pub fn star(n: usize) -> Tree {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::from_edges_unchecked(n, &edges)
    }

    /// Decodes a Prüfer sequence over `0..n` (length `n - 2`).
    pub fn from_prufer(n: usize, seq: &[usize]) -> Tree {
        assert!(n >= 2 && seq.len() == n - 2, "Prüfer sequence must have length n-2");
        let mut degree = vec![1usize; n];
        for &x in seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
        let mut leaf = ptr;
        for &x in seq {
            edges.push((leaf, x));
            degree[x] -= 1;
            if degree[x] == 1 && x < ptr {
                leaf = x;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        edges.push((leaf, n - 1));
        Tree::from_edges_unchecked(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.order().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(|&v| self.degree(v) == 1)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_tree_degrees(self.degrees())
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.order());
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges_unchecked(self.order(), &edges)
    }

    pub fn rooted(&self, root: usize) -> RootedView<'_> {
        RootedView::new(self, root)
    }
}

/// A tree hung from a chosen root, with parent and child lists filled in
/// breadth-first order.
#[derive(Debug, Clone)]
pub struct RootedView<'a> {
    pub tree: &'a Tree,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Vertices in breadth-first order from the root.
    pub order: Vec<usize>,
}

impl<'a> RootedView<'a> {
    pub fn new(tree: &'a Tree, root: usize) -> Self {
        let n = tree.order();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in tree.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    children[u].push(v);
                    queue.push_back(v);
                }
            }
        }
        RootedView { tree, root, parent, children, order }
    }

    pub fn depth(&self) -> Vec<usize> {
        let mut depth = vec![0; self.tree.order()];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        depth
    }

    /// Number of vertices in the subtree under each vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.tree.order()];
        for &v in self.order.iter().rev() {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }
}
