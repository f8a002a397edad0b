//! Canonical form of a free tree: the AHU parenthesis string of the tree
//! rooted at its centroid. A bicentroidal tree takes the smaller of the two
//! rooted strings.

use crate::Tree;

/// The one or two centroid vertices, ascending.
pub fn centroids(t: &Tree) -> Vec<usize> {
    let n = t.order();
    let view = t.rooted(0);
    let size = view.subtree_sizes();
    let mut out = Vec::with_capacity(2);
    for v in 0..n {
        let mut largest = n - size[v];
        for &c in &view.children[v] {
            largest = largest.max(size[c]);
        }
        if 2 * largest <= n {
            out.push(v);
        }
    }
    out
}

fn rooted_code(t: &Tree, root: usize) -> Vec<u8> {
    let view = t.rooted(root);
    let mut code: Vec<Vec<u8>> = vec![Vec::new(); t.order()];
    for &v in view.order.iter().rev() {
        let mut kids: Vec<Vec<u8>> = view.children[v].iter().map(|&c| std::mem::take(&mut code[c])).collect();
        kids.sort_unstable();
        let mut s = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        s.push(b'(');
        for k in kids {
            s.extend_from_slice(&k);
        }
        s.push(b')');
        code[v] = s;
    }
    std::mem::take(&mut code[root])
}

/// Equal for two trees exactly when they are isomorphic.
pub fn canonical_form(t: &Tree) -> Vec<u8> {
    centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("every tree has a centroid")
}

/// The canonical representative: vertices numbered in preorder of the
/// canonical string, so isomorphic trees produce identical labeled trees.
pub fn canonical_tree(t: &Tree) -> Tree {
    tree_from_code(&canonical_form(t))
}

fn tree_from_code(code: &[u8]) -> Tree {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for &b in code {
        if b == b'(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Tree::from_edges_unchecked(next, &edges)
}
