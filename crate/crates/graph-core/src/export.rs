use serde::{Deserialize, Serialize};

use crate::{validate_tree, Tree, TreeError};

/// JSON shape `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn to_json(t: &Tree) -> TreeJson {
    TreeJson {
        n: t.order(),
        edges: t.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    }
}

pub fn tree_from_json(j: &TreeJson) -> Result<Tree, TreeError> {
    let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
    validate_tree(j.n, &edges)
}

/// Graphviz text with one undirected edge per line, in sorted edge order.
pub fn to_dot(t: &Tree) -> String {
    let mut s = String::from("graph tree {\n");
    if t.order() == 1 {
        s.push_str("  0;\n");
    }
    for (u, v) in t.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}
