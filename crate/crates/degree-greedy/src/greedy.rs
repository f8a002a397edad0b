use graph_core::{DegreeSequence, SequenceError, Tree};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Builds the greedy tree: vertex 0 takes the largest degree, and vertices
/// are labeled breadth first with degrees in nonincreasing order, so the
/// children of a larger-degree vertex receive larger degrees. Vertex `i` of
/// the result has degree `ds[i]`.
pub fn greedy_tree(ds: &DegreeSequence) -> Tree {
    let d = ds.as_slice();
    let n = d.len();
    if n == 1 {
        return Tree::single_vertex();
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for (v, &dv) in d.iter().enumerate() {
        let kids = if v == 0 { dv } else { dv - 1 };
        for _ in 0..kids {
            edges.push((v, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Tree::from_edges_unchecked(n, &edges)
}

/// [`greedy_tree`] for a raw degree list, in any order.
pub fn greedy_from_degrees(degrees: &[usize]) -> Result<Tree, SequenceError> {
    Ok(greedy_tree(&DegreeSequence::new(degrees.to_vec())?))
}

/// A uniformly random labeled tree in which vertex `v` has degree `ds[v]`.
///
/// Works through a shuffled Prüfer sequence that contains `v` exactly
/// `ds[v] - 1` times.
pub fn random_tree_with_degrees(ds: &DegreeSequence, seed: u64) -> Tree {
    let d = ds.as_slice();
    let n = d.len();
    if n == 1 {
        return Tree::single_vertex();
    }
    let mut seq: Vec<usize> = d.iter().enumerate().flat_map(|(v, &dv)| std::iter::repeat_n(v, dv - 1)).collect();
    seq.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Tree::from_prufer(n, &seq)
}
