use std::collections::HashSet;

use graph_core::{canonical_form, validate_tree, Tree};
use tree_enum::*;

// number of free trees on n = 1..=22 vertices (OEIS A000055 from index 1)
const FREE_TREES: [u64; 22] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065,
    2144505, 5623756,
];

/// Independent oracle: decode every Prüfer sequence and dedup by canonical form.
fn prufer_classes(n: usize) -> HashSet<Vec<u8>> {
    let mut out = HashSet::new();
    if n <= 2 {
        out.insert(canonical_form(&if n == 1 { Tree::single_vertex() } else { Tree::path(2) }));
        return out;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        out.insert(canonical_form(&Tree::from_prufer(n, &seq)));
        let mut i = 0;
        while i < len && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
        seq[i] += 1;
    }
    out
}

#[test]
fn small_examples() {
    assert_eq!(enumerate_free_trees(1).unwrap().count(), 1);
    assert_eq!(count_free_trees(2).unwrap(), 1);
    assert_eq!(enumerate_free_trees(7).unwrap().count(), 11);
    assert_eq!(enumerate_free_trees(10).unwrap().count(), 106);
    assert_eq!(count_free_trees(12).unwrap(), 551);
    assert_eq!(count_free_trees(15).unwrap(), 7741);
}

#[test]
fn counts_match_known_sequence_to_18() {
    for n in 1..=18 {
        assert_eq!(count_free_trees(n).unwrap(), FREE_TREES[n - 1], "n = {n}");
    }
}

#[test]
fn order_cap() {
    assert_eq!(
        enumerate_free_trees(23).unwrap_err(),
        EnumError::OrderTooLarge { n: 23, cap: DEFAULT_MAX_ORDER }
    );
    assert!(matches!(count_free_trees(1_000_000), Err(EnumError::OrderTooLarge { .. })));
    assert_eq!(enumerate_free_trees(0).unwrap_err(), EnumError::EmptyOrder);
    assert_eq!(enumerate_free_trees_capped(24, 30).unwrap().order(), 24);
}

#[test]
fn no_duplicates_and_all_valid_to_12() {
    for n in 1..=12 {
        let mut seen = HashSet::new();
        for t in enumerate_free_trees(n).unwrap() {
            assert_eq!(t.order(), n);
            assert!(validate_tree(n, &t.edges()).is_ok());
            assert!(seen.insert(canonical_form(&t)), "duplicate at n = {n}");
        }
        assert_eq!(seen.len() as u64, FREE_TREES[n - 1]);
    }
}

#[test]
fn complete_against_prufer_oracle_to_9() {
    for n in 1..=9 {
        let ours: HashSet<Vec<u8>> = enumerate_free_trees(n).unwrap().map(|t| canonical_form(&t)).collect();
        let oracle = prufer_classes(n);
        assert_eq!(ours, oracle, "n = {n}");
    }
}

#[test]
fn seven_vertex_canonical_forms_are_distinct() {
    let forms: HashSet<_> = enumerate_free_trees(7).unwrap().map(|t| canonical_form(&t)).collect();
    assert_eq!(forms.len(), 11);
}

#[test]
fn cursor_bookkeeping() {
    let mut cur = enumerate_free_trees(8).unwrap();
    let mut k = 0;
    while cur.advance() {
        k += 1;
        assert_eq!(cur.emitted(), k);
        assert!(cur.emitted() <= FREE_TREES[7]);
        let seq = cur.level_sequence();
        assert_eq!(seq[0], 1);
        assert!(seq.windows(2).all(|w| w[1] <= w[0] + 1 && w[1] >= 2));
    }
    assert!(!cur.advance());
    assert_eq!(cur.emitted(), 23);
}

#[test]
fn graph6_dump() {
    let mut buf = Vec::new();
    let k = enumerate_free_trees(5).unwrap().dump_graph6(&mut buf).unwrap();
    assert_eq!(k, 3);
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), 3);
    for line in text.lines() {
        assert_eq!(graph_core::decode_graph6(line).unwrap().order(), 5);
    }
}
