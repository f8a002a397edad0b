use abc_metric::abc_index;
use branch_structure::samples::{random_instance, Builder};
use branch_structure::{
    analyze, apply_transformation, check_theorems, TransformError, TransformKind, TransformationSpec,
};
use graph_core::{canonical_form, Tree};
use proptest::prelude::*;

fn brute_min(n: usize) -> Tree {
    let mut best: Option<(f64, Vec<u8>, Tree)> = None;
    for t in tree_enum::enumerate_free_trees(n).unwrap() {
        let a = abc_index(&t);
        let better = match &best {
            None => true,
            Some((b, form, _)) => a < b - 1e-12 || ((a - b).abs() <= 1e-12 && canonical_form(&t) < *form),
        };
        if better {
            best = Some((a, canonical_form(&t), t));
        }
    }
    best.unwrap().2
}

#[test]
fn standalone_b2_spider_with_parent_edge() {
    // root of degree 3: two pendant paths of length 2 and a single parent edge
    let mut b = Builder::new();
    b.p2(0);
    b.p2(0);
    b.child(0);
    let p = analyze(&b.build());
    assert_eq!(p.b_count(2), 1);
    assert_eq!(p.pendant_paths.iter().filter(|pp| pp.length == 2).count(), 2);
}

#[test]
fn path_has_empty_census() {
    let p = analyze(&Tree::path(6));
    assert!(p.is_path());
    assert!(p.internal_paths.is_empty());
    assert!((1..=4).all(|k| p.b_count(k) == 0));
    let r = check_theorems(&Tree::path(6));
    assert!(r.all_asserted_pass());
    assert!(r.get("pendant_lengths_in_2_3").unwrap().note.is_some());
}

#[test]
fn center_with_two_b2_roots() {
    let mut b = Builder::new();
    b.bk(0, 2);
    b.bk(0, 2);
    b.p2(0);
    let t = b.build();
    let p = analyze(&t);
    assert_eq!(t.order(), 13);
    assert!(p.internal_paths.is_empty());
    assert_eq!(p.b_count(2), 2);
    assert_eq!(p.root, 0);
    assert!(p.proper_tk_roots.is_empty());
}

#[test]
fn planted_internal_path_is_reported_with_witness() {
    // 0 and 2 have degree 3 and are joined through 1
    let mut b = Builder::new();
    let mid = b.child(0);
    let other = b.child(mid);
    b.child(0);
    b.child(0);
    b.child(other);
    b.child(other);
    let t = b.build();
    let r = check_theorems(&t);
    let v = r.get("internal_paths_absent").unwrap();
    assert!(!v.pass);
    assert_eq!(v.witness, vec![0, 1, 2]);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"internal_paths_absent\""));
    assert!(json.contains("\"witness\":[0,1,2]"));
}

#[test]
fn five_b1_branches_break_the_b1_bound() {
    let mut b = Builder::new();
    for _ in 0..5 {
        b.bk(0, 1);
    }
    let t = b.build();
    let p = analyze(&t);
    assert_eq!(p.b_count(1), 5);
    let r = check_theorems(&t);
    assert!(!r.passes("b1_le_4"));
    assert_eq!(r.get("b1_le_4").unwrap().witness.len(), 5);
    assert!(!r.passes("conjecture_b1_le_3"));
    assert!(r.failures().contains(&"b1_le_4"));
}

#[test]
fn b3_star_and_terminal_vertices() {
    let mut b = Builder::new();
    let hub = b.child(0);
    b.p2(hub);
    b.p2(hub);
    b.path(hub, 3);
    b.bk(0, 3);
    b.bk(0, 3);
    let t = b.build();
    let p = analyze(&t);
    assert_eq!(p.b3_star, 1);
    assert!(p.terminal_vertices.contains(&(hub, 4)));
    assert_eq!(p.b_count(3), 2);
    assert_eq!(p.b_count(1), 1);
}

#[test]
fn common_parent_checks_fire() {
    let mut b = Builder::new();
    b.bk(0, 4);
    b.bk(0, 1);
    b.bk(0, 2);
    let r = check_theorems(&b.build());
    assert!(!r.passes("no_b1_with_b4_same_parent"));
    assert!(!r.passes("no_b2_with_b4_same_parent"));
}

#[test]
fn small_winners_satisfy_all_asserted_checks() {
    for n in 4..=16 {
        let t = brute_min(n);
        let r = check_theorems(&t);
        assert!(r.all_asserted_pass(), "n={n}: {:?}", r.failures());
        assert!(analyze(&t).proper_tk_roots.len() <= 1);
    }
}

#[test]
fn winner_of_order_ten_passes() {
    let t = brute_min(10);
    let r = check_theorems(&t);
    assert!(r.all_asserted_pass());
    assert!(!r.get("pendant_lengths_in_2_3").unwrap().note.is_some());
}

#[test]
fn every_transformation_delta_is_exact() {
    for kind in TransformKind::ALL {
        for seed in 0..200 {
            let (t, spec) = random_instance(kind, seed);
            let before = t.clone();
            let out = apply_transformation(&t, &spec)
                .unwrap_or_else(|e| panic!("{} seed {seed}: {e}", kind.name()));
            assert_eq!(t, before, "input must not be modified");
            assert_eq!(out.tree.order(), t.order());
            let actual = abc_index(&out.tree) - abc_index(&t);
            let err = (out.predicted_delta - actual).abs();
            assert!(err < 1e-12, "{} seed {seed}: predicted {} actual {actual}", kind.name(), out.predicted_delta);
        }
    }
}

#[test]
fn transformations_change_the_tree() {
    for kind in TransformKind::ALL {
        if kind == TransformKind::Identity {
            continue;
        }
        let (t, spec) = random_instance(kind, 7);
        let out = apply_transformation(&t, &spec).unwrap();
        assert_ne!(canonical_form(&out.tree), canonical_form(&t), "{}", kind.name());
    }
}

#[test]
fn identity_leaves_tree_alone() {
    let (t, spec) = random_instance(TransformKind::Identity, 3);
    let out = apply_transformation(&t, &spec).unwrap();
    assert_eq!(out.tree, t);
    assert_eq!(out.predicted_delta, 0.0);
}

#[test]
fn moving_b1_into_a_large_proper_tk_branch_decreases_abc() {
    // d(u) = 14: one B_1, twelve B_3 children, and a parent of large degree
    let mut b = Builder::new();
    let u = b.child(0);
    for _ in 0..60 {
        b.child(0);
    }
    let r = b.bk(u, 1);
    let mut v = 0;
    for i in 0..12 {
        let x = b.bk(u, 3);
        if i == 0 {
            v = x;
        }
    }
    let t = b.build();
    assert_eq!(t.degree(u), 14);
    let spec = TransformationSpec::new(TransformKind::TB1).with("u", u).with("v", v).with("r", r);
    let out = apply_transformation(&t, &spec).unwrap();
    assert!(out.predicted_delta < 0.0);
    // hand-written closed form, with the parent of u at degree 61
    let g = |x: f64, y: f64| ((x + y - 2.0) / (x * y)).sqrt();
    let expect = -g(14.0, 4.0) + g(13.0, 5.0) + 11.0 * (g(13.0, 4.0) - g(14.0, 4.0)) + g(13.0, 61.0) - g(14.0, 61.0);
    assert!((out.predicted_delta - expect).abs() < 1e-12);
    let actual = abc_index(&out.tree) - abc_index(&t);
    assert!((out.predicted_delta - actual).abs() < 1e-12);
}

#[test]
fn preconditions_are_checked() {
    let t = Tree::path(8);
    let spec = TransformationSpec::new(TransformKind::TB1).with("u", 2).with("v", 3).with("r", 1);
    assert!(matches!(apply_transformation(&t, &spec), Err(TransformError::PreconditionViolated { .. })));
    let spec = TransformationSpec::new(TransformKind::T5).with("w1", 2);
    assert!(matches!(apply_transformation(&t, &spec), Err(TransformError::MissingAnchor { .. })));
    let spec = TransformationSpec::new(TransformKind::T1B2).with("u", 99).with("y", 0).with("a", 1);
    assert!(matches!(apply_transformation(&t, &spec), Err(TransformError::BadAnchor { .. })));

    // T11 needs twelve B_2 children; eleven is the T2-lemma case instead
    let mut b = Builder::new();
    let z = b.child(0);
    b.child(z);
    for _ in 0..11 {
        b.bk(0, 2);
    }
    let t = b.build();
    let t11 = TransformationSpec::new(TransformKind::T11).with("w", 0).with("z", z);
    let err = apply_transformation(&t, &t11).unwrap_err();
    assert!(err.to_string().contains("twelve"));
    let t2 = TransformationSpec { kind: TransformKind::T2LemmaB2_20, anchors: t11.anchors.clone() };
    assert!(apply_transformation(&t, &t2).is_ok());
}

#[test]
fn kind_names_round_trip() {
    for kind in TransformKind::ALL {
        assert_eq!(TransformKind::from_name(kind.name()), Some(kind));
    }
}

fn arb_tree() -> impl Strategy<Value = Tree> {
    (2usize..40).prop_flat_map(|n| {
        proptest::collection::vec(0usize..1000, n - 1).prop_map(move |raw| {
            let edges: Vec<(usize, usize)> = raw.iter().enumerate().map(|(i, &r)| (r % (i + 1), i + 1)).collect();
            Tree::from_edges_unchecked(n, &edges)
        })
    })
}

proptest! {
    #[test]
    fn census_is_consistent(t in arb_tree()) {
        let p = analyze(&t);
        for b in &p.b_roots {
            prop_assert_eq!(t.degree(b.root), b.k + 1);
        }
        let used: usize = p.b_roots.iter().map(|b| 2 * b.k + 1).sum();
        prop_assert!(used <= t.order());
        if t.max_degree() >= 3 {
            // every leaf ends exactly one pendant path
            let leaves = t.leaves().count();
            prop_assert_eq!(p.pendant_paths.len(), leaves);
            let mut ends: Vec<usize> = p.pendant_paths.iter().map(|pp| pp.leaf).collect();
            ends.sort_unstable();
            ends.dedup();
            prop_assert_eq!(ends.len(), leaves);
        } else {
            prop_assert!(p.is_path());
        }
        for ip in &p.internal_paths {
            prop_assert!(!ip.interior.is_empty());
            prop_assert!(ip.interior.iter().all(|&v| t.degree(v) == 2));
        }
    }

    #[test]
    fn analysis_is_label_invariant(t in arb_tree(), seed in 0u64..1000) {
        let n = t.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let u = t.relabel(&perm);
        let (a, b) = (analyze(&t), analyze(&u));
        prop_assert_eq!(a.b_counts, b.b_counts);
        prop_assert_eq!(a.b3_star, b.b3_star);
        prop_assert_eq!(a.internal_paths.len(), b.internal_paths.len());
        prop_assert_eq!(a.terminal_vertices.len(), b.terminal_vertices.len());
        // proper T_k roots depend on which of several tied roots is chosen, so
        // they are only compared when the root is forced
        prop_assert_eq!(t.degree(a.root), u.degree(b.root));
    }
}
