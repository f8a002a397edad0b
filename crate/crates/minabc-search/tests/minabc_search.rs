use abc_metric::abc_index;
use degree_greedy::SequenceFilter;
use graph_core::{canonical_form, Tree};
use minabc_search::{
    brute_force_min, brute_force_min_with, check_growth, greedy_sequence_min, greedy_sequence_min_with, growth_bound,
    sweep, Method, ResultStore, SearchConfig, SearchError, SweepMethod,
};
use std::fs;

fn same_result(a: &minabc_search::SearchRecord, b: &minabc_search::SearchRecord) -> bool {
    a.n == b.n && a.abc == b.abc && a.tree_g6 == b.tree_g6 && a.ties == b.ties && a.degree_sequence == b.degree_sequence
}

#[test]
fn tiny_orders() {
    let r = brute_force_min(2).unwrap();
    assert_eq!(r.abc, 0.0);
    assert_eq!(r.degree_sequence, vec![1, 1]);

    let r = brute_force_min(4).unwrap();
    assert!((r.abc - 3.0 / 2f64.sqrt()).abs() < 1e-12);
    assert!((r.abc - 2.1213203).abs() < 1e-7);
    assert_eq!(canonical_form(&r.witness().unwrap()), canonical_form(&Tree::path(4)));
    assert_eq!(r.ties, 1);

    let r = brute_force_min(5).unwrap();
    assert!((r.abc - 2.8284271).abs() < 1e-7);
    assert_eq!(canonical_form(&r.witness().unwrap()), canonical_form(&Tree::path(5)));
    assert!(matches!(brute_force_min(1), Err(SearchError::OrderTooSmall(1))));
    assert!(matches!(brute_force_min(23), Err(SearchError::Enumeration(_))));
}

#[test]
fn brute_force_is_a_lower_bound_with_correct_ties() {
    for n in 2..=12 {
        let r = brute_force_min(n).unwrap();
        let values: Vec<f64> = tree_enum::enumerate_free_trees(n).unwrap().map(|t| abc_index(&t)).collect();
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        assert!((r.abc - min).abs() < 1e-12);
        let ties = values.iter().filter(|&&a| (a - min).abs() <= 1e-12).count() as u64;
        assert_eq!(r.ties, ties, "n={n}");
        r.verify().unwrap();
    }
}

#[test]
fn greedy_sequences_agree_with_brute_force() {
    for n in 4..=18 {
        let b = brute_force_min(n).unwrap();
        let g = greedy_sequence_min(n, SequenceFilter::none()).unwrap();
        assert!((b.abc - g.abc).abs() < 1e-12, "n={n}: {} vs {}", b.abc, g.abc);
        assert_eq!(g.method, Method::GreedySeq);
        g.verify().unwrap();
    }
}

#[test]
fn filters_do_not_change_the_minimum_at_fifty() {
    let off = greedy_sequence_min(50, SequenceFilter::none()).unwrap();
    let on = greedy_sequence_min(50, SequenceFilter::all()).unwrap();
    assert!((off.abc - on.abc).abs() < 1e-12);
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let a = brute_force_min_with(14, 1).unwrap();
    let b = brute_force_min_with(14, 4).unwrap();
    assert!(same_result(&a, &b));
    let a = greedy_sequence_min_with(40, SequenceFilter::none(), 1).unwrap();
    let b = greedy_sequence_min_with(40, SequenceFilter::none(), 3).unwrap();
    assert!(same_result(&a, &b));
}

#[test]
fn sweep_stores_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("results.jsonl");
    let mut store = ResultStore::open(&path).unwrap();
    let recs = sweep(4, 9, SweepMethod::Brute, SequenceFilter::none(), Some(&mut store), SearchConfig::default()).unwrap();
    assert_eq!(recs.len(), 6);
    assert!(recs.windows(2).all(|w| w[0].n < w[1].n));
    let bytes = fs::read(&path).unwrap();
    assert_eq!(bytes.iter().filter(|&&b| b == b'\n').count(), 6);
    assert!(String::from_utf8_lossy(&bytes).lines().all(|l| l.contains("\"schema\":1")));

    // a second run reads everything back and writes nothing
    let mut store = ResultStore::open(&path).unwrap();
    let again = sweep(4, 9, SweepMethod::Brute, SequenceFilter::none(), Some(&mut store), SearchConfig::default()).unwrap();
    assert_eq!(again, recs);
    assert_eq!(fs::read(&path).unwrap(), bytes);

    // forcing appends fresh records that supersede the old ones
    let cfg = SearchConfig { force: true, ..Default::default() };
    sweep(8, 9, SweepMethod::Brute, SequenceFilter::none(), Some(&mut store), cfg).unwrap();
    let store = ResultStore::open(&path).unwrap();
    assert_eq!(store.records().len(), 6);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 8);

    let mut csv = Vec::new();
    store.export_csv(&mut csv).unwrap();
    let csv = String::from_utf8(csv).unwrap();
    assert_eq!(csv.lines().next(), Some("n,abc,tree_g6,method"));
    assert_eq!(csv.lines().count(), 7);
    assert!(csv.lines().nth(1).unwrap().starts_with("4,2.121320343560,"));
}

#[test]
fn both_methods_agree_in_a_sweep() {
    let recs = sweep(4, 18, SweepMethod::Both, SequenceFilter::none(), None, SearchConfig::default()).unwrap();
    assert_eq!(recs.len(), 30);
    for pair in recs.chunks(2) {
        assert_eq!(pair[0].method, Method::Brute);
        assert_eq!(pair[1].method, Method::GreedySeq);
        assert!((pair[0].abc - pair[1].abc).abs() < 1e-12);
    }
}

#[test]
fn corrupt_stores_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.jsonl");
    let mut store = ResultStore::open(&path).unwrap();
    sweep(5, 6, SweepMethod::Brute, SequenceFilter::none(), Some(&mut store), SearchConfig::default()).unwrap();
    let good = fs::read_to_string(&path).unwrap();

    let tampered = good.replacen("\"abc\":2.8", "\"abc\":2.7", 1);
    assert_ne!(tampered, good);
    fs::write(&path, &tampered).unwrap();
    assert!(matches!(ResultStore::open(&path), Err(SearchError::StoreCorrupt { line: 1, .. })));

    fs::write(&path, good.replace("\"schema\":1", "\"schema\":7")).unwrap();
    assert!(matches!(ResultStore::open(&path), Err(SearchError::StoreCorrupt { .. })));

    fs::write(&path, format!("{good}not json\n")).unwrap();
    assert!(matches!(ResultStore::open(&path), Err(SearchError::StoreCorrupt { line: 3, .. })));

    fs::write(&path, good.replace("\"ties\"", "\"extra\":0,\"ties\"")).unwrap();
    assert!(matches!(ResultStore::open(&path), Err(SearchError::StoreCorrupt { .. })));
}

#[test]
fn minimum_grows_within_the_constructive_bound() {
    let recs = sweep(2, 18, SweepMethod::Brute, SequenceFilter::none(), None, SearchConfig::default()).unwrap();
    assert!(check_growth(&recs).is_empty());
    assert!(recs.windows(2).all(|w| w[0].abc <= w[1].abc));
    // adding a leaf to the end of a path adds one edge of value 1/sqrt(2)
    let p = Tree::path(6);
    assert!((growth_bound(&p) - (abc_index(&p) + 0.5f64.sqrt())).abs() < 1e-12);
}

#[test]
fn bad_ranges_are_errors() {
    assert!(matches!(
        sweep(9, 4, SweepMethod::Brute, SequenceFilter::none(), None, SearchConfig::default()),
        Err(SearchError::EmptyRange { .. })
    ));
    assert!("nope".parse::<SweepMethod>().is_err());
    assert_eq!("both".parse::<SweepMethod>(), Ok(SweepMethod::Both));
}
