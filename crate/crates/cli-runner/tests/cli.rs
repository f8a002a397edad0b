use std::process::{Command, Output};

use branch_structure::samples::Builder;
use cli_runner::{degree_summary, parse_assignment};
use graph_core::{encode_graph6, Tree};
use serde_json::Value;

fn minabc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minabc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn search_of_order_two() {
    let o = minabc(&["search", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(line.contains(" 0.0000000 "), "{line}");
}

#[test]
fn brute_force_beyond_the_cap_is_an_input_error() {
    let o = minabc(&["search", "--n", "1000000", "--method", "brute"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds the enumeration cap"), "{}", stderr(&o));
}

#[test]
fn both_methods_agree_from_four_to_twelve() {
    let o = minabc(&["search", "--from", "4", "--to", "12", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 9);
    let greedy = json(&minabc(&["search", "--from", "4", "--to", "12", "--json"]));
    let brute = json(&minabc(&["search", "--from", "4", "--to", "12", "--method", "brute", "--json"]));
    for (g, b) in greedy["records"].as_array().unwrap().iter().zip(brute["records"].as_array().unwrap()) {
        assert_eq!(g["n"], b["n"]);
        assert!((g["abc"].as_f64().unwrap() - b["abc"].as_f64().unwrap()).abs() < 1e-12);
    }
}

#[test]
fn reruns_are_byte_identical_and_worker_independent() {
    let args = ["search", "--from", "4", "--to", "16", "--method", "both"];
    let a = minabc(&args);
    let b = minabc(&args);
    let mut with_one = args.to_vec();
    with_one.extend(["--workers", "1", "--seed", "99"]);
    let c = minabc(&with_one);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn store_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("runs.jsonl");
    let s = store.to_str().unwrap();
    let first = minabc(&["search", "--from", "5", "--to", "11", "--store", s]);
    assert_eq!(first.status.code(), Some(0));
    let lines = std::fs::read_to_string(&store).unwrap();
    assert_eq!(lines.lines().count(), 7);
    let again = minabc(&["search", "--from", "5", "--to", "11", "--store", s]);
    assert_eq!(first.stdout, again.stdout);
    assert_eq!(std::fs::read_to_string(&store).unwrap(), lines, "cached orders are not appended again");
}

#[test]
fn corrupted_store_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("runs.jsonl");
    let s = store.to_str().unwrap();
    assert_eq!(minabc(&["search", "--n", "10", "--method", "both", "--store", s]).status.code(), Some(0));
    // lower the stored value of the first record
    let text = std::fs::read_to_string(&store).unwrap();
    let mut lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    lines[0]["abc"] = Value::from(lines[0]["abc"].as_f64().unwrap() - 0.5);
    let bad: Vec<String> = lines.iter().map(|v| v.to_string()).collect();
    std::fs::write(&store, bad.join("\n") + "\n").unwrap();

    let o = minabc(&["verify", "--from", "10", "--to", "10", "--store", s]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("corrupt"), "{}", stderr(&o));
    std::fs::write(&store, "{not json\n").unwrap();
    assert_eq!(minabc(&["search", "--n", "10", "--store", s]).status.code(), Some(2));
}

#[test]
fn bad_flags_exit_with_one() {
    for args in [
        &["search", "--n", "5", "--method", "fastest"][..],
        &["search", "--n", "5", "--filters", "no-such-filter"],
        &["search", "--n", "5", "--workers", "0"],
        &["search"],
        &["search", "--n", "5", "--from", "4", "--to", "6"],
        &["search", "--n", "1"],
        &["search", "--from", "9", "--to", "4"],
        &["bounds", "golden", "--tolerance", "-1"],
        &["frobnicate"],
    ] {
        assert_eq!(minabc(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(minabc(&["--help"]).status.code(), Some(0));
}

#[test]
fn analyze_path_has_empty_census() {
    let g6 = encode_graph6(&Tree::path(5));
    let o = minabc(&["analyze", &g6]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 5);
    assert!(v["profile"]["b_roots"].as_array().unwrap().is_empty());
    assert!(v["profile"]["b_counts"].as_object().unwrap().values().all(|c| c == 0));
    assert_eq!(v["theorems"]["checks"]["internal_paths_absent"]["pass"], true);
}

#[test]
fn analyze_planted_five_b1_tree_reports_the_failure_but_exits_zero() {
    let mut b = Builder::new();
    for _ in 0..5 {
        b.bk(0, 1);
    }
    let g6 = encode_graph6(&b.build());
    let o = minabc(&["analyze", &g6]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["theorems"]["checks"]["b1_le_4"]["pass"], false);
    assert_eq!(v["profile"]["b_counts"]["1"], 5);
}

#[test]
fn analyze_sweep_winner_of_order_fourteen() {
    let rec = json(&minabc(&["search", "--n", "14", "--method", "brute", "--json"]));
    let g6 = rec["records"][0]["tree_g6"].as_str().unwrap().to_string();
    let v = json(&minabc(&["analyze", &g6]));
    assert_eq!(v["theorems"]["checks"]["conjecture_b1_le_3"]["pass"], true);
    // the computed winner has no B1 branch at all; see the acceptance output
    assert_eq!(v["profile"]["b_counts"]["1"], 0);
}

#[test]
fn analyze_reads_files_and_exports_dot() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("trees.g6");
    let lines = [encode_graph6(&Tree::path(6)), encode_graph6(&Tree::star(6))];
    std::fs::write(&file, lines.join("\n") + "\n").unwrap();
    let o = minabc(&["analyze", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o).as_array().unwrap().len(), 2);

    let dot = stdout(&minabc(&["analyze", "--dot", &lines[0]]));
    assert!(dot.starts_with("graph tree {"));
    assert_eq!(dot.matches("--").count(), 5);
}

#[test]
fn analyze_parse_errors_exit_with_one() {
    assert_eq!(minabc(&["analyze", "not graph6 !"]).status.code(), Some(1));
    // a graph6 string that is not a tree
    let cycle = "Bw";
    assert_eq!(minabc(&["analyze", cycle]).status.code(), Some(1));
}

#[test]
fn bounds_eval_and_errors() {
    let o = minabc(&["bounds", "eval", "change-90", "du=7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v + 0.0145446).abs() < 1e-6);
    assert_eq!(stdout(&o).trim(), "-0.0145446");

    let o = minabc(&["bounds", "eval", "change-20-20", "du=14", "dw=inf", "--json"]);
    let j = json(&o);
    assert_eq!(j["params"]["dw"], "inf");
    assert!((j["value"].as_f64().unwrap() + 0.0000943).abs() < 1e-6);

    let o = minabc(&["bounds", "eval", "nosuch"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown expression"));
    assert_eq!(minabc(&["bounds", "eval", "change-90", "du=3"]).status.code(), Some(1));
    assert_eq!(minabc(&["bounds", "eval", "change-90", "du"]).status.code(), Some(1));
    assert_eq!(minabc(&["bounds", "eval", "change-90", "du=7", "zz=1"]).status.code(), Some(1));
}

#[test]
fn bounds_golden_passes_and_can_be_made_to_fail() {
    let o = minabc(&["bounds", "golden"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with("within 1e-6"), "{text}");

    let csv = stdout(&minabc(&["bounds", "golden", "--csv"]));
    assert!(csv.starts_with("id,params,expected,actual,abs_diff,pass"));

    let strict = minabc(&["bounds", "golden", "--tolerance", "1e-12"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(stdout(&strict).contains("FAIL"));
}

#[test]
fn bounds_list_show_and_thresholds() {
    let list = stdout(&minabc(&["bounds", "list"]));
    assert!(list.lines().count() >= 55);
    assert!(list.lines().any(|l| l.starts_with("change-90 ")));
    let all = json(&minabc(&["bounds", "list", "--json"]));
    assert_eq!(all.as_array().unwrap().len(), list.lines().count());

    let show = stdout(&minabc(&["bounds", "show", "change-20-20"]));
    assert!(show.starts_with("change-20-20: "));

    let t = json(&minabc(&["bounds", "thresholds", "--json"]));
    let found: Vec<i64> = t["du_thresholds"].as_array().unwrap().iter().map(|r| r["threshold"].as_i64().unwrap()).collect();
    assert_eq!(found, [14, 12, 9, 7]);
    let text = stdout(&minabc(&["bounds", "thresholds"]));
    assert!(text.contains("subtree          6 6 6 6 5 5 4 4 3 3 2 1"), "{text}");
}

#[test]
fn verify_small_range_reports_notes() {
    let o = minabc(&["verify", "--from", "4", "--to", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("pendant_lengths_in_2_3")).unwrap();
    assert_eq!(row.matches("ok*").count(), 6);
    assert!(text.contains("note: every check at n = 4, 5, 6, 7, 8, 9"));
}

#[test]
fn verify_up_to_eighteen_passes() {
    let o = minabc(&["verify", "--from", "4", "--to", "18", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["orders"].as_array().unwrap().len(), 15);
}

#[test]
fn helpers() {
    assert_eq!(degree_summary(&[4, 4, 2, 2, 2, 1, 1]), "4^2 2^3 1^2");
    assert_eq!(degree_summary(&[3, 1, 1, 1]), "3 1^3");
    assert_eq!(degree_summary(&[]), "");
    assert_eq!(parse_assignment("dw=inf").unwrap(), ("dw".to_string(), f64::INFINITY));
    assert_eq!(parse_assignment("du=7").unwrap(), ("du".to_string(), 7.0));
    assert!(parse_assignment("du").is_err());
    assert!(parse_assignment("du=x").is_err());
}
