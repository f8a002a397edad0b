use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use abc_metric::abc_index;
use bound_catalog::{
    catalog, forbidden_configuration_table, golden_suite, lookup, smallest_negative_threshold, write_golden_csv,
    BoundExpression, ConfigCase, GoldenRow, Params,
};
use branch_structure::{analyze as branch_profile, check_theorems, TheoremReport, CHECK_NAMES};
use degree_greedy::SequenceFilter;
use graph_core::{decode_graph6, to_dot, Tree};
use minabc_search::{sweep, ResultStore, SearchConfig, SearchRecord, SweepMethod};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{AnalyzeArgs, BoundsCommand, RangeArgs, SearchArgs, VerifyArgs};
use crate::{CliError, RunConfig};

fn emit(out: &mut dyn Write, v: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// `[4, 4, 2, 2, 2, 1, 1]` as `4^2 2^3 1^2`.
pub fn degree_summary(ds: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < ds.len() {
        let j = i + ds[i..].iter().take_while(|&&d| d == ds[i]).count();
        parts.push(if j - i == 1 { ds[i].to_string() } else { format!("{}^{}", ds[i], j - i) });
        i = j;
    }
    parts.join(" ")
}

fn method_name(m: SweepMethod) -> &'static str {
    match m {
        SweepMethod::Brute => "brute",
        SweepMethod::GreedySeq => "greedy-seq",
        SweepMethod::Both => "both",
    }
}

fn order_range(r: &RangeArgs) -> Result<(usize, usize), CliError> {
    r.bounds().ok_or_else(|| CliError::Usage("give either --n or both --from and --to".into()))
}

fn parse_filter(s: &str) -> Result<SequenceFilter, CliError> {
    SequenceFilter::parse(s).map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs the sweep and keeps one record per order: the brute-force one when
/// both methods ran, since its tie count covers all trees.
fn minima(
    range: &RangeArgs,
    method: SweepMethod,
    filters: &str,
    force: bool,
    cfg: &RunConfig,
) -> Result<Vec<SearchRecord>, CliError> {
    let (from, to) = order_range(range)?;
    let filter = parse_filter(filters)?;
    let mut store = match &cfg.store {
        Some(p) => Some(ResultStore::open(p)?),
        None => None,
    };
    let config = SearchConfig { workers: cfg.workers, force };
    let records = sweep(from, to, method, filter, store.as_mut(), config)?;
    let mut per_n: BTreeMap<usize, SearchRecord> = BTreeMap::new();
    for r in records {
        per_n.entry(r.n).or_insert(r);
    }
    Ok(per_n.into_values().collect())
}

pub fn search(a: &SearchArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = minima(&a.range, a.method, &a.filters, a.force, cfg)?;
    if cfg.json {
        let filter = parse_filter(&a.filters)?;
        return emit(
            out,
            &json!({
                "method": method_name(a.method),
                "filters": filter.names(),
                "seed": cfg.seed,
                "records": rows,
            }),
        );
    }
    writeln!(out, "{:>5}  {:>13}  {:>5}  degree sequence", "n", "abc", "ties")?;
    for r in &rows {
        writeln!(out, "{:>5}  {:>13.7}  {:>5}  {}", r.n, r.abc, r.ties, degree_summary(&r.degree_sequence))?;
    }
    Ok(())
}

fn read_graphs(input: &str) -> Result<Vec<(String, Tree)>, CliError> {
    let lines: Vec<String> = if Path::new(input).is_file() {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Input(format!("cannot read {input}: {e}")))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect()
    } else {
        vec![input.trim().to_string()]
    };
    if lines.is_empty() {
        return Err(CliError::Input(format!("{input}: no graphs")));
    }
    lines
        .into_iter()
        .enumerate()
        .map(|(i, g6)| match decode_graph6(&g6) {
            Ok(t) => Ok((g6, t)),
            Err(e) => Err(CliError::Input(format!("graph {}: {e}", i + 1))),
        })
        .collect()
}

pub fn analyze(a: &AnalyzeArgs, _cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = read_graphs(&a.input)?;
    if a.dot {
        for (_, t) in &graphs {
            write!(out, "{}", to_dot(t))?;
        }
        return Ok(());
    }
    let mut reports: Vec<Value> = graphs
        .iter()
        .map(|(g6, t)| {
            json!({
                "graph6": g6,
                "order": t.order(),
                "abc": abc_index(t),
                "degree_sequence": t.degree_sequence().as_slice(),
                "profile": branch_profile(t),
                "theorems": check_theorems(t),
            })
        })
        .collect();
    if reports.len() == 1 {
        emit(out, &reports.pop().unwrap())
    } else {
        emit(out, &reports)
    }
}

/// Parses `name=value`; the value is an integer or `inf`.
pub fn parse_assignment(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let v = match value.trim() {
        "inf" | "infinity" | "oo" => f64::INFINITY,
        other => other.parse::<f64>().map_err(|_| format!("{name}: not a number: {other:?}"))?,
    };
    Ok((name.trim().to_string(), v))
}

fn expression_json(e: &BoundExpression) -> Value {
    json!({
        "id": e.id,
        "summary": e.summary,
        "params": e.params,
        "lets": e.lets.iter().map(|(k, v)| format!("{k} = {v}")).collect::<Vec<_>>(),
        "terms": e.terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

fn catalog_error(e: bound_catalog::CatalogError) -> CliError {
    CliError::Input(e.to_string())
}

/// The four degree thresholds the B1 arguments rest on.
const DU_THRESHOLDS: [(&str, i64); 4] = [("change-20-20", 4), ("change-70", 2), ("change-20-2", 3), ("change-70-2", 2)];
const DU_MAX: i64 = 200;

pub fn bounds(cmd: &BoundsCommand, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        BoundsCommand::List => {
            let all = catalog();
            if cfg.json {
                return emit(out, &all.iter().map(expression_json).collect::<Vec<_>>());
            }
            let width = all.iter().map(|e| e.id.len()).max().unwrap_or(0);
            for e in all {
                let domains: Vec<String> = e.params.iter().map(|p| p.domain()).collect();
                writeln!(out, "{:<width$}  {}", e.id, domains.join("; "))?;
            }
            Ok(())
        }
        BoundsCommand::Show { id } => {
            let e = lookup(id).map_err(catalog_error)?;
            if cfg.json {
                emit(out, &expression_json(e))
            } else {
                write!(out, "{e}")?;
                Ok(())
            }
        }
        BoundsCommand::Eval { id, assignments } => {
            let mut ps = Params::new();
            for s in assignments {
                let (k, v) = parse_assignment(s).map_err(CliError::Usage)?;
                ps.insert(k, v);
            }
            let expr = lookup(id).map_err(catalog_error)?;
            let value = expr.evaluate(&ps).map_err(catalog_error)?;
            if cfg.json {
                // resolved values, defaults included; JSON has no infinity
                let shown: BTreeMap<String, String> = expr
                    .resolve(&ps)
                    .map_err(catalog_error)?
                    .into_iter()
                    .map(|(k, v)| (k, if v.is_infinite() { "inf".to_string() } else { v.to_string() }))
                    .collect();
                emit(out, &json!({ "id": id, "params": shown, "value": value }))
            } else {
                writeln!(out, "{value:.7}")?;
                Ok(())
            }
        }
        BoundsCommand::Golden { csv } => golden(*csv, cfg, out),
        BoundsCommand::Thresholds => thresholds(cfg, out),
    }
}

fn golden(csv: bool, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let rows: Vec<GoldenRow> = golden_suite()
        .into_iter()
        .map(|mut r| {
            r.pass = r.diff <= cfg.tolerance;
            r
        })
        .collect();
    let failed = rows.iter().filter(|r| !r.pass).count();
    if cfg.json {
        emit(out, &json!({ "tolerance": cfg.tolerance, "rows": rows, "failed": failed }))?;
    } else if csv {
        write_golden_csv(&rows, &mut *out).map_err(|e| CliError::Input(e.to_string()))?;
    } else {
        let w = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
        let pw = rows.iter().map(|r| r.params.len()).max().unwrap_or(0);
        writeln!(out, "{:<w$}  {:<pw$}  {:>12}  {:>12}  {:>9}", "id", "params", "expected", "actual", "abs diff")?;
        for r in &rows {
            writeln!(
                out,
                "{:<w$}  {:<pw$}  {:>12}  {:>12.7}  {:>9.1e}  {}",
                r.id,
                r.params,
                r.expected,
                r.actual,
                r.diff,
                if r.pass { "PASS" } else { "FAIL" }
            )?;
        }
        writeln!(out, "{} of {} within {:e}", rows.len() - failed, rows.len(), cfg.tolerance)?;
    }
    if failed > 0 {
        return Err(CliError::Mismatch(format!("{failed} golden constants outside tolerance {:e}", cfg.tolerance)));
    }
    Ok(())
}

fn thresholds(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let none = Params::new();
    let du: Vec<(&str, Result<i64, String>)> = DU_THRESHOLDS
        .iter()
        .map(|&(id, lo)| (id, smallest_negative_threshold(id, "du", lo..=DU_MAX, &none).map_err(|e| e.to_string())))
        .collect();
    let table = forbidden_configuration_table();
    if cfg.json {
        let du_json: Vec<Value> = du
            .iter()
            .map(|(id, r)| match r {
                Ok(v) => json!({ "id": id, "param": "du", "threshold": v }),
                Err(e) => json!({ "id": id, "param": "du", "error": e }),
            })
            .collect();
        emit(out, &json!({ "du_thresholds": du_json, "forbidden": table }))?;
    } else {
        writeln!(out, "smallest d(u) with a negative change (d(u) up to {DU_MAX})")?;
        for (id, r) in &du {
            match r {
                Ok(v) => writeln!(out, "  {id:<14} {v}")?,
                Err(e) => writeln!(out, "  {id:<14} error: {e}")?,
            }
        }
        writeln!(out, "least k1 that forbids k1 B1 + k2 B2 children, k2 = 1, 2, ...")?;
        for case in ConfigCase::ALL {
            let cells: Vec<String> = table
                .iter()
                .filter(|r| r.case == case)
                .map(|r| match (r.min_k1, r.closed_upward) {
                    (Some(k), true) => k.to_string(),
                    (Some(k), false) => format!("{k}?"),
                    (None, _) => "-".into(),
                })
                .collect();
            writeln!(out, "  {:<16} {}", case.name(), cells.join(" "))?;
        }
    }
    if du.iter().any(|(_, r)| r.is_err()) {
        return Err(CliError::Mismatch("a degree threshold could not be determined".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifiedOrder {
    n: usize,
    abc: f64,
    tree_g6: String,
    theorems: TheoremReport,
}

fn cell(report: &TheoremReport, name: &str) -> &'static str {
    match report.get(name) {
        None => "?",
        Some(v) if v.pass && v.note.is_some() => "ok*",
        Some(v) if v.pass => "ok",
        Some(v) if v.asserted => "FAIL",
        Some(_) => "no",
    }
}

pub fn verify(a: &VerifyArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let records = minima(&a.range, a.method, &a.filters, false, cfg)?;
    let mut orders = Vec::new();
    for r in records {
        let t = r.witness().map_err(|e| CliError::Mismatch(format!("n = {}: {e}", r.n)))?;
        orders.push(VerifiedOrder { n: r.n, abc: r.abc, tree_g6: r.tree_g6, theorems: check_theorems(&t) });
    }
    let failures: Vec<String> = orders
        .iter()
        .filter(|o| !o.theorems.all_asserted_pass())
        .map(|o| format!("n = {}: {}", o.n, o.theorems.failures().join(", ")))
        .collect();

    if cfg.json {
        emit(out, &json!({ "seed": cfg.seed, "pass": failures.is_empty(), "orders": orders }))?;
    } else {
        let w = CHECK_NAMES.iter().map(|s| s.len()).max().unwrap_or(0);
        write!(out, "{:<w$}", "check")?;
        for o in &orders {
            write!(out, " {:>4}", o.n)?;
        }
        writeln!(out)?;
        for name in CHECK_NAMES {
            write!(out, "{name:<w$}")?;
            for o in &orders {
                write!(out, " {:>4}", cell(&o.theorems, name))?;
            }
            writeln!(out)?;
        }
        writeln!(out, "ok* = passes vacuously (see notes), no = conjecture not satisfied (not asserted)")?;
        // group checks sharing a note and the same orders into one line
        let mut by_check: BTreeMap<(&str, &str), Vec<usize>> = BTreeMap::new();
        for o in &orders {
            for (name, v) in &o.theorems.checks {
                if let Some(note) = &v.note {
                    by_check.entry((note.as_str(), name.as_str())).or_default().push(o.n);
                }
            }
        }
        let mut grouped: BTreeMap<(&str, Vec<usize>), Vec<&str>> = BTreeMap::new();
        for ((note, name), ns) in by_check {
            grouped.entry((note, ns)).or_default().push(name);
        }
        for ((note, ns), names) in grouped {
            let ns: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
            let which = if names.len() == CHECK_NAMES.len() { "every check".to_string() } else { names.join(", ") };
            writeln!(out, "note: {which} at n = {}: {note}", ns.join(", "))?;
        }
    }
    if !failures.is_empty() {
        return Err(CliError::Mismatch(format!("asserted checks failed: {}", failures.join("; "))));
    }
    Ok(())
}
