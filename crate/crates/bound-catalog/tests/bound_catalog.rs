use std::time::Instant;

use bound_catalog::*;
use proptest::prelude::*;

const INF: f64 = f64::INFINITY;

fn eval(id: &str, ps: &[(&str, f64)]) -> f64 {
    evaluate(id, &params(ps)).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn g(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}

#[test]
fn golden_constants_are_reproduced() {
    let start = Instant::now();
    let rows = golden_suite();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(rows.len(), GOLDEN_CASES.len());
    assert!(rows.len() >= 40);
    for r in &rows {
        assert!(r.pass, "{} {}: expected {} got {} (diff {:e})", r.id, r.params, r.expected, r.actual, r.diff);
    }
}

#[test]
fn a_few_values_by_hand() {
    // written out directly, independent of the term parser
    let u = 7.0;
    let want = -g(u, 4.0) + g(u - 2.0, 3.0) + (u - 7.0) * (-g(u, 4.0) + g(u - 2.0, 4.0)) - g(4.0, 2.0)
        + g(u - 2.0, 3.0)
        - g(2.0, 1.0)
        + g(u - 2.0, 3.0)
        + (-1.0 / u.sqrt() + 1.0 / (u - 2.0).sqrt());
    assert!((eval("change-90", &[("du", 7.0)]) - want).abs() < 1e-14);

    let b220 = -3.0 * g(3.0, 3.0) + g(3.0, 4.0) + g(3.0, 2.0) + g(4.0, 3.0);
    assert!((eval("change-B2-20", &[]) - b220).abs() < 1e-15);

    let w = 11.0;
    let b2100 = 5.0 * (-g(3.0, w) + g(4.0, w - 2.0)) + 6.0 * (-g(3.0, w) + g(3.0, w - 2.0)) - g(w, 3.0) + g(3.0, 2.0)
        - g(w, 3.0)
        + g(2.0, 1.0);
    assert!((eval("change-B2-100", &[("dw", 11.0), ("n2", 11.0), ("n3", 0.0)]) - b2100).abs() < 1e-14);
}

#[test]
fn limits_agree_with_a_large_proxy() {
    let mut points: Vec<(&str, Vec<(&str, f64)>)> = GOLDEN_CASES
        .iter()
        .filter(|c| {
            let e = lookup(c.id).unwrap();
            c.params.iter().any(|(_, v)| v.is_infinite())
                || e.params.iter().any(|p| p.limit == LimitMode::Default && !c.params.iter().any(|(k, _)| *k == p.name))
        })
        .map(|c| (c.id, c.params.to_vec()))
        .collect();
    for du in 4..40 {
        points.push(("change-20-20", vec![("du", du as f64)]));
        points.push(("change-20-2", vec![("du", du as f64)]));
        points.push(("change-20", vec![("du", du as f64), ("k1", 1.0 + (du % 3) as f64)]));
    }
    for dw in 13..30 {
        points.push(("change-B2-66", vec![("dw", dw as f64)]));
        points.push(("lemma-B2-20.f2", vec![("dw", dw as f64), ("n2", 7.0 + (dw % 5) as f64)]));
        points.push(("lemma-B2-10.g21", vec![("dw", dw as f64), ("dz", INF)]));
        points.push(("lemma-B2-10.g222.root", vec![("dw", dw as f64), ("dz", INF)]));
        points.push(("thm.B2.g(dw1)", vec![("dw1", dw as f64)]));
    }
    for n1 in 0..8 {
        points.push(("thm.case3.sub1.g", vec![("dw1", INF), ("n1", n1 as f64)]));
        points.push(("thm.case1.sub2.g", vec![("dw1", (n1 + 3) as f64), ("n1", n1 as f64)]));
    }
    points.push(("lemma-B2-10.g(dz,8)", vec![("dz", INF)]));
    points.push(("change-10", vec![("du", 9.0), ("k1", 2.0), ("dv", 4.0), ("dx", 5.0), ("dw", INF)]));
    assert!(points.len() > 100);

    for (id, ps) in points {
        let expr = lookup(id).unwrap();
        let exact = expr.evaluate(&params(&ps)).unwrap();
        let mut proxy = params(&ps);
        for p in expr.limit_params() {
            let v = proxy.get(p).copied();
            if v.is_none_or(f64::is_infinite) && (v.is_some() || expr.param(p).unwrap().limit == LimitMode::Default) {
                proxy.insert(p.to_string(), LIMIT_PROXY);
            }
        }
        let approx = expr.evaluate(&proxy).unwrap();
        assert!((exact - approx).abs() < 1e-7, "{id} {ps:?}: limit {exact} proxy {approx}");
    }
}

#[test]
fn thresholds_in_du() {
    let start = Instant::now();
    let none = Params::new();
    assert_eq!(smallest_negative_threshold("change-20-20", "du", 4..=200, &none).unwrap(), 14);
    assert_eq!(smallest_negative_threshold("change-70", "du", 2..=200, &none).unwrap(), 12);
    assert_eq!(smallest_negative_threshold("change-20-2", "du", 3..=200, &none).unwrap(), 9);
    assert_eq!(smallest_negative_threshold("change-70-2", "du", 2..=200, &none).unwrap(), 7);
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert!((eval("change-20-20", &[("du", 14.0)]) + 0.0000943005).abs() < 1e-9);
    assert!(eval("change-20-20", &[("du", 13.0)]) > 0.0);
}

#[test]
fn thresholds_in_k1() {
    let k1_at = |id: &str, du: i64, hi: i64| {
        smallest_negative_threshold(id, "k1", 1..=hi, &params(&[("du", du as f64)])).unwrap()
    };
    let subtree: Vec<i64> = (8..=13).rev().map(|du| k1_at("change-20", du, du - 2)).collect();
    assert_eq!(subtree, [3, 4, 5, 6, 6, 6]);
    // at d(u) = 6 the threshold k1 = 5 leaves no room for a B2 child
    let b2b1: Vec<i64> = [8, 7, 6].iter().map(|&du| k1_at("change-20-2a", du, du - 1)).collect();
    assert_eq!(b2b1, [2, 4, 5]);
    let root: Vec<i64> = (6..=11).rev().map(|du| k1_at("change-70", du, du - 1)).collect();
    assert_eq!(root, [2, 3, 4, 4, 5, 5]);
    // the two readings of change-70-2 differ at d(u) = 6 and 5
    assert_eq!([k1_at("change-70-2", 6, 5), k1_at("change-70-2", 5, 4)], [3, 4]);
    assert_eq!([k1_at("change-70-2.alt", 6, 5), k1_at("change-70-2.alt", 5, 4)], [2, 3]);
}

#[test]
fn threshold_errors() {
    let none = Params::new();
    let e = smallest_negative_threshold("change-20-20", "du", 4..=13, &none).unwrap_err();
    assert!(matches!(e, ThresholdError::NeverNegative { lo: 4, hi: 13, .. }));
    let e = smallest_negative_threshold("lemma-B2-30.g2", "dw", 3..=60, &none).unwrap_err();
    assert!(matches!(e, ThresholdError::NotMonotone { .. }), "{e:?}");
    let e = smallest_negative_threshold("nosuch", "du", 1..=3, &none).unwrap_err();
    assert!(matches!(e, ThresholdError::Catalog(CatalogError::UnknownExpression(_))));
}

fn minimal_k1(case: ConfigCase) -> Vec<i64> {
    let table = forbidden_configuration_table();
    let rows: Vec<_> = table.iter().filter(|r| r.case == case).collect();
    assert_eq!(rows.len() as i64, FORBIDDEN_K2_MAX);
    assert!(rows.iter().all(|r| r.closed_upward));
    rows.iter().map(|r| r.min_k1.unwrap()).collect()
}

#[test]
fn forbidden_configurations() {
    let expand = |spec: &[(i64, i64)]| -> Vec<i64> {
        (1..=FORBIDDEN_K2_MAX).map(|k2| spec.iter().find(|&&(upto, _)| k2 <= upto).map_or(1, |&(_, k)| k)).collect()
    };
    assert_eq!(minimal_k1(ConfigCase::Subtree), expand(&[(4, 6), (6, 5), (8, 4), (10, 3), (11, 2)]));
    assert_eq!(minimal_k1(ConfigCase::SubtreeB2B1), expand(&[(1, 5), (3, 4), (4, 3), (6, 2)]));
    assert_eq!(minimal_k1(ConfigCase::WholeTree), expand(&[(3, 5), (6, 4), (8, 3), (10, 2)]));
    assert_eq!(minimal_k1(ConfigCase::WholeTreeB2B1), expand(&[(2, 4), (4, 3), (5, 2)]));
    let table = forbidden_configuration_table();
    let at = |case, k2| table.iter().find(|r| r.case == case && r.k2 == k2).unwrap().min_k1;
    assert_eq!(at(ConfigCase::Subtree, 5), Some(5));
    assert_eq!(at(ConfigCase::Subtree, 11), Some(2));
    assert_eq!(at(ConfigCase::SubtreeB2B1, 4), Some(3));
}

#[test]
fn monotonicity_probes() {
    let none = Params::new();
    let probe = |id, param, grid: std::ops::RangeInclusive<i64>, fixed: &Params, dir| {
        monotonicity_probe(id, param, grid, fixed, dir).unwrap()
    };
    let r = probe("change-20-20", "du", 4..=200, &none, Direction::Nonincreasing);
    assert!(r.holds(), "{r:?}");
    assert_eq!(r.points, 197);
    assert!(probe("lemma-B2-30.g1", "dw", 3..=200, &none, Direction::Nonincreasing).holds());
    assert!(probe("lemma-B2-30.g2", "dw", 13..=200, &none, Direction::Nonincreasing).holds());
    // below 13 the argument does not need g2, and it is not monotone there
    let low = probe("lemma-B2-30.g2", "dw", 3..=13, &none, Direction::Nonincreasing);
    assert!(low.violation.is_some());

    for dw in [9, 12, 20] {
        let fixed = params(&[("dw", dw as f64), ("n2", 7.0)]);
        assert!(probe("lemma-B2-20.f1", "dz", dw..=300, &fixed, Direction::Nonincreasing).holds());
    }
    for dw1 in 4..12 {
        let fixed = params(&[("dw1", dw1 as f64), ("n1", 1.0)]);
        assert!(probe("thm.case1.sub1.g", "dz", dw1..=300, &fixed, Direction::Nondecreasing).holds());
    }
}

#[test]
fn degree_five_case_is_not_increasing_in_dz_but_stays_negative() {
    // the d(z) -> inf value is not the maximum here: for d(w1) = 5 the
    // expression already falls between d(z) = 5 and 6
    let fixed = params(&[("dw1", 5.0), ("n1", 1.0)]);
    let r = monotonicity_probe("thm.case1.sub2.g", "dz", 5..=300, &fixed, Direction::Nondecreasing).unwrap();
    assert_eq!(r.violation.unwrap().at, 5);
    let mut worst = f64::NEG_INFINITY;
    for dw1 in 5..60 {
        for n1 in 1..=6.min(dw1 - 1) {
            let fixed = params(&[("dw1", dw1 as f64), ("n1", n1 as f64)]);
            for (_, v) in sample("thm.case1.sub2.g", "dz", dw1..=400, &fixed).unwrap() {
                worst = worst.max(v);
            }
        }
    }
    assert!(worst < 0.0);
    assert!((worst - eval("thm.case1.sub2.g", &[("dw1", 5.0), ("n1", 4.0), ("dz", 5.0)])).abs() < 1e-15);
}

#[test]
fn coverage_probes_hold_in_their_direction() {
    for (label, cov) in COVERAGE {
        if let Coverage::Probe { id, param } = cov {
            assert!(lookup(id).is_ok(), "{label}");
            assert!(lookup(id).unwrap().param(param).is_some(), "{label}");
        }
    }
}

#[test]
fn edge_function_shapes() {
    assert_eq!(edge_function_shape(3, 1..=100), Shape::Nonincreasing);
    assert_eq!(edge_function_shape(1, 1..=100), Shape::Nondecreasing);
    assert_eq!(edge_function_shape(2, 1..=100), Shape::Constant);
    assert_eq!(shape_of(&[(0, 1.0), (1, 2.0), (2, 0.0), (3, 0.5)]), Shape::Mixed { turns: vec![1, 2] });
}

#[test]
fn shift_grid_has_no_violations() {
    let r = shift_grid_check(50);
    assert!(r.comparisons > 40_000);
    assert!(r.violations.is_empty(), "{:?}", &r.violations[..r.violations.len().min(5)]);
}

proptest! {
    #[test]
    fn shifted_difference_directions(x in 2i64..400, y in 2i64..400, dx in 0i64..3, dy in 0i64..3) {
        let fl = |v: i64| v as f64;
        let up = |a: i64, b: i64| abc_metric::f_diff(fl(a), fl(b), fl(a + dx), fl(b - dy));
        if dy < y {
            prop_assert!(up(x + 1, y) >= up(x, y) - MONOTONE_SLACK);
            prop_assert!(up(x, y + 1) <= up(x, y) + MONOTONE_SLACK);
        }
        let down = |a: i64, b: i64| abc_metric::f_diff(fl(a), fl(b), fl(a - dx), fl(b + dy));
        if dx < x {
            prop_assert!(down(x + 1, y) <= down(x, y) + MONOTONE_SLACK);
            prop_assert!(down(x, y + 1) >= down(x, y) - MONOTONE_SLACK);
        }
    }

    #[test]
    fn finite_points_match_direct_sums(du in 9i64..200) {
        let u = du as f64;
        let want = -g(u, 3.0) + g(u - 1.0, 4.0) + 6.0 * (-g(u, 3.0) + g(u - 1.0, 3.0))
            + (u - 18.0) * (-g(u, 4.0) + g(u - 1.0, 4.0)) + (-g(u, 1e7) + g(u - 1.0, 1e7));
        let got = eval("pro-Tk-B1.change-20-b", &[("du", u), ("dw", 1e7)]);
        prop_assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn printed_variants_are_kept_for_comparison() {
    let close = |a: f64, b: f64| (a - b).abs() < 1e-6;
    assert!((eval("pro-Tk-B1.change-40-b.printed", &[("du", 8.0)]) - 0.0080311).abs() < 1e-7);
    assert!(close(eval("thm.B122.g.printed", &[("n13", 0.0), ("n12", 9.0), ("n22", 3.0), ("n21", 1.0)]), -0.0524523));
    assert!(close(eval("change-B2-67.printed", &[("dw", 11.0)]), -0.0041858));
    assert!(close(eval("lemma-B2-10.g21", &[("dz", 12.0), ("dw", 13.0)]), -0.0516119));
    assert!(close(eval("thm.case3.sub2.g", &[("dw1", 7.0), ("n1", 6.0)]), -0.0387307));
    // at d(z) = d(w) the two readings of the child terms coincide
    for w in 9..15 {
        let w = w as f64;
        for (a, b) in [
            ("lemma-B2-10.g21", "lemma-B2-10.g21.printed"),
            ("lemma-B2-10.g221", "lemma-B2-10.g221.printed"),
            ("lemma-B2-10.g222", "lemma-B2-10.g222.printed"),
        ] {
            let ps = [("dz", w), ("dw", w)];
            assert!((eval(a, &ps) - eval(b, &ps)).abs() < 1e-15);
        }
    }
    let at8 = [("dz", 8.0)];
    assert!((eval("lemma-B2-10.g(dz,8)", &at8) - eval("lemma-B2-10.g(dz,8).printed", &at8)).abs() < 1e-15);
}

#[test]
fn domain_errors() {
    let err = |id: &str, ps: &[(&str, f64)]| evaluate(id, &params(ps)).unwrap_err();
    assert!(matches!(err("nosuch", &[]), CatalogError::UnknownExpression(_)));
    let issue = |e: CatalogError| match e {
        CatalogError::DomainError { issue, .. } => issue,
        other => panic!("{other:?}"),
    };
    assert!(matches!(issue(err("change-90", &[])), DomainIssue::Missing(_)));
    assert!(matches!(issue(err("change-90", &[("du", 7.0), ("zz", 1.0)])), DomainIssue::Unknown(_)));
    assert!(matches!(issue(err("change-90", &[("du", 6.0)])), DomainIssue::OutOfRange { .. }));
    assert!(matches!(issue(err("change-90", &[("du", 7.5)])), DomainIssue::OutOfRange { .. }));
    assert!(matches!(issue(err("change-90", &[("du", INF)])), DomainIssue::InfinityNotAllowed(_)));
    assert!(matches!(issue(err("lemma-B2-10.g222.printed", &[("dz", INF), ("dw", 12.0)])), DomainIssue::InfinityNotAllowed(_)));
}

type RawTerm<'a> = (&'a str, (&'a str, &'a str), (&'a str, &'a str));

fn custom(terms: &[RawTerm], names: &[&str]) -> BoundExpression {
    let a = |s: &str| Affine::parse(s, &[]).unwrap();
    BoundExpression {
        id: "custom".into(),
        summary: String::new(),
        params: names
            .iter()
            .map(|n| ParamSpec { name: n.to_string(), meaning: String::new(), min: 0, default: None, limit: LimitMode::Allowed })
            .collect(),
        lets: Vec::new(),
        terms: terms
            .iter()
            .map(|(c, b, e)| Term { coef: a(c), before: (a(b.0), a(b.1)), after: (a(e.0), a(e.1)) })
            .collect(),
    }
}

#[test]
fn divergent_and_invalid_limits_are_errors() {
    let inf = params(&[("z", INF)]);
    // a growing count times a difference that does not vanish
    let e = custom(&[("z", ("z", "4"), ("z", "5"))], &["z"]);
    assert!(matches!(e.evaluate(&inf), Err(CatalogError::DomainError { issue: DomainIssue::Diverges { term: 0 }, .. })));
    // the same with a vanishing difference has a finite limit
    let e = custom(&[("z", ("z", "4"), ("z+2", "4"))], &["z"]);
    assert!(e.evaluate(&inf).unwrap().abs() < 1e-15);
    // the 1/t terms survive: f(z,4) ~ 1/2 + 1/(2z), so z * (-f(z,4) + f(2z,4)) -> -1/4
    let e = custom(&[("z", ("z", "4"), ("2*z", "4"))], &["z"]);
    let lim = e.evaluate(&inf).unwrap();
    assert!((lim + 0.25).abs() < 1e-15, "{lim}");
    let proxy = e.evaluate(&params(&[("z", 1e9)])).unwrap();
    assert!((lim - proxy).abs() < 1e-7);
    // both arguments growing at different rates under a growing count
    let e = custom(&[("z", ("z", "z"), ("z", "2*z"))], &["z"]);
    assert!(e.evaluate(&inf).is_err());
    // arguments below one and arguments heading to minus infinity
    let e = custom(&[("1", ("z", "1"), ("z-3", "2"))], &["z"]);
    assert!(matches!(e.evaluate(&params(&[("z", 3.0)])), Err(CatalogError::DomainError { issue: DomainIssue::Argument { .. }, .. })));
    let e = custom(&[("1", ("5", "1"), ("5-z", "2"))], &["z"]);
    assert!(matches!(e.evaluate(&inf), Err(CatalogError::DomainError { issue: DomainIssue::NegativeGrowth { .. }, .. })));
}

#[test]
fn affine_forms_parse_and_print() {
    let aliases = vec![("w1".to_string(), Affine::parse("n13+n12+1", &[]).unwrap())];
    let a = Affine::parse("w1 + n22 - 2", &aliases).unwrap();
    assert_eq!(a.constant, -1);
    assert_eq!(a.coeffs.len(), 3);
    assert_eq!(a.to_string(), "n12+n13+n22-1");
    assert_eq!(Affine::parse("2*du-3", &[]).unwrap().to_string(), "2*du-3");
    assert_eq!(Affine::parse("-4", &[]).unwrap().to_string(), "-4");
    assert_eq!(Affine::parse("du-du", &[]).unwrap().to_string(), "0");
    assert!(Affine::parse("", &[]).is_err());
    assert!(Affine::parse("d u*", &[]).is_err());
    assert!(Affine::parse("x*2", &[]).is_err());
}

#[test]
fn catalog_is_well_formed() {
    let cat = catalog();
    assert!(cat.len() >= 55);
    let mut ids: Vec<&str> = cat.iter().map(|e| e.id.as_str()).collect();
    ids.sort_unstable();
    let n = ids.len();
    ids.dedup();
    assert_eq!(ids.len(), n, "duplicate ids");
    for id in [
        "change-20-20", "change-70", "change-90", "change-110", "change-B2-10", "change-B2-40", "change-B2-50",
        "change-B2-66", "lemma-B2-10.g(dz,8)", "lemma-B2-10.g21", "lemma-B2-10.g221", "lemma-B2-10.g222",
        "pro-Tk-B1.change-20-b", "pro-Tk-B1.change-40-b", "lemma-B2-20.f1", "lemma-B2-20.f2", "thm.case1.sub1.g",
        "thm.case1.sub2.g", "thm.case3.sub1.g", "thm.case3.sub2.g", "thm.B11.g(n13)", "thm.B121.g(n13)",
        "thm.B122.g", "thm.B2.g(dw1)",
    ] {
        assert!(lookup(id).is_ok(), "{id}");
    }
    for e in cat {
        let text = e.to_string();
        assert!(text.starts_with(&e.id));
        assert_eq!(text.matches("-f(").count(), e.terms.len(), "{}", e.id);
    }
}

#[test]
fn coverage_is_complete_and_resolves() {
    let mut labels: Vec<&str> = COVERAGE.iter().map(|(l, _)| *l).collect();
    labels.sort_unstable();
    let n = labels.len();
    labels.dedup();
    assert_eq!(labels.len(), n);
    assert_eq!(n, 76);
    for (label, cov) in COVERAGE {
        match cov {
            Coverage::Encoded(ids) => {
                for id in *ids {
                    assert!(lookup(id).is_ok(), "{label} -> {id}");
                }
            }
            Coverage::Probe { id, .. } => assert!(lookup(id).is_ok(), "{label}"),
            Coverage::Note(text) => assert!(!text.is_empty()),
        }
    }
}

#[test]
fn golden_csv_has_one_row_per_case() {
    let rows = golden_suite();
    let mut buf = Vec::new();
    write_golden_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,params,expected,actual,abs_diff,pass"));
    assert_eq!(lines.count(), rows.len());
    assert!(text.contains("change-90,du=7,-0.0145446,"));
}
