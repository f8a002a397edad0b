use std::io::Write;

use serde::Serialize;

use crate::expr::params;
use crate::registry::evaluate;

pub const GOLDEN_TOLERANCE: f64 = 1e-6;

const INF: f64 = f64::INFINITY;

/// A printed constant and the evaluation that reproduces it.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCase {
    pub id: &'static str,
    pub params: &'static [(&'static str, f64)],
    pub expected: f64,
}

#[rustfmt::skip]
pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase { id: "change-20-20", params: &[("du", 14.0)], expected: -0.0000943005 },
    GoldenCase { id: "change-70", params: &[("du", 12.0)], expected: -0.000580929 },
    GoldenCase { id: "change-90", params: &[("du", 7.0)], expected: -0.0145446 },
    GoldenCase { id: "change-110", params: &[("du", 5.0)], expected: -0.00582154 },
    GoldenCase { id: "change-B2-20", params: &[], expected: -0.0018988 },
    GoldenCase { id: "change-B2-40", params: &[("dz", 3.0)], expected: -0.0913482 },
    GoldenCase { id: "change-B2-50", params: &[("dz", 4.0), ("dv1", 4.0), ("dv2", 4.0)], expected: -0.186635 },
    GoldenCase { id: "change-B2-50", params: &[("dz", 3.0), ("dv1", 4.0), ("dv2", 4.0)], expected: -0.16395 },
    GoldenCase { id: "change-B2-66", params: &[("dw", 13.0), ("dz", INF)], expected: -0.0107055 },
    GoldenCase { id: "change-B2-100", params: &[("dw", 11.0), ("n2", 11.0), ("n3", 0.0)], expected: -0.00974369 },
    GoldenCase { id: "change-B2-100-22", params: &[("dw", 11.0), ("n2", 11.0)], expected: -0.00974369 },
    GoldenCase { id: "lemma-B2-10.g(dz,8)", params: &[("dz", 8.0)], expected: -0.00136859 },
    GoldenCase { id: "lemma-B2-10.g21", params: &[("dz", 9.0), ("dw", 9.0)], expected: -0.0514586 },
    GoldenCase { id: "lemma-B2-10.g21", params: &[("dz", 10.0), ("dw", 10.0)], expected: -0.0538142 },
    GoldenCase { id: "lemma-B2-10.g21", params: &[("dz", 11.0), ("dw", 11.0)], expected: -0.0541005 },
    GoldenCase { id: "lemma-B2-10.g21", params: &[("dz", 12.0), ("dw", 12.0)], expected: -0.0531217 },
    // maximum over d(z) at d(w) = 13, attained at d(z) = 16
    GoldenCase { id: "lemma-B2-10.g21", params: &[("dz", 16.0), ("dw", 13.0)], expected: -0.0510972 },
    GoldenCase { id: "lemma-B2-10.g221", params: &[("dz", 9.0), ("dw", 9.0)], expected: -0.000496363 },
    GoldenCase { id: "lemma-B2-10.g221", params: &[("dz", 10.0), ("dw", 10.0)], expected: -0.00763911 },
    GoldenCase { id: "lemma-B2-10.g221", params: &[("dz", INF), ("dw", 11.0)], expected: -0.00696979 },
    GoldenCase { id: "lemma-B2-10.g222", params: &[("dz", INF), ("dw", 12.0)], expected: -0.0704253 },
    GoldenCase { id: "lemma-B2-10.g222", params: &[("dz", INF), ("dw", 13.0)], expected: -0.061309 },
    GoldenCase { id: "pro-Tk-B1.change-20-b", params: &[("du", 15.0)], expected: -0.05141846 },
    GoldenCase { id: "pro-Tk-B1.change-40-b", params: &[("du", 14.0)], expected: -0.048948 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", INF), ("n1", 1.0)], expected: -0.0222781 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", INF), ("n1", 2.0)], expected: -0.0222781 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", INF), ("n1", 3.0)], expected: -0.0222781 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", 5.0), ("n1", 4.0)], expected: -0.0186023 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", 6.0), ("n1", 5.0)], expected: -0.0151247 },
    GoldenCase { id: "thm.case1.sub1.g", params: &[("dw1", 7.0), ("n1", 6.0)], expected: -0.0131643 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", INF), ("n1", 1.0)], expected: -0.0628222 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", INF), ("n1", 2.0)], expected: -0.0628222 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", INF), ("n1", 3.0)], expected: -0.0628222 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", 5.0), ("n1", 4.0)], expected: -0.0591464 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", 6.0), ("n1", 5.0)], expected: -0.0556687 },
    GoldenCase { id: "thm.case1.sub2.g", params: &[("dw1", 7.0), ("n1", 6.0)], expected: -0.0537084 },
    GoldenCase { id: "thm.case3.sub1.g", params: &[("dw1", INF), ("n1", 1.0)], expected: -0.0222781 },
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 5.0), ("n1", 1.0)], expected: -0.0515202 },
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 5.0), ("n1", 2.0)], expected: -0.0421011 },
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 5.0), ("n1", 3.0)], expected: -0.0326819 },
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 6.0), ("n1", 4.0)], expected: -0.0399417 },
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 7.0), ("n1", 5.0)], expected: -0.0442738 },
    // reproduced at d(w1) = 8; the label next to it reads (7, 6)
    GoldenCase { id: "thm.case3.sub2.g", params: &[("dw1", 8.0), ("n1", 6.0)], expected: -0.0470986 },
    GoldenCase { id: "thm.B11.g(n13)", params: &[("n13", INF)], expected: -0.0362243 },
    GoldenCase { id: "thm.B121.g(n13)", params: &[("n13", INF)], expected: -0.0362242 },
    GoldenCase { id: "thm.B122.g", params: &[("n13", 0.0), ("n12", 9.0), ("n22", 3.0), ("n21", 1.0)], expected: -0.0640574 },
    GoldenCase { id: "thm.B2.g(dw1)", params: &[("dw1", 11.0)], expected: -0.0154895 },
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenRow {
    pub id: String,
    pub params: String,
    pub expected: f64,
    pub actual: f64,
    pub diff: f64,
    pub pass: bool,
}

pub fn format_params(ps: &[(&str, f64)]) -> String {
    ps.iter()
        .map(|(k, v)| if v.is_infinite() { format!("{k}=inf") } else { format!("{k}={v}") })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Evaluates every golden case. A case that fails to evaluate is reported
/// as a failing row with a NaN value.
pub fn golden_suite() -> Vec<GoldenRow> {
    GOLDEN_CASES
        .iter()
        .map(|c| {
            let actual = evaluate(c.id, &params(c.params)).unwrap_or(f64::NAN);
            let diff = (actual - c.expected).abs();
            GoldenRow {
                id: c.id.to_string(),
                params: format_params(c.params),
                expected: c.expected,
                actual,
                diff,
                pass: diff <= GOLDEN_TOLERANCE,
            }
        })
        .collect()
}

/// CSV with columns id, params, expected, actual, abs_diff, pass.
pub fn write_golden_csv<W: Write>(rows: &[GoldenRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["id", "params", "expected", "actual", "abs_diff", "pass"])?;
    for r in rows {
        w.write_record([
            r.id.clone(),
            r.params.clone(),
            format!("{}", r.expected),
            format!("{:.10}", r.actual),
            format!("{:.3e}", r.diff),
            r.pass.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
