use abc_metric::{abc_index, f};
use graph_core::Tree;
use serde::Serialize;

use crate::search::{SearchRecord, TIE_TOLERANCE};

/// ABC index of the best tree obtained from `t` by adding one leaf, which
/// bounds the minimum at order n + 1 from above.
pub fn growth_bound(t: &Tree) -> f64 {
    let base = abc_index(t);
    if t.order() == 1 {
        return base;
    }
    let step = (0..t.order())
        .map(|v| {
            let d = t.degree(v) as f64;
            let moved: f64 = t.neighbors(v).iter().map(|&u| f(d + 1.0, t.degree(u) as f64) - f(d, t.degree(u) as f64)).sum();
            f(d + 1.0, 1.0) + moved
        })
        .fold(f64::INFINITY, f64::min);
    base + step
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthViolation {
    pub n: usize,
    pub min_next: f64,
    pub bound: f64,
}

/// For consecutive orders in `records`, checks min(n+1) <= growth_bound of
/// the order-n witness.
pub fn check_growth(records: &[SearchRecord]) -> Vec<GrowthViolation> {
    let mut out = Vec::new();
    for a in records {
        let Some(b) = records.iter().find(|b| b.n == a.n + 1) else { continue };
        let Ok(t) = a.witness() else { continue };
        let bound = growth_bound(&t);
        if b.abc > bound + TIE_TOLERANCE {
            out.push(GrowthViolation { n: a.n, min_next: b.abc, bound });
        }
    }
    out
}
