//! The atom-bond connectivity index.
//!
//! `f(x, y) = sqrt((x + y - 2) / (x y))` is evaluated on real arguments, since
//! several bounds plug in non-integer or very large degrees.

use graph_core::Tree;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("f({x}, {y}) is undefined: both arguments must be at least 1")]
pub struct DomainError {
    pub x: f64,
    pub y: f64,
}

/// ABC values are plain doubles; the alias documents intent at call sites.
pub type AbcValue = f64;

#[inline]
pub fn f(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}

pub fn edge_f(x: f64, y: f64) -> Result<f64, DomainError> {
    // written so that NaN also fails
    if !(x >= 1.0 && y >= 1.0) {
        return Err(DomainError { x, y });
    }
    Ok(f(x, y))
}

/// `f` squared, split into terms that stay accurate for huge arguments.
#[inline]
fn f_sq(x: f64, y: f64) -> f64 {
    1.0 / x + 1.0 / y - 2.0 / (x * y)
}

/// `-f(a, b) + f(c, d)` without catastrophic cancellation when the two
/// values are close, via `(f(c,d)^2 - f(a,b)^2) / (f(c,d) + f(a,b))`.
pub fn f_diff(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let (p, q) = (f(a, b), f(c, d));
    let s = p + q;
    if s == 0.0 {
        return 0.0;
    }
    let num = (a - c) / (a * c) + (b - d) / (b * d) - 2.0 * (a * b - c * d) / (a * b * c * d);
    debug_assert!((num - (f_sq(c, d) - f_sq(a, b))).abs() <= 1e-9);
    num / s
}

/// Sum of `f` over all edges. The edge terms are summed in ascending order,
/// which makes the result bit-identical for isomorphic trees.
pub fn abc_index(t: &Tree) -> AbcValue {
    let mut terms: Vec<f64> = t
        .edges()
        .into_iter()
        .map(|(u, v)| f(t.degree(u) as f64, t.degree(v) as f64))
        .collect();
    terms.sort_unstable_by(f64::total_cmp);
    terms.into_iter().sum()
}

/// One edge's endpoint degrees before and after a transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeChange {
    pub before: (f64, f64),
    pub after: (f64, f64),
}

impl EdgeChange {
    pub fn new(before: (f64, f64), after: (f64, f64)) -> Self {
        EdgeChange { before, after }
    }
}

/// `sum(-f(before) + f(after))` over the listed edges.
pub fn degree_change_delta(changes: &[EdgeChange]) -> Result<f64, DomainError> {
    let mut total = 0.0;
    for c in changes {
        edge_f(c.before.0, c.before.1)?;
        edge_f(c.after.0, c.after.1)?;
        total += f_diff(c.before.0, c.before.1, c.after.0, c.after.1);
    }
    Ok(total)
}
