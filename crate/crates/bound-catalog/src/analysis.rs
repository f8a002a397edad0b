use std::ops::RangeInclusive;

use abc_metric::{f, f_diff};
use serde::Serialize;
use thiserror::Error;

use crate::expr::{CatalogError, Params};
use crate::registry::lookup;

/// Slack for the sampled monotonicity checks; well below the size of the
/// differences between neighbouring grid points.
pub const MONOTONE_SLACK: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThresholdError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{id} is not monotone in {param}: value rises at {at} and falls at {other}")]
    NotMonotone { id: String, param: String, at: i64, other: i64 },
    #[error("{id} is never negative for {param} in {lo}..={hi}")]
    NeverNegative { id: String, param: String, lo: i64, hi: i64 },
}

/// Samples `id` along `param` with the other parameters held at `fixed`.
pub fn sample(id: &str, param: &str, grid: impl IntoIterator<Item = i64>, fixed: &Params) -> Result<Vec<(i64, f64)>, CatalogError> {
    let expr = lookup(id)?;
    let mut ps = fixed.clone();
    grid.into_iter()
        .map(|x| {
            ps.insert(param.to_string(), x as f64);
            expr.evaluate(&ps).map(|v| (x, v))
        })
        .collect()
}

/// Least value of `param` in `range` at which the expression is negative.
/// The expression has to be monotone along the range, which is checked on
/// every integer point.
pub fn smallest_negative_threshold(
    id: &str,
    param: &str,
    range: RangeInclusive<i64>,
    fixed: &Params,
) -> Result<i64, ThresholdError> {
    let (lo, hi) = (*range.start(), *range.end());
    let values = sample(id, param, range, fixed)?;
    let rise = values.windows(2).find(|w| w[1].1 > w[0].1 + MONOTONE_SLACK).map(|w| w[0].0);
    let fall = values.windows(2).find(|w| w[1].1 < w[0].1 - MONOTONE_SLACK).map(|w| w[0].0);
    if let (Some(at), Some(other)) = (rise, fall) {
        return Err(ThresholdError::NotMonotone { id: id.into(), param: param.into(), at, other });
    }
    values
        .iter()
        .find(|(_, v)| *v < 0.0)
        .map(|&(x, _)| x)
        .ok_or_else(|| ThresholdError::NeverNegative { id: id.into(), param: param.into(), lo, hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Nonincreasing,
    Nondecreasing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub at: i64,
    pub value: f64,
    pub next: i64,
    pub next_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeReport {
    pub direction: Direction,
    pub points: usize,
    /// First pair of neighbouring samples that goes the wrong way.
    pub violation: Option<Violation>,
}

impl ProbeReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_direction(samples: &[(i64, f64)], direction: Direction) -> ProbeReport {
    let violation = samples
        .windows(2)
        .find(|w| match direction {
            Direction::Nonincreasing => w[1].1 > w[0].1 + MONOTONE_SLACK,
            Direction::Nondecreasing => w[1].1 < w[0].1 - MONOTONE_SLACK,
        })
        .map(|w| Violation { at: w[0].0, value: w[0].1, next: w[1].0, next_value: w[1].1 });
    ProbeReport { direction, points: samples.len(), violation }
}

/// Checks that `id` moves in `direction` along `param` on the grid.
pub fn monotonicity_probe(
    id: &str,
    param: &str,
    grid: impl IntoIterator<Item = i64>,
    fixed: &Params,
    direction: Direction,
) -> Result<ProbeReport, CatalogError> {
    Ok(check_direction(&sample(id, param, grid, fixed)?, direction))
}

/// Empirical shape of a sampled function, without any expectation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Constant,
    Nonincreasing,
    Nondecreasing,
    /// Grid points after which the direction changes.
    Mixed { turns: Vec<i64> },
}

pub fn shape_of(samples: &[(i64, f64)]) -> Shape {
    let mut turns = Vec::new();
    let mut last = 0i8;
    for w in samples.windows(2) {
        let d = w[1].1 - w[0].1;
        let s = if d > MONOTONE_SLACK {
            1
        } else if d < -MONOTONE_SLACK {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                turns.push(w[0].0);
            }
            last = s;
        }
    }
    match (last, turns.is_empty()) {
        (0, _) => Shape::Constant,
        (_, false) => Shape::Mixed { turns },
        (1, true) => Shape::Nondecreasing,
        _ => Shape::Nonincreasing,
    }
}

/// Diagnostic: the shape of `y -> f(x, y)` for a fixed `x`.
pub fn edge_function_shape(x: i64, ys: impl IntoIterator<Item = i64>) -> Shape {
    let samples: Vec<(i64, f64)> = ys.into_iter().map(|y| (y, f(x as f64, y as f64))).collect();
    shape_of(&samples)
}

/// One failed comparison in [`shift_grid_check`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridViolation {
    pub form: &'static str,
    pub x: i64,
    pub y: i64,
    pub dx: i64,
    pub dy: i64,
    pub along: char,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridReport {
    pub comparisons: usize,
    pub violations: Vec<GridViolation>,
}

/// Checks on the integer grid `2 <= x, y <= max`, `0 <= dx, dy <= 2` that
/// `-f(x,y) + f(x+dx, y-dy)` increases in x and decreases in y, and that
/// `-f(x,y) + f(x-dx, y+dy)` decreases in x and increases in y.
pub fn shift_grid_check(max: i64) -> GridReport {
    let mut report = GridReport { comparisons: 0, violations: Vec::new() };
    let fl = |v: i64| v as f64;
    for x in 2..=max {
        for y in 2..=max {
            for dx in 0..=2 {
                for dy in 0..=2 {
                    let mut push = |form, along, bad: bool| {
                        report.comparisons += 1;
                        if bad {
                            report.violations.push(GridViolation { form, x, y, dx, dy, along });
                        }
                    };
                    if dy < y {
                        let g = |a: i64, b: i64| f_diff(fl(a), fl(b), fl(a + dx), fl(b - dy));
                        if x < max {
                            push("up-down", 'x', g(x + 1, y) < g(x, y) - MONOTONE_SLACK);
                        }
                        if y < max {
                            push("up-down", 'y', g(x, y + 1) > g(x, y) + MONOTONE_SLACK);
                        }
                    }
                    if dx < x {
                        let g = |a: i64, b: i64| f_diff(fl(a), fl(b), fl(a - dx), fl(b + dy));
                        if x < max {
                            push("down-up", 'x', g(x + 1, y) > g(x, y) + MONOTONE_SLACK);
                        }
                        if y < max {
                            push("down-up", 'y', g(x, y + 1) < g(x, y) - MONOTONE_SLACK);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Where the vertex u sits, and which children it may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConfigCase {
    /// u has a parent; B1 and B3 children (change-20).
    Subtree,
    /// u is the root; B1 and B3 children (change-70).
    WholeTree,
    /// u has a parent; only B1 and B2 children (change-20-2a).
    SubtreeB2B1,
    /// u is the root; only B1 and B2 children (change-70-2).
    WholeTreeB2B1,
}

impl ConfigCase {
    pub const ALL: [ConfigCase; 4] =
        [ConfigCase::Subtree, ConfigCase::WholeTree, ConfigCase::SubtreeB2B1, ConfigCase::WholeTreeB2B1];

    pub fn expression(self) -> &'static str {
        match self {
            ConfigCase::Subtree => "change-20",
            ConfigCase::WholeTree => "change-70",
            ConfigCase::SubtreeB2B1 => "change-20-2a",
            ConfigCase::WholeTreeB2B1 => "change-70-2",
        }
    }

    /// d(u) for k1 B1 children and k2 other children.
    pub fn degree(self, k1: i64, k2: i64) -> i64 {
        match self {
            ConfigCase::Subtree | ConfigCase::SubtreeB2B1 => k1 + k2 + 1,
            ConfigCase::WholeTree | ConfigCase::WholeTreeB2B1 => k1 + k2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConfigCase::Subtree => "subtree",
            ConfigCase::WholeTree => "whole-tree",
            ConfigCase::SubtreeB2B1 => "subtree-b2b1",
            ConfigCase::WholeTreeB2B1 => "whole-tree-b2b1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForbiddenRow {
    pub case: ConfigCase,
    pub k2: i64,
    /// Least k1 for which the move lowers the ABC index.
    pub min_k1: Option<i64>,
    /// Whether every k1 from `min_k1` up to [`FORBIDDEN_K1_MAX`] is negative too.
    pub closed_upward: bool,
}

pub const FORBIDDEN_K2_MAX: i64 = 15;
pub const FORBIDDEN_K1_MAX: i64 = 64;

/// For each case and each k2 in `1..=FORBIDDEN_K2_MAX`, the least number of
/// B1 children that makes the configuration impossible in a minimal tree.
pub fn forbidden_configuration_table() -> Vec<ForbiddenRow> {
    let mut rows = Vec::new();
    for case in ConfigCase::ALL {
        let expr = lookup(case.expression()).expect("registered");
        for k2 in 1..=FORBIDDEN_K2_MAX {
            let negative: Vec<bool> = (1..=FORBIDDEN_K1_MAX)
                .map(|k1| {
                    let ps = crate::params(&[("du", case.degree(k1, k2) as f64), ("k1", k1 as f64)]);
                    expr.evaluate(&ps).expect("table point in domain") < 0.0
                })
                .collect();
            let first = negative.iter().position(|&n| n);
            rows.push(ForbiddenRow {
                case,
                k2,
                min_k1: first.map(|i| i as i64 + 1),
                closed_upward: first.is_some_and(|i| negative[i..].iter().all(|&n| n)),
            });
        }
    }
    rows
}
