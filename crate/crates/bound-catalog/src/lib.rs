//! Closed-form bounds on the change of the ABC index under the tree
//! transformations used to rule out configurations of B1 and B2 branches.
//!
//! Every expression is a finite sum of `coef * (-f(a, b) + f(c, d))` with
//! coefficients and arguments affine in the parameters. Parameters may be
//! sent to infinity; the limit is computed from the leading terms of each
//! `f` instead of by plugging in a large number.

mod affine;
mod analysis;
mod coverage;
mod expr;
mod golden;
mod registry;

pub use affine::{Affine, Growth};
pub use analysis::{
    check_direction, edge_function_shape, forbidden_configuration_table, monotonicity_probe, sample,
    shape_of, shift_grid_check, smallest_negative_threshold, ConfigCase, Direction, ForbiddenRow,
    GridReport, GridViolation, ProbeReport, Shape, ThresholdError, Violation, FORBIDDEN_K1_MAX,
    FORBIDDEN_K2_MAX, MONOTONE_SLACK,
};
pub use coverage::{Coverage, COVERAGE};
pub use expr::{params, BoundExpression, CatalogError, DomainIssue, LimitMode, ParamSpec, Params, Term};
pub use golden::{format_params, golden_suite, write_golden_csv, GoldenCase, GoldenRow, GOLDEN_CASES, GOLDEN_TOLERANCE};
pub use registry::{catalog, evaluate, lookup};

/// Stand-in for infinity when checking a limit against direct evaluation.
pub const LIMIT_PROXY: f64 = 1e9;
