use std::collections::BTreeMap;
use std::fmt;

use abc_metric::{f, f_diff};
use serde::Serialize;
use thiserror::Error;

use crate::affine::{Affine, Growth};

/// Parameter values by name. `f64::INFINITY` asks for the limit.
pub type Params = BTreeMap<String, f64>;

/// Builds a [`Params`] map from `(name, value)` pairs.
pub fn params(pairs: &[(&str, f64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitMode {
    /// Must be a finite integer.
    Finite,
    /// May be given as `inf`.
    Allowed,
    /// Omitting it means `inf`; the expression is stated as that limit.
    Default,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamSpec {
    pub name: String,
    pub meaning: String,
    pub min: i64,
    pub default: Option<i64>,
    pub limit: LimitMode,
}

impl ParamSpec {
    pub fn domain(&self) -> String {
        let mut s = format!("{} >= {}", self.name, self.min);
        match self.limit {
            LimitMode::Finite => {}
            LimitMode::Allowed => s.push_str(", inf allowed"),
            LimitMode::Default => s.push_str(", default inf"),
        }
        if let Some(d) = self.default {
            s.push_str(&format!(", default {d}"));
        }
        s
    }
}

/// `coef * (-f(before) + f(after))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: Affine,
    pub before: (Affine, Affine),
    pub after: (Affine, Affine),
}

impl fmt::Display for Term {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = format!(
            "-f({}, {}) + f({}, {})",
            self.before.0, self.before.1, self.after.0, self.after.1
        );
        if self.coef == Affine::constant(1) {
            write!(out, "{pair}")
        } else if self.coef.coeffs.is_empty() {
            write!(out, "{}*({pair})", self.coef)
        } else {
            write!(out, "({})*({pair})", self.coef)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundExpression {
    pub id: String,
    pub summary: String,
    pub params: Vec<ParamSpec>,
    /// Shorthands such as `s = dw+dz-5`, already substituted into the terms.
    pub lets: Vec<(String, String)>,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainIssue {
    #[error("missing parameter {0}")]
    Missing(String),
    #[error("unknown parameter {0}")]
    Unknown(String),
    #[error("{name} = {value} is outside the domain ({domain})")]
    OutOfRange { name: String, value: f64, domain: String },
    #[error("{0} cannot be taken to infinity here")]
    InfinityNotAllowed(String),
    #[error("term {term}: f argument {value} is below 1")]
    Argument { term: usize, value: f64 },
    #[error("term {term}: f argument tends to -infinity")]
    NegativeGrowth { term: usize },
    #[error("term {term} diverges in the requested limit")]
    Diverges { term: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown expression {0:?}")]
    UnknownExpression(String),
    #[error("{id}: {issue}")]
    DomainError { id: String, issue: DomainIssue },
}

/// Leading behaviour of one `f` as `t -> inf`: `d0 + d1 / t`, or a value
/// that vanishes like `t^(-1/2)` when both arguments grow.
#[derive(Debug, Clone, Copy)]
enum Leading {
    Series { d0: f64, d1: f64 },
    Vanishing { bx: f64, by: f64 },
}

fn leading(x: Growth, y: Growth) -> Leading {
    match (x.is_finite(), y.is_finite()) {
        (true, true) => Leading::Series { d0: f(x.alpha, y.alpha), d1: 0.0 },
        // f(x, y) = sqrt(1/y) * sqrt(1 + (y - 2)/x)
        (false, true) => {
            let r = y.alpha.sqrt();
            Leading::Series { d0: 1.0 / r, d1: (y.alpha - 2.0) / (2.0 * r * x.beta) }
        }
        (true, false) => {
            let r = x.alpha.sqrt();
            Leading::Series { d0: 1.0 / r, d1: (x.alpha - 2.0) / (2.0 * r * y.beta) }
        }
        (false, false) => Leading::Vanishing { bx: x.beta, by: y.beta },
    }
}

impl BoundExpression {
    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|p| p.name == name)
    }

    fn domain_error(&self, issue: DomainIssue) -> CatalogError {
        CatalogError::DomainError { id: self.id.clone(), issue }
    }

    /// Fills defaults and checks every value against its domain.
    pub fn resolve(&self, given: &Params) -> Result<Params, CatalogError> {
        for name in given.keys() {
            if self.param(name).is_none() {
                return Err(self.domain_error(DomainIssue::Unknown(name.clone())));
            }
        }
        let mut out = Params::new();
        for p in &self.params {
            let v = match (given.get(&p.name), p.default, p.limit) {
                (Some(&v), _, _) => v,
                (None, Some(d), _) => d as f64,
                (None, None, LimitMode::Default) => f64::INFINITY,
                (None, None, _) => return Err(self.domain_error(DomainIssue::Missing(p.name.clone()))),
            };
            if v == f64::INFINITY {
                if p.limit == LimitMode::Finite {
                    return Err(self.domain_error(DomainIssue::InfinityNotAllowed(p.name.clone())));
                }
            } else if !(v.is_finite() && v.fract() == 0.0 && v >= p.min as f64) {
                return Err(self.domain_error(DomainIssue::OutOfRange {
                    name: p.name.clone(),
                    value: v,
                    domain: p.domain(),
                }));
            }
            out.insert(p.name.clone(), v);
        }
        Ok(out)
    }

    pub fn evaluate(&self, given: &Params) -> Result<f64, CatalogError> {
        let values = self.resolve(given)?;
        if values.values().all(|v| v.is_finite()) {
            self.evaluate_finite(&values)
        } else {
            self.evaluate_limit(&values)
        }
    }

    fn evaluate_finite(&self, values: &Params) -> Result<f64, CatalogError> {
        let mut total = 0.0;
        for (i, t) in self.terms.iter().enumerate() {
            let args = [&t.before.0, &t.before.1, &t.after.0, &t.after.1].map(|a| a.growth(values).alpha);
            if let Some(&bad) = args.iter().find(|&&a| a < 1.0) {
                return Err(self.domain_error(DomainIssue::Argument { term: i, value: bad }));
            }
            let c = t.coef.growth(values).alpha;
            if c != 0.0 {
                total += c * f_diff(args[0], args[1], args[2], args[3]);
            }
        }
        Ok(total)
    }

    fn evaluate_limit(&self, values: &Params) -> Result<f64, CatalogError> {
        let mut total = 0.0;
        for (i, t) in self.terms.iter().enumerate() {
            let args = [&t.before.0, &t.before.1, &t.after.0, &t.after.1].map(|a| a.growth(values));
            for a in &args {
                if a.beta < 0.0 {
                    return Err(self.domain_error(DomainIssue::NegativeGrowth { term: i }));
                }
                if a.is_finite() && a.alpha < 1.0 {
                    return Err(self.domain_error(DomainIssue::Argument { term: i, value: a.alpha }));
                }
            }
            let coef = t.coef.growth(values);
            if coef.beta < 0.0 {
                return Err(self.domain_error(DomainIssue::NegativeGrowth { term: i }));
            }
            let (c0, c1) = (coef.alpha, coef.beta);
            let lhs = leading(args[0], args[1]);
            let rhs = leading(args[2], args[3]);
            total += match (lhs, rhs) {
                (Leading::Series { d0: a0, d1: a1 }, Leading::Series { d0: b0, d1: b1 }) => {
                    let d0 = b0 - a0;
                    if c1 == 0.0 {
                        c0 * d0
                    } else if d0.abs() > 1e-15 {
                        return Err(self.domain_error(DomainIssue::Diverges { term: i }));
                    } else {
                        c1 * (b1 - a1)
                    }
                }
                // identical growth on both sides: the pair cancels faster than
                // the coefficient grows
                (Leading::Vanishing { bx: p, by: q }, Leading::Vanishing { bx: r, by: s }) if p == r && q == s => 0.0,
                (Leading::Vanishing { .. }, Leading::Vanishing { .. }) if c1 == 0.0 => 0.0,
                (Leading::Vanishing { .. }, Leading::Series { d0, .. }) if c1 == 0.0 => c0 * d0,
                (Leading::Series { d0, .. }, Leading::Vanishing { .. }) if c1 == 0.0 => -c0 * d0,
                _ => return Err(self.domain_error(DomainIssue::Diverges { term: i })),
            };
        }
        Ok(total)
    }

    /// Names of the parameters that default to infinity or may be set to it.
    pub fn limit_params(&self) -> Vec<&str> {
        self.params.iter().filter(|p| p.limit != LimitMode::Finite).map(|p| p.name.as_str()).collect()
    }
}

impl fmt::Display for BoundExpression {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "{}: {}", self.id, self.summary)?;
        let domains: Vec<String> = self.params.iter().map(ParamSpec::domain).collect();
        if !domains.is_empty() {
            writeln!(out, "  params: {}", domains.join("; "))?;
        }
        for (name, form) in &self.lets {
            writeln!(out, "  where {name} = {form}")?;
        }
        for (i, t) in self.terms.iter().enumerate() {
            writeln!(out, "  {} {t}", if i == 0 { " " } else { "+" })?;
        }
        Ok(())
    }
}
