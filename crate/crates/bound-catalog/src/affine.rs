use std::collections::BTreeMap;
use std::fmt;

/// An integer affine form `c + a1*p1 + a2*p2 + ...` over named parameters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Affine {
    pub constant: i64,
    pub coeffs: BTreeMap<String, i64>,
}

/// Value of an affine form as the infinite parameters grow: `alpha + beta * t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Growth {
    pub alpha: f64,
    pub beta: f64,
}

impl Growth {
    pub fn is_finite(&self) -> bool {
        self.beta == 0.0
    }
}

impl Affine {
    pub fn constant(c: i64) -> Self {
        Affine { constant: c, coeffs: BTreeMap::new() }
    }

    fn add_scaled(&mut self, other: &Affine, k: i64) {
        self.constant += k * other.constant;
        for (name, a) in &other.coeffs {
            *self.coeffs.entry(name.clone()).or_insert(0) += k * a;
        }
        self.coeffs.retain(|_, a| *a != 0);
    }

    /// Parses `du-1`, `n12+n22-n21-4`, `2*w1+3` and the like. Names found in
    /// `aliases` are replaced by their own affine forms.
    pub fn parse(text: &str, aliases: &[(String, Affine)]) -> Result<Affine, String> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty affine expression".into());
        }
        let mut out = Affine::default();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(format!("expected + or - in {text:?}"));
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let piece = &s[start..i];
            let (k, name) = match piece.split_once('*') {
                Some((k, name)) => (k.parse::<i64>().map_err(|_| format!("bad factor {k:?}"))?, Some(name)),
                None => match piece.parse::<i64>() {
                    Ok(k) => (k, None),
                    Err(_) => (1, Some(piece)),
                },
            };
            match name {
                None => out.constant += sign * k,
                Some(name) => {
                    let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                        && name.chars().all(|c| c.is_ascii_alphanumeric());
                    if !ok {
                        return Err(format!("bad term {piece:?} in {text:?}"));
                    }
                    match aliases.iter().find(|(a, _)| a == name) {
                        Some((_, form)) => out.add_scaled(form, sign * k),
                        None => out.add_scaled(&Affine { constant: 0, coeffs: [(name.to_string(), 1)].into() }, sign * k),
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.coeffs.keys().map(String::as_str)
    }

    /// Splits the form into its finite part and its rate of growth. Every
    /// infinite parameter grows like the same `t`.
    pub fn growth(&self, values: &BTreeMap<String, f64>) -> Growth {
        let mut g = Growth { alpha: self.constant as f64, beta: 0.0 };
        for (name, &a) in &self.coeffs {
            let v = values[name];
            if v.is_infinite() {
                g.beta += a as f64;
            } else {
                g.alpha += a as f64 * v;
            }
        }
        g
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &a) in &self.coeffs {
            let sign = if a < 0 { "-" } else if first { "" } else { "+" };
            match a.abs() {
                1 => write!(out, "{sign}{name}")?,
                k => write!(out, "{sign}{k}*{name}")?,
            }
            first = false;
        }
        if first {
            write!(out, "{}", self.constant)
        } else if self.constant != 0 {
            write!(out, "{}{}", if self.constant < 0 { "-" } else { "+" }, self.constant.abs())
        } else {
            Ok(())
        }
    }
}
