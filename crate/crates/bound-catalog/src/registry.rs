//! The catalog itself. Each entry is a list of terms
//! `coef: (a, b) -> (c, d)` meaning `coef * (-f(a, b) + f(c, d))`, with every
//! argument an affine form in the parameters.

use std::sync::OnceLock;

use crate::affine::Affine;
use crate::expr::{BoundExpression, CatalogError, LimitMode, ParamSpec, Term};

struct P(ParamSpec);

fn p(name: &str, min: i64, meaning: &str) -> P {
    P(ParamSpec { name: name.into(), meaning: meaning.into(), min, default: None, limit: LimitMode::Finite })
}

impl P {
    /// The expression is stated as the limit in this parameter.
    fn inf(mut self) -> P {
        self.0.limit = LimitMode::Default;
        self
    }

    fn opt(mut self) -> P {
        self.0.limit = LimitMode::Allowed;
        self
    }

    fn def(mut self, v: i64) -> P {
        self.0.default = Some(v);
        self
    }
}

fn parse_term(text: &str, aliases: &[(String, Affine)]) -> Result<Term, String> {
    let (coef, pairs) = match text.split_once(':') {
        Some((c, rest)) => (Affine::parse(c, aliases)?, rest),
        None => (Affine::constant(1), text),
    };
    let (lhs, rhs) = pairs.split_once("->").ok_or_else(|| format!("missing -> in {text:?}"))?;
    let pair = |s: &str| -> Result<(Affine, Affine), String> {
        let inner = s.trim().strip_prefix('(').and_then(|s| s.strip_suffix(')'));
        let (a, b) = inner.and_then(|s| s.split_once(',')).ok_or_else(|| format!("bad pair {s:?}"))?;
        Ok((Affine::parse(a, aliases)?, Affine::parse(b, aliases)?))
    };
    Ok(Term { coef, before: pair(lhs)?, after: pair(rhs)? })
}

fn def(id: &str, summary: &str, params: Vec<P>, lets: &[(&str, &str)], terms: &[&str]) -> BoundExpression {
    let mut aliases: Vec<(String, Affine)> = Vec::new();
    for (name, form) in lets {
        let a = Affine::parse(form, &aliases).unwrap_or_else(|e| panic!("{id}: {e}"));
        aliases.push((name.to_string(), a));
    }
    let terms: Vec<Term> =
        terms.iter().map(|t| parse_term(t, &aliases).unwrap_or_else(|e| panic!("{id}: {e}"))).collect();
    let params: Vec<ParamSpec> = params.into_iter().map(|p| p.0).collect();
    for t in &terms {
        for a in [&t.coef, &t.before.0, &t.before.1, &t.after.0, &t.after.1] {
            for name in a.names() {
                assert!(params.iter().any(|p| p.name == name), "{id}: undeclared parameter {name}");
            }
        }
    }
    BoundExpression {
        id: id.into(),
        summary: summary.into(),
        params,
        lets: lets.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        terms,
    }
}

fn refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn du(min: i64) -> P {
    p("du", min, "degree of u")
}

fn dw_limit() -> P {
    p("dw", 1, "degree of the parent w of u").inf()
}

// one push per expression keeps each comment next to its entry
#[allow(clippy::vec_init_then_push)]
fn build() -> Vec<BoundExpression> {
    let mut v = Vec::new();

    // Moving one B1 branch of u onto a B3 child v (u keeps its parent w).
    v.push(def(
        "change-10",
        "B1 moved from u to a child v, u not the root; x = degree of the other children",
        vec![du(3), p("k1", 1, "B1 children of u"), p("dv", 1, "degree of v"), p("dx", 1, "degree of each remaining child"), dw_limit().opt()],
        &[],
        &["(du,dv) -> (du-1,dv+1)", "du-k1-2: (du,dx) -> (du-1,dx)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "change-20",
        "B1 moved into a B3 branch, u not the root, children of degree 4, d(w) limit",
        vec![du(3), p("k1", 1, "B1 children of u"), dw_limit()],
        &[],
        &["(du,4) -> (du-1,5)", "du-k1-2: (du,4) -> (du-1,4)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "change-20-20",
        "change-20 with k1 = 1",
        vec![du(4), dw_limit()],
        &[],
        &["(du,4) -> (du-1,5)", "du-3: (du,4) -> (du-1,4)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "change-60",
        "B1 moved from the root u to a child v; x = degree of the other children",
        vec![du(2), p("k1", 1, "B1 children of u"), p("dv", 1, "degree of v"), p("dx", 1, "degree of each remaining child")],
        &[],
        &["(du,dv) -> (du-1,dv+1)", "du-k1-1: (du,dx) -> (du-1,dx)"],
    ));
    v.push(def(
        "change-70",
        "B1 moved into a B3 branch at the root u, children of degree 4",
        vec![du(2), p("k1", 1, "B1 children of u").def(1)],
        &[],
        &["(du,4) -> (du-1,5)", "du-k1-1: (du,4) -> (du-1,4)"],
    ));
    v.push(def(
        "change-20-2a",
        "B1 moved into a B2 branch, u not the root, only B1/B2 children, d(w) limit",
        vec![du(3), p("k1", 1, "B1 children of u"), dw_limit()],
        &[],
        &["(du,3) -> (du-1,4)", "du-k1-2: (du,3) -> (du-1,3)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "change-20-2",
        "change-20-2a with k1 = 1",
        vec![du(3), dw_limit()],
        &[],
        &["(du,3) -> (du-1,4)", "du-3: (du,3) -> (du-1,3)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "change-60-2",
        "B1 moved from the root u to a B2 child v; x = degree of the other children",
        vec![du(2), p("k1", 1, "B1 children of u"), p("dv", 1, "degree of v"), p("dx", 1, "degree of each remaining child")],
        &[],
        &["(du,dv) -> (du-1,dv+1)", "du-k1-1: (du,dx) -> (du-1,dx)"],
    ));
    v.push(def(
        "change-70-2",
        "B1 moved into a B2 branch at the root u, coefficient as printed (du-k1)",
        vec![du(2), p("k1", 1, "B1 children of u").def(1)],
        &[],
        &["(du,3) -> (du-1,4)", "du-k1: (du,3) -> (du-1,3)"],
    ));
    v.push(def(
        "change-70-2.alt",
        "change-70-2 with the coefficient (du-k1-1) of the parallel B3 case",
        vec![du(2), p("k1", 1, "B1 children of u").def(1)],
        &[],
        &["(du,3) -> (du-1,4)", "du-k1-1: (du,3) -> (du-1,3)"],
    ));
    v.push(def(
        "change-80",
        "five B1 branches at u regrouped, u not the root; x = degree of the other children",
        vec![du(7), p("dx", 1, "degree of each remaining child"), dw_limit().opt()],
        &[],
        &[
            "(du,4) -> (du-2,3)",
            "du-7: (du,dx) -> (du-2,dx)",
            "(4,2) -> (du-2,3)",
            "(2,1) -> (du-2,3)",
            "(du,dw) -> (du-2,dw)",
        ],
    ));
    v.push(def(
        "change-90",
        "change-80 with children of degree 4 and the d(w) limit",
        vec![du(7), dw_limit()],
        &[],
        &[
            "(du,4) -> (du-2,3)",
            "du-7: (du,4) -> (du-2,4)",
            "(4,2) -> (du-2,3)",
            "(2,1) -> (du-2,3)",
            "(du,dw) -> (du-2,dw)",
        ],
    ));
    v.push(def(
        "change-100",
        "five B1 branches regrouped at the root u; x = degree of the other children",
        vec![du(5), p("dx", 1, "degree of each remaining child")],
        &[],
        &["(du,4) -> (du-2,3)", "du-5: (du,dx) -> (du-2,dx)", "(4,2) -> (du-2,3)", "(2,1) -> (du-2,3)"],
    ));
    v.push(def(
        "change-110",
        "change-100 with children of degree 4",
        vec![du(5)],
        &[],
        &["(du,4) -> (du-2,3)", "du-5: (du,4) -> (du-2,4)", "(4,2) -> (du-2,3)", "(2,1) -> (du-2,3)"],
    ));

    // B2 branches
    v.push(def(
        "change-B2-10",
        "three B2 branches at w merged into a B3 and a B1",
        vec![p("dw", 3, "degree of w")],
        &[],
        &["(dw,3) -> (dw,4)", "(3,3) -> (3,2)", "(3,3) -> (4,3)"],
    ));
    v.push(def(
        "change-B2-20",
        "change-B2-10 bound with w of degree 3",
        vec![],
        &[],
        &["(3,3) -> (3,4)", "(3,3) -> (3,2)", "(3,3) -> (4,3)"],
    ));
    v.push(def(
        "change-B2-30",
        "two B2 branches at w merged",
        vec![p("dw", 2, "degree of w")],
        &[],
        &["(dw,3) -> (dw,4)", "(3,3) -> (4,2)"],
    ));
    v.push(def(
        "change-B2-40",
        "B2 next to a B3 spider at z rebuilt around a degree-6 vertex",
        vec![p("dz", 1, "degree of z")],
        &[],
        &["(dz,3) -> (dz,6)", "(3,3) -> (6,2)", "(3,3) -> (2,1)", "3: (3,3) -> (6,3)"],
    ));
    v.push(def(
        "change-B2-50",
        "two sibling B2 holders v1, v2 under a degree-4 vertex merged",
        vec![p("dz", 1, "degree of z"), p("dv1", 1, "degree of v1"), p("dv2", 1, "degree of v2")],
        &[("s", "dv1+dv2+1")],
        &[
            "(dz,4) -> (dz,s)",
            "(4,dv1) -> (2,1)",
            "(4,dv2) -> (3,2)",
            "(4,3) -> (s,3)",
            "dv1-1: (dv1,3) -> (s,3)",
            "dv2-1: (dv2,3) -> (s,3)",
            "(3,3) -> (s,3)",
        ],
    ));
    v.push(def(
        "change-B2-60",
        "two of the B2 branches at w dismantled; n3 other children of degree x",
        vec![
            p("dz", 1, "degree of the parent z of w").inf(),
            p("dw", 3, "degree of w"),
            p("n2", 5, "B2 children of w"),
            p("n3", 0, "other children of w"),
            p("dx", 1, "degree of each other child"),
        ],
        &[],
        &[
            "(dz,dw) -> (dz,dw-2)",
            "n3: (dx,dw) -> (dx,dw-2)",
            "5: (3,dw) -> (4,dw-2)",
            "n2-5: (3,dw) -> (3,dw-2)",
            "(dw,3) -> (3,2)",
            "(dw,3) -> (2,1)",
        ],
    ));
    v.push(def(
        "change-B2-66",
        "change-B2-60 with twelve B2 children and the rest of degree 4",
        vec![p("dz", 1, "degree of the parent z of w").inf(), p("dw", 13, "degree of w")],
        &[],
        &[
            "(dz,dw) -> (dz,dw-2)",
            "dw-13: (4,dw) -> (4,dw-2)",
            "5: (3,dw) -> (4,dw-2)",
            "7: (3,dw) -> (3,dw-2)",
            "(dw,3) -> (3,2)",
            "(dw,3) -> (2,1)",
        ],
    ));
    v.push(def(
        "lemma-B2-30.g1",
        "part of change-B2-66 without the degree-4 children",
        vec![p("dw", 3, "degree of w")],
        &[],
        &["4: (3,dw) -> (4,dw-2)", "(dw,3) -> (3,2)", "(dw,3) -> (2,1)"],
    ));
    v.push(def(
        "lemma-B2-30.g2",
        "rest of change-B2-66",
        vec![p("dw", 3, "degree of w")],
        &[],
        &["dw-13: (4,dw) -> (4,dw-2)", "7: (3,dw) -> (3,dw-2)", "(3,dw) -> (4,dw-2)"],
    ));
    v.push(def(
        "change-B2-67.printed",
        "root case bound at d(w) = 11 with coefficient 7, as printed",
        vec![p("dw", 11, "degree of w")],
        &[],
        &[
            "dw-11: (4,11) -> (4,9)",
            "5: (3,11) -> (4,9)",
            "7: (3,11) -> (3,9)",
            "(11,3) -> (3,2)",
            "(11,3) -> (2,1)",
        ],
    ));
    v.push(def(
        "change-B2-100",
        "root w with n2 B2 children and n3 children of degree 4",
        vec![p("dw", 3, "degree of w"), p("n2", 5, "B2 children of w"), p("n3", 0, "children of degree 4")],
        &[],
        &[
            "n3: (4,dw) -> (4,dw-2)",
            "5: (3,dw) -> (4,dw-2)",
            "n2-5: (3,dw) -> (3,dw-2)",
            "(dw,3) -> (3,2)",
            "(dw,3) -> (2,1)",
        ],
    ));
    v.push(def(
        "change-B2-100-22",
        "root w whose other children have degree at most 13",
        vec![p("dw", 3, "degree of w"), p("n2", 5, "B2 children of w")],
        &[],
        &[
            "dw-n2: (13,dw) -> (13,dw-2)",
            "5: (3,dw) -> (4,dw-2)",
            "n2-5: (3,dw) -> (3,dw-2)",
            "(dw,3) -> (3,2)",
            "(dw,3) -> (2,1)",
        ],
    ));
    v.push(def(
        "change-B2-67-22.printed",
        "second root case bound at d(w) = 11 with coefficient 7, as printed",
        vec![p("dw", 11, "degree of w")],
        &[],
        &[
            "dw-11: (11,11) -> (11,9)",
            "5: (3,11) -> (4,9)",
            "7: (3,11) -> (3,9)",
            "(11,3) -> (3,2)",
            "(11,3) -> (2,1)",
        ],
    ));

    // w with many B2 children and parent z: z absorbs the children of w.
    // Terms for children of z use d(z) on the z side.
    let zw = || vec![p("dz", 1, "degree of z").opt(), p("dw", 3, "degree of w")];
    // the printed forms diverge as d(z) grows, so they only take finite d(z)
    let zw_fin = || vec![p("dz", 1, "degree of z"), p("dw", 3, "degree of w")];
    v.push(def(
        "lemma-B2-10.g(dz,8)",
        "w of degree 8 with seven B2 children merged into z",
        vec![p("dz", 2, "degree of z").opt()],
        &[],
        &[
            "(dz,8) -> (2,1)",
            "5: (3,8) -> (4,dz+4)",
            "(3,8) -> (4,2)",
            "(3,8) -> (2,1)",
            "dz-2: (3,dz) -> (3,dz+4)",
        ],
    ));
    v.push(def(
        "lemma-B2-10.g(dz,8).printed",
        "as lemma-B2-10.g(dz,8), last term on the w side as printed",
        vec![p("dz", 2, "degree of z")],
        &[],
        &[
            "(dz,8) -> (2,1)",
            "5: (3,8) -> (4,dz+4)",
            "(3,8) -> (4,2)",
            "(3,8) -> (2,1)",
            "dz-2: (3,8) -> (3,dz+4)",
        ],
    ));
    v.push(def(
        "lemma-B2-10.g(dz,8).root",
        "lemma-B2-10.g(dz,8) when z is the root",
        vec![p("dz", 1, "degree of z").opt()],
        &[],
        &[
            "(dz,8) -> (2,1)",
            "5: (3,8) -> (4,dz+4)",
            "(3,8) -> (4,2)",
            "(3,8) -> (2,1)",
            "dz-1: (3,dz) -> (3,dz+4)",
        ],
    ));
    let g21 = |k: &str| -> Vec<String> {
        vec![
            "(dz,dw) -> (2,1)".into(),
            "(3,dw) -> (2,1)".into(),
            "2: (3,dw) -> (4,2)".into(),
            "5: (3,dw) -> (4,s)".into(),
            "3: (3,dz) -> (4,s)".into(),
            "dw-9: (3,dw) -> (3,s)".into(),
            k.into(),
        ]
    };
    let s5 = [("s", "dw+dz-5")];
    v.push(def("lemma-B2-10.g21", "w with B2 and B1 children merged into z, z has B2 children", zw(), &s5, &refs(&g21("dz-5: (3,dz) -> (3,s)"))));
    v.push(def(
        "lemma-B2-10.g21.printed",
        "lemma-B2-10.g21 with the last term on the w side as printed",
        zw_fin(),
        &s5,
        &refs(&g21("dz-5: (3,dw) -> (3,s)")),
    ));
    v.push(def("lemma-B2-10.g21.root", "lemma-B2-10.g21 when z is the root", zw(), &s5, &refs(&g21("dz-4: (3,dz) -> (3,s)"))));
    let g221 = |k: &str| -> Vec<String> {
        vec![
            "(dz,dw) -> (2,1)".into(),
            "(3,dw) -> (2,1)".into(),
            "2: (3,dw) -> (4,2)".into(),
            "3: (3,dw) -> (5,s)".into(),
            "2: (3,dw) -> (4,s)".into(),
            "dw-9: (3,dw) -> (3,s)".into(),
            k.into(),
        ]
    };
    v.push(def("lemma-B2-10.g221", "as g21 with z carrying degree-4 children", zw(), &s5, &refs(&g221("dz-4: (4,dz) -> (4,s)"))));
    v.push(def(
        "lemma-B2-10.g221.printed",
        "lemma-B2-10.g221 with the last term on the w side as printed",
        zw_fin(),
        &s5,
        &refs(&g221("dz-4: (4,dw) -> (4,s)")),
    ));
    v.push(def("lemma-B2-10.g221.root", "lemma-B2-10.g221 when z is the root", zw(), &s5, &refs(&g221("dz-3: (4,dz) -> (4,s)"))));
    let g222 = |k: &str| -> Vec<String> {
        vec![
            "(dz,dw) -> (2,1)".into(),
            "(3,dw) -> (2,1)".into(),
            "2: (3,dw) -> (4,2)".into(),
            "8: (3,dw) -> (4,s)".into(),
            "dw-12: (3,dw) -> (3,s)".into(),
            k.into(),
        ]
    };
    v.push(def("lemma-B2-10.g222", "as g221 with eight receivers of degree 4", zw(), &s5, &refs(&g222("dz-4: (4,dz) -> (4,s)"))));
    v.push(def(
        "lemma-B2-10.g222.printed",
        "lemma-B2-10.g222 with the last term on the w side as printed",
        zw_fin(),
        &s5,
        &refs(&g222("dz-4: (4,dw) -> (4,s)")),
    ));
    v.push(def("lemma-B2-10.g222.root", "lemma-B2-10.g222 when z is the root", zw(), &s5, &refs(&g222("dz-3: (4,dz) -> (4,s)"))));

    // A B1 moved into a proper T_k branch with many B2 children.
    let tk = |off: &str| -> Vec<String> {
        vec![
            "(du,3) -> (du-1,4)".into(),
            "6: (du,3) -> (du-1,3)".into(),
            format!("du-{off}: (du,4) -> (du-1,4)"),
            "(du,dw) -> (du-1,dw)".into(),
        ]
    };
    v.push(def(
        "pro-Tk-B1.change-10-b",
        "B1 moved into a B2 branch of u with k2 B2 children, u not the root",
        vec![du(3), p("k1", 1, "B1 children"), p("k2", 1, "B2 children"), dw_limit()],
        &[],
        &["(du,3) -> (du-1,4)", "k2-1: (du,3) -> (du-1,3)", "du-k2-k1-1: (du,4) -> (du-1,4)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def(
        "pro-Tk-B1.change-30-b",
        "pro-Tk-B1.change-10-b when u is the root",
        vec![du(2), p("k1", 1, "B1 children"), p("k2", 1, "B2 children"), dw_limit()],
        &[],
        &["(du,3) -> (du-1,4)", "k2-1: (du,3) -> (du-1,3)", "du-k2-k1: (du,4) -> (du-1,4)", "(du,dw) -> (du-1,dw)"],
    ));
    v.push(def("pro-Tk-B1.change-20-b", "k1 = 1, k2 = 7 bound, coefficient (du-18)", vec![du(9), dw_limit()], &[], &refs(&tk("18"))));
    v.push(def("pro-Tk-B1.change-40-b", "root version, coefficient (du-17)", vec![du(8), dw_limit()], &[], &refs(&tk("17"))));
    v.push(def("pro-Tk-B1.change-20-b.printed", "k1 = 1, k2 = 7 bound, coefficient (du-9) as printed", vec![du(9), dw_limit()], &[], &refs(&tk("9"))));
    v.push(def("pro-Tk-B1.change-40-b.printed", "root version, coefficient (du-8) as printed", vec![du(8), dw_limit()], &[], &refs(&tk("8"))));

    // At most six B2 children per non-root vertex.
    v.push(def(
        "lemma-B2-20.f1",
        "w (n2 >= 7 B2 children) merged into its parent z",
        vec![p("dz", 2, "degree of z"), p("dw", 3, "degree of w"), p("n2", 7, "B2 children of w")],
        &[("s", "dz+dw-4")],
        &[
            "(dz,dw) -> (2,1)",
            "(3,dw) -> (2,1)",
            "(3,dw) -> (4,2)",
            "5: (3,dw) -> (4,s)",
            "n2-7: (3,dw) -> (3,s)",
            "dw-n2-1: (4,dw) -> (4,s)",
            "dz-2: (4,dw) -> (4,s)",
        ],
    ));
    v.push(def(
        "lemma-B2-20.f2",
        "two B2 children of w dismantled, other children of degree at most 8",
        vec![p("dz", 1, "degree of z").inf(), p("dw", 3, "degree of w"), p("n2", 7, "B2 children of w")],
        &[],
        &[
            "(dz,dw) -> (dz,dw-2)",
            "(3,dw) -> (2,1)",
            "(3,dw) -> (4,2)",
            "5: (3,dw) -> (4,dw-2)",
            "n2-7: (3,dw) -> (3,dw-2)",
            "dw-n2-1: (8,dw) -> (8,dw-2)",
        ],
    ));

    // At most eleven B2 branches overall.
    let z1 = || p("dz", 1, "degree of the parent z1 of w1").inf();
    let w1 = || p("dw1", 2, "degree of w1").opt();
    let n1 = || p("n1", 0, "B2 children of w1");
    v.push(def(
        "thm.case1.sub1.g",
        "w_{k-1} of degree 4 dismantled into w1, w1 not the root",
        vec![w1(), n1(), z1()],
        &[],
        &[
            "(dz,4) -> (dz,2)",
            "(4,3) -> (2,1)",
            "2: (4,3) -> (dw1+2,4)",
            "n1: (dw1,3) -> (dw1+2,3)",
            "dw1-n1-1: (dw1,4) -> (dw1+2,4)",
            "(dz,dw1) -> (dz,dw1+2)",
        ],
    ));
    v.push(def(
        "thm.case1.sub2.g",
        "w_{k-1} of degree 5 dismantled into w1, w1 not the root",
        vec![w1(), n1(), z1()],
        &[],
        &[
            "(dz,5) -> (dz,4)",
            "(5,3) -> (4,2)",
            "(5,3) -> (2,1)",
            "2: (5,3) -> (dw1+2,4)",
            "n1: (dw1,3) -> (dw1+2,3)",
            "dw1-n1-1: (dw1,4) -> (dw1+2,4)",
            "(dz,dw1) -> (dz,dw1+2)",
        ],
    ));
    v.push(def(
        "thm.case3.sub1.g",
        "w_{k-1} of degree 4 dismantled into the root w1",
        vec![w1(), n1()],
        &[],
        &[
            "(dw1,4) -> (dw1,2)",
            "(4,3) -> (2,1)",
            "2: (4,3) -> (dw1+2,4)",
            "n1: (dw1,3) -> (dw1+2,3)",
            "dw1-n1-2: (dw1,4) -> (dw1+2,4)",
            "(dw1,dw1) -> (dw1,dw1+2)",
        ],
    ));
    v.push(def(
        "thm.case3.sub2.g",
        "w_{k-1} of degree 5 dismantled into the root w1",
        vec![w1(), n1()],
        &[],
        &[
            "(dw1,5) -> (dw1,4)",
            "(5,3) -> (4,2)",
            "(5,3) -> (2,1)",
            "2: (5,3) -> (dw1+2,4)",
            "n1: (dw1,3) -> (dw1+2,3)",
            "dw1-n1-2: (dw1,4) -> (dw1+2,4)",
            "(dw1,dw1) -> (dw1,dw1+2)",
        ],
    ));
    let n13 = || p("n13", 0, "children of w1 of degree 4").opt();
    v.push(def(
        "thm.B11.g(n13)",
        "two B2 holders, w1 not the root",
        vec![n13()],
        &[("w", "n13+8"), ("s", "n13+12")],
        &[
            "(w,w) -> (w,s)",
            "(w,8) -> (2,1)",
            "(8,3) -> (4,2)",
            "5: (8,3) -> (s,3)",
            "n13: (w,4) -> (s,4)",
            "4: (w,3) -> (s,4)",
            "2: (w,3) -> (s,3)",
        ],
    ));
    v.push(def(
        "thm.B121.g(n13)",
        "two B2 holders, w1 the root",
        vec![n13()],
        &[("w", "n13+7"), ("s", "n13+11")],
        &[
            "(w,8) -> (2,1)",
            "(8,3) -> (4,2)",
            "5: (8,3) -> (s,3)",
            "n13: (w,4) -> (s,4)",
            "4: (w,3) -> (s,4)",
            "2: (w,3) -> (s,3)",
        ],
    ));
    let b122 = |last: &str| -> Vec<String> {
        vec![
            "(w1,w2) -> (2,1)".into(),
            "(w2,3) -> (4,2)".into(),
            "n22-1: (w2,3) -> (s,3)".into(),
            "n13: (w1,4) -> (s,4)".into(),
            "n21: (w1,3) -> (s,4)".into(),
            "3: (w1,3) -> (s,4)".into(),
            last.into(),
        ]
    };
    let b122_params = || {
        vec![
            p("n13", 0, "children of w1 of degree 4"),
            p("n12", 0, "B2 children of w1"),
            p("n22", 1, "B2 children of w2"),
            p("n21", 0, "B1 children of w2"),
        ]
    };
    let b122_lets = [("w1", "n13+n12+1"), ("w2", "n22+n21+1"), ("s", "w1+n22-2")];
    v.push(def(
        "thm.B122.g",
        "two B2 holders w1 (root) and w2, w2 with B1 children",
        b122_params(),
        &b122_lets,
        &refs(&b122("n12+n22-n21-4: (w1,4) -> (s,4)")),
    ));
    v.push(def(
        "thm.B122.g.printed",
        "thm.B122.g with the last term at degree 3 as printed",
        b122_params(),
        &b122_lets,
        &refs(&b122("n12+n22-n21-4: (w1,3) -> (s,3)")),
    ));
    v.push(def(
        "thm.B2.g(dw1)",
        "w2 of degree 8 with seven B2 children dismantled into w1",
        vec![p("dw1", 3, "degree of w1"), p("dz", 1, "degree of the parent z2 of w2").inf()],
        &[],
        &[
            "(dz,8) -> (dz,4)",
            "(8,3) -> (2,1)",
            "(8,3) -> (4,2)",
            "3: (8,3) -> (dw1+4,4)",
            "(dw1,3) -> (dw1+4,4)",
            "6: (dw1,3) -> (dw1+4,3)",
        ],
    ));
    v
}

/// Every registered expression, in catalog order.
pub fn catalog() -> &'static [BoundExpression] {
    static CATALOG: OnceLock<Vec<BoundExpression>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn lookup(id: &str) -> Result<&'static BoundExpression, CatalogError> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownExpression(id.to_string()))
}

/// Evaluates a registered expression. Parameters set to `f64::INFINITY`, or
/// left out when they default to it, are handled by the analytic limit.
pub fn evaluate(id: &str, params: &crate::Params) -> Result<f64, CatalogError> {
    lookup(id)?.evaluate(params)
}
