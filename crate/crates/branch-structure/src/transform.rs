//! The tree surgeries used in the B_1 and B_2 counting arguments.
//!
//! Every transformation works on a copy of the input and returns the new tree
//! together with a closed-form change of the ABC index. The closed form lists
//! one term per edge whose end degrees change, written with the actual degrees
//! found in the tree, so it is exact rather than an upper bound. Terms of the
//! form `f(d, 2)` are all equal to `f(2, 1)`; that is what makes moving whole
//! pendant paths of length 2 free.

use std::collections::{BTreeMap, BTreeSet};

use abc_metric::{f, f_diff};
use graph_core::{validate_tree, Tree};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profile::{bk_children, bk_root, is_p2_start};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TransformKind {
    /// Move a B_1-branch from `u` onto a B_3 or B_4 child `v`.
    TB1,
    /// Same move onto a B_2 child, when `u` only has B_1 and B_2 children.
    TB1Relaxed,
    /// Same move onto a B_2 child of a vertex with at least seven B_2 children.
    TProperTk,
    /// Rebuild four B_1-branches and one B_3-branch at `u`.
    T1B1,
    TB2a,
    T1B2,
    T2B2,
    T3B2,
    T11,
    T12,
    T2LemmaB2_20,
    T1LemmaB2_20,
    L10T1,
    L10T21,
    L10T221,
    L10T222,
    T1Thm,
    T2Thm,
    T3Thm,
    T4Thm,
    T5,
    T6,
    Identity,
}

impl TransformKind {
    pub const ALL: [TransformKind; 23] = [
        TransformKind::TB1,
        TransformKind::TB1Relaxed,
        TransformKind::TProperTk,
        TransformKind::T1B1,
        TransformKind::TB2a,
        TransformKind::T1B2,
        TransformKind::T2B2,
        TransformKind::T3B2,
        TransformKind::T11,
        TransformKind::T12,
        TransformKind::T2LemmaB2_20,
        TransformKind::T1LemmaB2_20,
        TransformKind::L10T1,
        TransformKind::L10T21,
        TransformKind::L10T221,
        TransformKind::L10T222,
        TransformKind::T1Thm,
        TransformKind::T2Thm,
        TransformKind::T3Thm,
        TransformKind::T4Thm,
        TransformKind::T5,
        TransformKind::T6,
        TransformKind::Identity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::TB1 => "T-B1",
            TransformKind::TB1Relaxed => "T-B1-relaxed",
            TransformKind::TProperTk => "T-proper-Tk",
            TransformKind::T1B1 => "T1-B1",
            TransformKind::TB2a => "T-B2-a",
            TransformKind::T1B2 => "T1-B2",
            TransformKind::T2B2 => "T2-B2",
            TransformKind::T3B2 => "T3-B2",
            TransformKind::T11 => "T11",
            TransformKind::T12 => "T12",
            TransformKind::T2LemmaB2_20 => "T2-lemma-B2-20",
            TransformKind::T1LemmaB2_20 => "T1-lemma-B2-20",
            TransformKind::L10T1 => "T1-lemma-B2-10",
            TransformKind::L10T21 => "T21",
            TransformKind::L10T221 => "T221",
            TransformKind::L10T222 => "T222",
            TransformKind::T1Thm => "T1-thm",
            TransformKind::T2Thm => "T2-thm",
            TransformKind::T3Thm => "T3-thm",
            TransformKind::T4Thm => "T4-thm",
            TransformKind::T5 => "T5",
            TransformKind::T6 => "T6",
            TransformKind::Identity => "identity",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Anchor names the transformation reads.
    pub fn anchors(self) -> &'static [&'static str] {
        use TransformKind::*;
        match self {
            TB1 | TB1Relaxed | TProperTk => &["u", "v", "r"],
            T1B1 => &["u", "v"],
            TB2a => &["u", "y1", "y2"],
            T1B2 => &["u", "y", "a"],
            T2B2 => &["w", "u", "v"],
            T3B2 => &["w", "u", "v1", "v2"],
            T11 | T12 | T2LemmaB2_20 | T1LemmaB2_20 | L10T1 | L10T21 | L10T221 | L10T222 => &["w", "z"],
            T1Thm | T2Thm | T3Thm | T4Thm | T5 => &["w1", "wk"],
            T6 => &["w1", "wk", "z2"],
            Identity => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformationSpec {
    pub kind: TransformKind,
    pub anchors: BTreeMap<String, usize>,
}

impl TransformationSpec {
    pub fn new(kind: TransformKind) -> Self {
        TransformationSpec { kind, anchors: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, v: usize) -> Self {
        self.anchors.insert(name.to_string(), v);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{kind}: precondition violated: {requirement}")]
    PreconditionViolated { kind: &'static str, requirement: String },
    #[error("{kind}: missing anchor `{anchor}`")]
    MissingAnchor { kind: &'static str, anchor: String },
    #[error("{kind}: anchor `{anchor}` = {vertex} is not a vertex")]
    BadAnchor { kind: &'static str, anchor: String, vertex: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Transformed {
    pub tree: Tree,
    pub predicted_delta: f64,
    /// Degrees and counts the closed form was evaluated with.
    pub params: BTreeMap<String, i64>,
}

/// `-f(a, b) + f(c, d)` on integer degrees.
fn df(a: usize, b: usize, c: usize, d: usize) -> f64 {
    f_diff(a as f64, b as f64, c as f64, d as f64)
}

fn ff(a: usize, b: usize) -> f64 {
    f(a as f64, b as f64)
}

/// The common value of `f(d, 2)` for every `d`.
fn c2() -> f64 {
    f(2.0, 1.0)
}

struct Ctx<'a> {
    t: &'a Tree,
    spec: &'a TransformationSpec,
    params: BTreeMap<String, i64>,
}

impl<'a> Ctx<'a> {
    fn name(&self) -> &'static str {
        self.spec.kind.name()
    }

    fn anchor(&self, a: &str) -> Result<usize, TransformError> {
        let v = *self
            .spec
            .anchors
            .get(a)
            .ok_or_else(|| TransformError::MissingAnchor { kind: self.name(), anchor: a.to_string() })?;
        if v >= self.t.order() {
            return Err(TransformError::BadAnchor { kind: self.name(), anchor: a.to_string(), vertex: v });
        }
        Ok(v)
    }

    fn need(&self, ok: bool, requirement: impl Into<String>) -> Result<(), TransformError> {
        if ok {
            Ok(())
        } else {
            Err(TransformError::PreconditionViolated { kind: self.name(), requirement: requirement.into() })
        }
    }

    fn d(&self, v: usize) -> usize {
        self.t.degree(v)
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.t.neighbors(a).binary_search(&b).is_ok()
    }

    fn set(&mut self, key: &str, v: usize) {
        self.params.insert(key.to_string(), v as i64);
    }

    /// Sum over neighbours `y` of `v` not in `skip` of `-f(d(v), d(y)) + f(dv_new, d(y))`.
    fn shift(&self, v: usize, dv_new: usize, skip: &[usize]) -> f64 {
        let dv = self.d(v);
        self.t
            .neighbors(v)
            .iter()
            .filter(|y| !skip.contains(y))
            .map(|&y| df(dv, self.d(y), dv_new, self.d(y)))
            .sum()
    }

    /// B_2 roots hanging from `p`, in increasing id order, ignoring `except`.
    fn b2_children(&self, p: usize, except: &[usize]) -> Vec<usize> {
        bk_children(self.t, p)
            .into_iter()
            .filter(|&(r, k)| k == 2 && !except.contains(&r))
            .map(|(r, _)| r)
            .collect()
    }

    fn b1_children(&self, p: usize, except: &[usize]) -> Vec<usize> {
        bk_children(self.t, p).into_iter().filter(|&(r, k)| k == 1 && !except.contains(&r)).map(|(r, _)| r).collect()
    }

    /// First vertices of the length-2 pendant paths hanging from `r`.
    fn p2_starts(&self, r: usize) -> Vec<usize> {
        self.t.neighbors(r).iter().copied().filter(|&a| is_p2_start(self.t, r, a)).collect()
    }

    fn other_neighbors(&self, v: usize, skip: &[usize]) -> Vec<usize> {
        self.t.neighbors(v).iter().copied().filter(|y| !skip.contains(y)).collect()
    }
}

struct Surgery {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Surgery {
    fn new(t: &Tree) -> Self {
        Surgery { n: t.order(), edges: t.edges().into_iter().collect() }
    }

    fn key(a: usize, b: usize) -> (usize, usize) {
        (a.min(b), a.max(b))
    }

    fn cut(&mut self, a: usize, b: usize) {
        let removed = self.edges.remove(&Self::key(a, b));
        assert!(removed, "edge {a}-{b} is not present");
    }

    fn join(&mut self, a: usize, b: usize) {
        let fresh = self.edges.insert(Self::key(a, b));
        assert!(fresh, "edge {a}-{b} already present");
    }

    /// Re-hangs `child` from `from` to `to`.
    fn rehang(&mut self, child: usize, from: usize, to: usize) {
        self.cut(child, from);
        self.join(child, to);
    }

    fn finish(self) -> Tree {
        let edges: Vec<_> = self.edges.into_iter().collect();
        validate_tree(self.n, &edges).expect("surgery must produce a tree")
    }
}

/// Applies a transformation and returns the new tree with the predicted change.
pub fn apply_transformation(t: &Tree, spec: &TransformationSpec) -> Result<Transformed, TransformError> {
    let mut cx = Ctx { t, spec, params: BTreeMap::new() };
    use TransformKind::*;
    let (tree, delta) = match spec.kind {
        TB1 | TB1Relaxed | TProperTk => move_b1(&mut cx)?,
        T1B1 => t1_b1(&mut cx)?,
        TB2a => t_b2_a(&mut cx)?,
        T1B2 => t1_b2(&mut cx)?,
        T2B2 => t2_b2(&mut cx)?,
        T3B2 => t3_b2(&mut cx)?,
        T11 | T12 | T2LemmaB2_20 => spread_two_b2(&mut cx)?,
        T1LemmaB2_20 | L10T1 => collapse_two(&mut cx)?,
        L10T21 | L10T221 | L10T222 => collapse_three(&mut cx)?,
        T1Thm | T2Thm | T3Thm | T4Thm => merge_b2_parent(&mut cx)?,
        T5 => t5(&mut cx)?,
        T6 => t6(&mut cx)?,
        Identity => (t.clone(), 0.0),
    };
    Ok(Transformed { tree, predicted_delta: delta, params: cx.params })
}

fn move_b1(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (u, v, r) = (cx.anchor("u")?, cx.anchor("v")?, cx.anchor("r")?);
    cx.need(bk_root(cx.t, r) == Some((1, u)), "r must be a B_1 root hanging from u")?;
    let vk = bk_root(cx.t, v);
    let kids = bk_children(cx.t, u);
    let count = |k: usize| kids.iter().filter(|&&(_, kk)| kk == k).count();
    match cx.spec.kind {
        TransformKind::TB1 => {
            cx.need(matches!(vk, Some((3 | 4, p)) if p == u), "v must be a B_3 or B_4 root hanging from u")?;
        }
        TransformKind::TB1Relaxed => {
            cx.need(matches!(vk, Some((2, p)) if p == u), "v must be a B_2 root hanging from u")?;
            let non_branch = cx.d(u) - kids.iter().filter(|&&(_, k)| k <= 2).count();
            cx.need(non_branch <= 1, "u may only have B_1 and B_2 children besides its parent")?;
        }
        _ => {
            cx.need(matches!(vk, Some((2, p)) if p == u), "v must be a B_2 root hanging from u")?;
            cx.need(count(2) >= 7, "u must have at least seven B_2 children")?;
        }
    }
    let (du, dv) = (cx.d(u), cx.d(v));
    cx.set("du", du);
    cx.set("dv", dv);
    cx.set("k1", count(1));
    cx.set("k2", count(2));
    cx.set("k3", count(3));

    let mut s = Surgery::new(cx.t);
    s.rehang(r, u, v);
    let delta = df(du, dv, du - 1, dv + 1) + cx.shift(u, du - 1, &[v, r]);
    Ok((s.finish(), delta))
}

fn t1_b1(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (u, v) = (cx.anchor("u")?, cx.anchor("v")?);
    let b1 = cx.b1_children(u, &[]);
    cx.need(b1.len() >= 4, "u must have at least four B_1 children")?;
    cx.need(bk_root(cx.t, v) == Some((3, u)), "v must be a B_3 root hanging from u")?;
    let (r1, r2, r3, r4) = (b1[0], b1[1], b1[2], b1[3]);
    let leaf_of = |r: usize| {
        let x = cx.other_neighbors(r, &[u])[0];
        cx.other_neighbors(x, &[r])[0]
    };
    let (l2, a3) = (leaf_of(r2), cx.p2_starts(v)[0]);
    let du = cx.d(u);
    cx.set("du", du);
    cx.set("k1", b1.len());

    let mut s = Surgery::new(cx.t);
    s.cut(v, a3);
    s.cut(u, r2);
    s.cut(u, r3);
    s.cut(u, r4);
    s.join(r1, a3);
    s.join(u, l2);
    s.join(r2, r3);
    s.join(l2, r4);
    let du2 = du - 2;
    let delta = df(du, 4, du2, 3) + 2.0 * ff(du2, 3) - 2.0 * c2() + cx.shift(u, du2, &[v, r1, r2, r3, r4]);
    Ok((s.finish(), delta))
}

fn t_b2_a(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (u, y1, y2) = (cx.anchor("u")?, cx.anchor("y1")?, cx.anchor("y2")?);
    cx.need(cx.d(u) == 3, "u must have degree 3")?;
    cx.need(bk_root(cx.t, y1) == Some((2, u)), "y1 must be a B_2 root hanging from u")?;
    cx.need(y2 != y1 && cx.adjacent(u, y2) && cx.d(y2) == 3, "y2 must be another degree-3 neighbour of u")?;
    let w = cx.other_neighbors(u, &[y1, y2])[0];
    let dw = cx.d(w);
    cx.set("dw", dw);
    let a = cx.p2_starts(y1)[0];
    let mut s = Surgery::new(cx.t);
    s.rehang(a, y1, u);
    let delta = df(dw, 3, dw, 4) + df(3, 3, 4, 2) + df(3, 3, 4, 3);
    Ok((s.finish(), delta))
}

fn t1_b2(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (u, y, a) = (cx.anchor("u")?, cx.anchor("y")?, cx.anchor("a")?);
    cx.need(cx.d(u) == 3, "u must have degree 3")?;
    cx.need(bk_root(cx.t, y) == Some((2, u)), "y must be a B_2 root hanging from u")?;
    cx.need(cx.adjacent(u, a) && is_p2_start(cx.t, u, a), "a must start a pendant path of length 2 at u")?;
    let w = cx.other_neighbors(u, &[y, a])[0];
    let dw = cx.d(w);
    cx.set("dw", dw);
    let b = cx.p2_starts(y)[0];
    let mut s = Surgery::new(cx.t);
    s.rehang(b, y, u);
    let delta = df(dw, 3, dw, 4) + df(3, 3, 4, 2);
    Ok((s.finish(), delta))
}

fn t2_b2(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w, u, v) = (cx.anchor("w")?, cx.anchor("u")?, cx.anchor("v")?);
    cx.need(cx.d(w) == 3 && cx.d(u) == 3 && cx.d(v) == 3, "w, u and v must have degree 3")?;
    cx.need(u != v && cx.adjacent(w, u) && cx.adjacent(w, v), "u and v must be neighbours of w")?;
    let z = cx.other_neighbors(w, &[u, v])[0];
    let un = cx.other_neighbors(u, &[w]);
    let starts: Vec<usize> = un.iter().copied().filter(|&x| is_p2_start(cx.t, u, x)).collect();
    let ys: Vec<usize> = un.iter().copied().filter(|&x| cx.d(x) == 3).collect();
    cx.need(starts.len() == 1 && ys.len() == 1, "u needs one pendant path of length 2 and one degree-3 child")?;
    let (a, y) = (starts[0], ys[0]);
    let qs = cx.other_neighbors(v, &[w]);
    cx.need(qs.iter().all(|&q| cx.d(q) == 3), "both children of v must have degree 3")?;
    let dz = cx.d(z);
    cx.set("dz", dz);

    let mut s = Surgery::new(cx.t);
    s.rehang(y, u, w);
    s.rehang(qs[0], v, w);
    s.rehang(qs[1], v, w);
    s.rehang(a, u, w);
    s.rehang(u, w, v);
    let delta = df(dz, 3, dz, 6) - ff(3, 3) + c2() + df(3, 3, 6, 2) + 3.0 * df(3, 3, 6, 3);
    Ok((s.finish(), delta))
}

fn t3_b2(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w, u, v1, v2) = (cx.anchor("w")?, cx.anchor("u")?, cx.anchor("v1")?, cx.anchor("v2")?);
    cx.need(cx.d(w) == 4, "w must have degree 4")?;
    let distinct = u != v1 && u != v2 && v1 != v2;
    cx.need(distinct && [u, v1, v2].iter().all(|&x| cx.adjacent(w, x)), "u, v1, v2 must be distinct neighbours of w")?;
    let z = cx.other_neighbors(w, &[u, v1, v2])[0];
    cx.need(cx.d(u) == 3, "u must have degree 3")?;
    let un = cx.other_neighbors(u, &[w]);
    let starts: Vec<usize> = un.iter().copied().filter(|&x| is_p2_start(cx.t, u, x)).collect();
    let ys: Vec<usize> = un.iter().copied().filter(|&x| cx.d(x) == 3).collect();
    cx.need(starts.len() == 1 && ys.len() == 1, "u needs one pendant path of length 2 and one degree-3 child")?;
    let y = ys[0];
    for v in [v1, v2] {
        cx.need(matches!(cx.d(v), 3 | 4), "v1 and v2 must have degree 3 or 4")?;
        cx.need(cx.other_neighbors(v, &[w]).iter().all(|&c| cx.d(c) == 3), "children of v1 and v2 must have degree 3")?;
    }
    let (dz, dv1, dv2) = (cx.d(z), cx.d(v1), cx.d(v2));
    let sdeg = dv1 + dv2 + 1;
    cx.set("dz", dz);
    cx.set("dv1", dv1);
    cx.set("dv2", dv2);

    let mut s = Surgery::new(cx.t);
    s.rehang(y, u, w);
    for v in [v1, v2] {
        for c in cx.other_neighbors(v, &[w]) {
            s.rehang(c, v, w);
        }
    }
    s.cut(w, v1);
    s.cut(w, v2);
    s.join(u, v1);
    s.join(v1, v2);
    let delta = df(dz, 4, dz, sdeg)
        + df(4, 3, sdeg, 3)
        + df(3, 3, sdeg, 3)
        + (dv1 - 1) as f64 * df(dv1, 3, sdeg, 3)
        + (dv2 - 1) as f64 * df(dv2, 3, sdeg, 3)
        - ff(4, dv1)
        - ff(4, dv2)
        + 2.0 * c2();
    Ok((s.finish(), delta))
}

/// Shared checks for the transformations that act on a parent `w` of many
/// B_2-branches with a designated neighbour `z`.
fn b2_parent(cx: &Ctx) -> Result<(usize, usize, Vec<usize>), TransformError> {
    let (w, z) = (cx.anchor("w")?, cx.anchor("z")?);
    cx.need(cx.adjacent(w, z), "z must be a neighbour of w")?;
    let b2 = cx.b2_children(w, &[z]);
    Ok((w, z, b2))
}

fn spread_two_b2(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w, z, b2) = b2_parent(cx)?;
    let kids: Vec<usize> = cx.other_neighbors(w, &[z]);
    match cx.spec.kind {
        TransformKind::T11 => {
            cx.need(b2.len() >= 12, "w must have at least twelve B_2 children")?;
            let all_small = kids.iter().all(|&c| matches!(bk_root(cx.t, c), Some((1..=3, p)) if p == w));
            cx.need(all_small, "every child of w must be a B_1, B_2 or B_3 root")?;
        }
        TransformKind::T12 => {
            cx.need(b2.len() >= 12, "w must have at least twelve B_2 children")?;
            let odd = kids.iter().any(|&c| (4..=8).contains(&cx.d(c)) && bk_root(cx.t, c).is_none());
            cx.need(odd, "w needs a child of degree 4..8 that is not a B_k root")?;
        }
        _ => cx.need((7..=11).contains(&b2.len()), "w must have between seven and eleven B_2 children")?,
    }
    let dw = cx.d(w);
    cx.set("dw", dw);
    cx.set("n2", b2.len());
    let (v, x1, y1) = (&b2[..5], b2[5], b2[6]);
    let ya = cx.p2_starts(y1);
    let xa = cx.p2_starts(x1);

    let mut s = Surgery::new(cx.t);
    s.cut(w, x1);
    s.cut(w, y1);
    s.rehang(ya[0], y1, v[0]);
    s.rehang(ya[1], y1, v[1]);
    s.rehang(xa[0], x1, v[2]);
    s.rehang(xa[1], x1, v[3]);
    s.join(v[4], x1);
    s.join(x1, y1);
    let skip: Vec<usize> = b2[..7].to_vec();
    let delta = cx.shift(w, dw - 2, &skip) + 5.0 * df(3, dw, 4, dw - 2) - 2.0 * ff(dw, 3) + 2.0 * c2();
    Ok((s.finish(), delta))
}

/// Change on the edges around a receiver `r` (other than `parent`) when its
/// degree grows by `gain`. Zero when `r` is a B_k root.
fn receiver_gain(cx: &Ctx, r: usize, gain: usize, parent: usize) -> f64 {
    cx.shift(r, cx.d(r) + gain, &[parent])
}

/// Lemma-style collapse of `w` into its neighbour `z`, dismantling two B_2
/// children and giving their pendant paths to five others.
fn collapse_two(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w, z, b2) = b2_parent(cx)?;
    let kids = cx.other_neighbors(w, &[z]);
    if cx.spec.kind == TransformKind::L10T1 {
        cx.need(cx.d(w) == 8, "w must have degree 8")?;
        cx.need(b2.len() == kids.len(), "every child of w must be a B_2 root")?;
    } else {
        cx.need(b2.len() >= 7, "w must have at least seven B_2 children")?;
        cx.need(cx.b1_children(w, &[z]).is_empty(), "w must not have B_1 children")?;
    }
    let (dz, dw) = (cx.d(z), cx.d(w));
    let sdeg = dz + dw - 4;
    cx.set("dz", dz);
    cx.set("dw", dw);
    cx.set("n2", b2.len());
    let (x1, y1, recv) = (b2[0], b2[1], &b2[2..7]);
    let starts: Vec<(usize, usize)> =
        cx.p2_starts(x1).into_iter().map(|a| (x1, a)).chain(cx.p2_starts(y1).into_iter().map(|a| (y1, a))).collect();

    let mut s = Surgery::new(cx.t);
    s.cut(z, w);
    let mut delta = -ff(dz, dw) + cx.shift(z, sdeg, &[w]);
    for &m in &kids {
        if m == x1 || m == y1 {
            continue;
        }
        s.rehang(m, w, z);
        let gain = usize::from(recv.contains(&m));
        delta += df(dw, cx.d(m), sdeg, cx.d(m) + gain);
    }
    for (i, &(from, a)) in starts.iter().enumerate() {
        s.rehang(a, from, recv[i]);
    }
    s.join(recv[4], x1);
    for &r in recv {
        delta += receiver_gain(cx, r, 1, w);
    }
    // w ends in the middle of the path recv[4] - x1 - w - y1.
    delta += df(dw, 3, 2, 2) + df(dw, 3, 2, 1) + c2();
    Ok((s.finish(), delta))
}

/// Collapse of `w` into `z` dismantling three B_2 children (eight pendant
/// paths of length 2 are handed out).
fn collapse_three(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w, z, b2) = b2_parent(cx)?;
    let dw = cx.d(w);
    let z3: Vec<usize> = cx.other_neighbors(z, &[w]).into_iter().filter(|&x| cx.d(x) == 3).collect();
    // (receiver, number of paths it takes)
    let recv: Vec<(usize, usize)> = match cx.spec.kind {
        TransformKind::L10T21 => {
            cx.need((9..=13).contains(&dw), "w must have degree 9..13")?;
            cx.need(b2.len() >= 8, "w must have at least eight B_2 children")?;
            cx.need(z3.len() >= 3, "z must have at least three other neighbours of degree 3")?;
            b2[3..8].iter().chain(&z3[..3]).map(|&r| (r, 1)).collect()
        }
        TransformKind::L10T221 => {
            cx.need((9..=11).contains(&dw), "w must have degree 9..11")?;
            cx.need(b2.len() >= 8, "w must have at least eight B_2 children")?;
            cx.need(z3.len() <= 2, "z must have at most two other neighbours of degree 3")?;
            b2[3..6].iter().map(|&r| (r, 2)).chain(b2[6..8].iter().map(|&r| (r, 1))).collect()
        }
        _ => {
            cx.need((12..=13).contains(&dw), "w must have degree 12 or 13")?;
            cx.need(b2.len() >= 11, "w must have at least eleven B_2 children")?;
            cx.need(z3.len() <= 2, "z must have at most two other neighbours of degree 3")?;
            b2[3..11].iter().map(|&r| (r, 1)).collect()
        }
    };
    let dz = cx.d(z);
    let sdeg = dz + dw - 5;
    cx.set("dz", dz);
    cx.set("dw", dw);
    cx.set("n2", b2.len());
    let (x1, x2, y1) = (b2[0], b2[1], b2[2]);
    let gain_of = |v: usize| recv.iter().find(|&&(r, _)| r == v).map_or(0, |&(_, g)| g);

    let mut slots: Vec<usize> = Vec::new();
    for &(r, g) in &recv {
        slots.extend(std::iter::repeat_n(r, g));
    }
    let mut s = Surgery::new(cx.t);
    s.cut(z, w);
    let mut delta = -ff(dz, dw);
    for m in cx.other_neighbors(z, &[w]) {
        delta += df(dz, cx.d(m), sdeg, cx.d(m) + gain_of(m));
    }
    for m in cx.other_neighbors(w, &[z]) {
        if m == x1 || m == x2 || m == y1 {
            continue;
        }
        s.rehang(m, w, z);
        delta += df(dw, cx.d(m), sdeg, cx.d(m) + gain_of(m));
    }
    let mut slot = slots.iter();
    for d in [x1, x2, y1] {
        for a in cx.p2_starts(d) {
            s.rehang(a, d, *slot.next().unwrap());
        }
    }
    s.cut(w, x1);
    s.cut(w, y1);
    s.join(x1, y1);
    s.join(*slot.next().unwrap(), x1);
    s.join(*slot.next().unwrap(), x2);
    for &(r, g) in &recv {
        let parent = if cx.adjacent(r, w) { w } else { z };
        delta += receiver_gain(cx, r, g, parent);
    }
    // w - x2 becomes a (1, 2) edge; w - x1 and w - y1 disappear; x1 - y1 and
    // the two receiver edges to x1 and x2 are new.
    delta += df(dw, 3, 1, 2) - 2.0 * ff(dw, 3) + 3.0 * c2();
    Ok((s.finish(), delta))
}

/// Moves the B_2-branches of `wk` (degree 4..7) up to `w1`.
fn merge_b2_parent(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    use TransformKind::*;
    let (w1, wk) = (cx.anchor("w1")?, cx.anchor("wk")?);
    cx.need(w1 != wk, "w1 and wk must differ")?;
    let kids = cx.b2_children(wk, &[]);
    let dwk = cx.d(wk);
    cx.need(kids.len() + 1 == dwk, "all but one neighbour of wk must be B_2 roots")?;
    let zk = cx.other_neighbors(wk, &kids)[0];
    let kind = cx.spec.kind;
    match kind {
        T1Thm | T3Thm => cx.need(dwk == 4, "wk must have degree 4")?,
        _ => cx.need((5..=7).contains(&dwk), "wk must have degree 5..7")?,
    }
    if matches!(kind, T1Thm | T2Thm) {
        cx.need(zk != w1 && !cx.adjacent(w1, wk), "w1 must not be adjacent to wk")?;
    } else {
        cx.need(zk == w1, "w1 must be the parent of wk")?;
    }
    let n1 = cx.b2_children(w1, &[wk]).len();
    cx.need(n1 >= 1, "w1 must have a B_2 child")?;
    let dw1 = cx.d(w1);
    let m = dwk - 1;
    let sdeg = if dwk == 4 { dw1 + 2 } else { dw1 + m - 2 };
    cx.set("dw1", dw1);
    cx.set("dwk", dwk);
    cx.set("dzk", cx.d(zk));
    cx.set("n1", n1);

    let (a, b, c) = (kids[0], kids[1], kids[2]);
    let cs = cx.p2_starts(c);
    let mut s = Surgery::new(cx.t);
    s.rehang(cs[0], c, a);
    s.rehang(cs[1], c, b);
    s.rehang(a, wk, w1);
    s.rehang(b, wk, w1);
    let rest = &kids[3..];
    let mut delta = 2.0 * df(dwk, 3, sdeg, 4);
    let dwk_new = if dwk == 4 {
        delta += df(4, 3, 2, 1);
        2
    } else {
        let e = rest[0];
        for p in cx.p2_starts(e) {
            s.rehang(p, e, wk);
        }
        s.rehang(e, wk, c);
        for &r in &rest[1..] {
            s.rehang(r, wk, w1);
        }
        delta += df(dwk, 3, 4, 2) - ff(dwk, 3) + c2() + (m - 4) as f64 * df(dwk, 3, sdeg, 3);
        4
    };
    if zk == w1 {
        delta += df(dw1, dwk, sdeg, dwk_new) + cx.shift(w1, sdeg, &[wk]);
    } else {
        let dzk = cx.d(zk);
        delta += df(dzk, dwk, dzk, dwk_new) + cx.shift(w1, sdeg, &[]);
    }
    Ok((s.finish(), delta))
}

fn t5(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w1, w2) = (cx.anchor("w1")?, cx.anchor("wk")?);
    cx.need(cx.adjacent(w1, w2), "w1 must be the parent of wk")?;
    let b2 = cx.b2_children(w2, &[w1]);
    let b1 = cx.b1_children(w2, &[w1]);
    cx.need(!b2.is_empty(), "wk must have a B_2 child")?;
    cx.need(b2.len() + b1.len() + 1 == cx.d(w2), "wk may only have B_1 and B_2 children")?;
    let recv = cx.b2_children(w1, &[w2]);
    cx.need(recv.len() >= b1.len() + 3, "w1 needs at least n21 + 3 B_2 children")?;
    let recv = &recv[..b1.len() + 3];
    let (dw1, dw2) = (cx.d(w1), cx.d(w2));
    let (n22, n21) = (b2.len(), b1.len());
    let sdeg = dw1 + n22 - 2;
    cx.set("dw1", dw1);
    cx.set("dw2", dw2);
    cx.set("n22", n22);
    cx.set("n21", n21);

    let q = b2[0];
    let qs = cx.p2_starts(q);
    let mut s = Surgery::new(cx.t);
    s.cut(w1, w2);
    s.rehang(qs[0], q, recv[0]);
    s.rehang(qs[1], q, recv[1]);
    s.join(recv[2], q);
    for (j, &r) in b1.iter().enumerate() {
        s.rehang(r, w2, recv[3 + j]);
    }
    for &m in &b2[1..] {
        s.rehang(m, w2, w1);
    }
    let mut delta = -ff(dw1, dw2) + df(dw2, 3, 2, 1) + c2() + (n22 - 1) as f64 * df(dw2, 3, sdeg, 3);
    for y in cx.other_neighbors(w1, &[w2]) {
        let gain = usize::from(recv.contains(&y));
        delta += df(dw1, cx.d(y), sdeg, cx.d(y) + gain);
    }
    for &r in recv {
        delta += receiver_gain(cx, r, 1, w1);
    }
    Ok((s.finish(), delta))
}

fn t6(cx: &mut Ctx) -> Result<(Tree, f64), TransformError> {
    let (w1, w2, z2) = (cx.anchor("w1")?, cx.anchor("wk")?, cx.anchor("z2")?);
    cx.need(cx.adjacent(w2, z2), "z2 must be the parent of wk")?;
    cx.need(w1 != w2 && !cx.adjacent(w1, w2), "w1 must not be adjacent to wk")?;
    let b2 = cx.b2_children(w2, &[z2]);
    let b1 = cx.b1_children(w2, &[z2]);
    cx.need(b2.len() >= 6, "wk must have at least six B_2 children")?;
    cx.need(b1.len() == 1 && b2.len() + 2 == cx.d(w2), "wk must have exactly one B_1 child and otherwise B_2 children")?;
    let p1 = cx.b2_children(w1, &[]);
    cx.need(!p1.is_empty(), "w1 must have a B_2 child")?;
    let p = p1[0];
    let (dw1, dw2, dz2) = (cx.d(w1), cx.d(w2), cx.d(z2));
    let n22 = b2.len();
    let sdeg = dw1 + n22 - 2;
    cx.set("dw1", dw1);
    cx.set("dw2", dw2);
    cx.set("dz2", dz2);
    cx.set("n22", n22);

    let (x, y) = (b2[0], b2[1]);
    let movers = &b2[2..];
    let slots = [movers[0], movers[1], movers[2], p];
    let starts: Vec<(usize, usize)> =
        cx.p2_starts(x).into_iter().map(|a| (x, a)).chain(cx.p2_starts(y).into_iter().map(|a| (y, a))).collect();
    let mut s = Surgery::new(cx.t);
    for (i, &(from, a)) in starts.iter().enumerate() {
        s.rehang(a, from, slots[i]);
    }
    s.rehang(y, w2, x);
    for &m in movers {
        s.rehang(m, w2, w1);
    }
    let mut delta = df(dw2, dz2, 3, dz2) + df(dw2, 3, 3, 2) - ff(dw2, 3) + c2();
    delta += 3.0 * df(dw2, 3, sdeg, 4) + (n22 - 5) as f64 * df(dw2, 3, sdeg, 3);
    for yv in cx.other_neighbors(w1, &[]) {
        let gain = usize::from(yv == p);
        delta += df(dw1, cx.d(yv), sdeg, cx.d(yv) + gain);
    }
    for &m in &movers[..3] {
        delta += receiver_gain(cx, m, 1, w2);
    }
    delta += receiver_gain(cx, p, 1, w1);
    // the edge to the B_1 root stays a (d, 2) edge
    delta += df(dw2, 2, 3, 2);
    Ok((s.finish(), delta))
}
