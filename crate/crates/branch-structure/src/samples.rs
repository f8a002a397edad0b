//! Random trees that satisfy the preconditions of each transformation.
//!
//! Used by the delta-soundness tests here and by the acceptance suite. Every
//! generated tree is relabelled by a random permutation, so the
//! transformations never see vertices in construction order.

use graph_core::{validate_tree, Tree};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::transform::{TransformKind, TransformationSpec};

/// Incremental edge-list builder; vertex 0 exists from the start.
#[derive(Debug, Clone)]
pub struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Default for Builder {
    fn default() -> Self {
        Self::new()
    }
}

impl Builder {
    pub fn new() -> Self {
        Builder { n: 1, edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn child(&mut self, p: usize) -> usize {
        let v = self.n;
        self.n += 1;
        self.edges.push((p, v));
        v
    }

    /// Hangs a path with `len` edges from `p`; returns its first vertex.
    pub fn path(&mut self, p: usize, len: usize) -> usize {
        let first = self.child(p);
        let mut cur = first;
        for _ in 1..len {
            cur = self.child(cur);
        }
        first
    }

    pub fn p2(&mut self, p: usize) -> usize {
        self.path(p, 2)
    }

    /// A B_k-branch under `p`; for k = 1 this is a path of length 3.
    pub fn bk(&mut self, p: usize, k: usize) -> usize {
        if k == 1 {
            return self.path(p, 3);
        }
        let r = self.child(p);
        for _ in 0..k {
            self.p2(r);
        }
        r
    }

    /// A vertex under `p` with `kids` random subtrees below it.
    pub fn hub(&mut self, p: usize, kids: usize, rng: &mut impl Rng) -> usize {
        let h = self.child(p);
        for _ in 0..kids {
            let size = rng.gen_range(1..=4);
            self.blob(h, size, rng);
        }
        h
    }

    /// A random recursive tree with `size` vertices hung from `p`.
    pub fn blob(&mut self, p: usize, size: usize, rng: &mut impl Rng) -> usize {
        let first = self.child(p);
        let mut made = vec![first];
        for _ in 1..size {
            let at = made[rng.gen_range(0..made.len())];
            made.push(self.child(at));
        }
        first
    }

    pub fn build(&self) -> Tree {
        validate_tree(self.n, &self.edges).expect("builder always makes trees")
    }
}

/// A blob that is never a B_1 root (sizes 1, 2 or 4 only).
fn no_b1_blob(b: &mut Builder, p: usize, rng: &mut impl Rng) -> usize {
    let size = *[1, 2, 4].choose(rng).unwrap();
    b.blob(p, size, rng)
}

fn finish(b: Builder, spec: TransformationSpec, rng: &mut impl Rng) -> (Tree, TransformationSpec) {
    let t = b.build();
    let mut perm: Vec<usize> = (0..t.order()).collect();
    perm.shuffle(rng);
    let mut spec = spec;
    for v in spec.anchors.values_mut() {
        *v = perm[*v];
    }
    (t.relabel(&perm), spec)
}

fn add_extras(b: &mut Builder, p: usize, count: usize, ks: &[usize], rng: &mut impl Rng) {
    for _ in 0..count {
        let k = ks[rng.gen_range(0..ks.len())];
        b.bk(p, k);
    }
}

/// A random instance on which `kind` applies; deterministic in `seed`.
pub fn random_instance(kind: TransformKind, seed: u64) -> (Tree, TransformationSpec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((kind as u64) << 40));
    let rng = &mut rng;
    let mut b = Builder::new();
    let spec = TransformationSpec::new(kind);
    use TransformKind::*;
    let spec = match kind {
        TB1 | TB1Relaxed | TProperTk | T1B1 => {
            let u = 0;
            let size = rng.gen_range(1..=8);
            b.blob(u, size, rng);
            let (v, r) = match kind {
                TB1 => {
                    let v = b.bk(u, rng.gen_range(3..=4));
                    let r = b.bk(u, 1);
                    let n = rng.gen_range(0..=4);
                    add_extras(&mut b, u, n, &[1, 2, 3, 4], rng);
                    (v, r)
                }
                TB1Relaxed => {
                    let v = b.bk(u, 2);
                    let r = b.bk(u, 1);
                    let n = rng.gen_range(0..=4);
                    add_extras(&mut b, u, n, &[1, 2], rng);
                    (v, r)
                }
                TProperTk => {
                    let v = b.bk(u, 2);
                    let r = b.bk(u, 1);
                    let n = rng.gen_range(6..=9);
                    add_extras(&mut b, u, n, &[2], rng);
                    let n = rng.gen_range(0..=3);
                    add_extras(&mut b, u, n, &[1, 3], rng);
                    (v, r)
                }
                _ => {
                    let v = b.bk(u, 3);
                    let n = rng.gen_range(4..=6);
                    add_extras(&mut b, u, n, &[1], rng);
                    let n = rng.gen_range(0..=3);
                    add_extras(&mut b, u, n, &[2, 3, 4], rng);
                    return finish(b, spec.with("u", u).with("v", v), rng);
                }
            };
            spec.with("u", u).with("v", v).with("r", r)
        }
        TB2a => {
            let u = 0;
            let size = rng.gen_range(1..=8);
            b.blob(u, size, rng);
            let y1 = b.bk(u, 2);
            let y2 = b.hub(u, 2, rng);
            spec.with("u", u).with("y1", y1).with("y2", y2)
        }
        T1B2 => {
            let u = 0;
            let size = rng.gen_range(1..=8);
            b.blob(u, size, rng);
            let y = b.bk(u, 2);
            let a = b.p2(u);
            spec.with("u", u).with("y", y).with("a", a)
        }
        T2B2 => {
            let w = 0;
            let size = rng.gen_range(1..=8);
            b.blob(w, size, rng);
            let u = b.child(w);
            b.hub(u, 2, rng);
            b.p2(u);
            let v = b.child(w);
            b.hub(v, 2, rng);
            b.hub(v, 2, rng);
            spec.with("w", w).with("u", u).with("v", v)
        }
        T3B2 => {
            let w = 0;
            let size = rng.gen_range(1..=8);
            b.blob(w, size, rng);
            let u = b.child(w);
            b.hub(u, 2, rng);
            b.p2(u);
            let mut vs = Vec::new();
            for _ in 0..2 {
                let v = b.child(w);
                for _ in 0..rng.gen_range(2..=3) {
                    b.hub(v, 2, rng);
                }
                vs.push(v);
            }
            spec.with("w", w).with("u", u).with("v1", vs[0]).with("v2", vs[1])
        }
        T11 | T12 | T2LemmaB2_20 => {
            let w = 0;
            let z = b.blob(w, rng.gen_range(1..=8), rng);
            match kind {
                T11 => {
                    let n = rng.gen_range(12..=15);
                    add_extras(&mut b, w, n, &[2], rng);
                    let n = rng.gen_range(0..=3);
                    add_extras(&mut b, w, n, &[1, 3], rng);
                }
                T12 => {
                    let n = rng.gen_range(12..=14);
                    add_extras(&mut b, w, n, &[2], rng);
                    // degree 4..8, not a B_k root since its first child has degree 3
                    let odd = b.child(w);
                    b.hub(odd, 2, rng);
                    for _ in 0..rng.gen_range(2..=6) {
                        let size = rng.gen_range(1..=3);
                        b.blob(odd, size, rng);
                    }
                    for _ in 0..rng.gen_range(0..=2) {
                        let size = rng.gen_range(1..=4);
                        b.blob(w, size, rng);
                    }
                }
                _ => {
                    let n = rng.gen_range(7..=11);
                    add_extras(&mut b, w, n, &[2], rng);
                    let n = rng.gen_range(0..=3);
                    add_extras(&mut b, w, n, &[1, 3, 4], rng);
                }
            }
            spec.with("w", w).with("z", z)
        }
        L10T1 | T1LemmaB2_20 => {
            let z = 0;
            let size = rng.gen_range(0..=8);
            for _ in 0..size {
                let s = rng.gen_range(1..=4);
                b.blob(z, s, rng);
            }
            let w = b.child(z);
            if kind == L10T1 {
                add_extras(&mut b, w, 7, &[2], rng);
            } else {
                let n = rng.gen_range(7..=11);
                add_extras(&mut b, w, n, &[2], rng);
                for _ in 0..rng.gen_range(0..=4) {
                    if rng.gen_bool(0.5) {
                        no_b1_blob(&mut b, w, rng);
                    } else {
                        let k = rng.gen_range(3..=4);
                        b.bk(w, k);
                    }
                }
            }
            spec.with("w", w).with("z", z)
        }
        L10T21 | L10T221 | L10T222 => {
            let z = 0;
            // a bare path keeps the count of degree-3 neighbours of z under control
            let len = rng.gen_range(1..=3);
            b.path(z, len);
            let w = b.child(z);
            let n2 = match kind {
                L10T21 => rng.gen_range(8..=12),
                L10T221 => rng.gen_range(8..=10),
                _ => rng.gen_range(11..=12),
            };
            add_extras(&mut b, w, n2, &[2], rng);
            if kind == L10T21 {
                for _ in 0..rng.gen_range(3..=5) {
                    b.hub(z, 2, rng);
                }
            } else {
                for _ in 0..rng.gen_range(0..=2) {
                    b.hub(z, 2, rng);
                }
            }
            for _ in 0..rng.gen_range(0..=3) {
                match rng.gen_range(0..4) {
                    0 => {
                        b.child(z);
                    }
                    1 => {
                        b.p2(z);
                    }
                    2 => {
                        b.bk(z, 3);
                    }
                    _ => {
                        b.hub(z, rng.gen_range(3..=5), rng);
                    }
                }
            }
            spec.with("w", w).with("z", z)
        }
        T1Thm | T2Thm | T3Thm | T4Thm => {
            let top = 0;
            let size = rng.gen_range(1..=6);
            b.blob(top, size, rng);
            let w1 = if rng.gen_bool(0.5) { top } else { b.child(top) };
            let n1 = rng.gen_range(1..=6);
            add_extras(&mut b, w1, n1, &[2], rng);
            for _ in 0..rng.gen_range(0..=3) {
                if rng.gen_bool(0.5) {
                    b.bk(w1, 3);
                } else {
                    b.hub(w1, rng.gen_range(3..=4), rng);
                }
            }
            let zk = match kind {
                T3Thm | T4Thm => w1,
                _ if w1 != top && rng.gen_bool(0.5) => top,
                _ => {
                    let zk = b.child(top);
                    for _ in 0..rng.gen_range(0..=3) {
                        let s = rng.gen_range(1..=4);
                        b.blob(zk, s, rng);
                    }
                    zk
                }
            };
            let wk = b.child(zk);
            let m = match kind {
                T1Thm | T3Thm => 3,
                _ => rng.gen_range(4..=6),
            };
            add_extras(&mut b, wk, m, &[2], rng);
            spec.with("w1", w1).with("wk", wk)
        }
        T5 => {
            let top = 0;
            let size = rng.gen_range(1..=6);
            b.blob(top, size, rng);
            let w1 = if rng.gen_bool(0.5) { top } else { b.child(top) };
            let n21 = rng.gen_range(0..=3);
            let n22 = rng.gen_range(1..=6);
            let n12 = rng.gen_range(n21 + 3..=n21 + 6);
            add_extras(&mut b, w1, n12, &[2], rng);
            for _ in 0..rng.gen_range(0..=3) {
                b.bk(w1, 3);
            }
            let w2 = b.child(w1);
            add_extras(&mut b, w2, n22, &[2], rng);
            add_extras(&mut b, w2, n21, &[1], rng);
            spec.with("w1", w1).with("wk", w2)
        }
        T6 => {
            let top = 0;
            let size = rng.gen_range(1..=6);
            b.blob(top, size, rng);
            let w1 = b.child(top);
            let n12 = rng.gen_range(1..=6);
            add_extras(&mut b, w1, n12, &[2], rng);
            for _ in 0..rng.gen_range(0..=3) {
                b.bk(w1, 3);
            }
            let z2 = if rng.gen_bool(0.5) { top } else { b.child(top) };
            let w2 = b.child(z2);
            let n22 = rng.gen_range(6..=8);
            add_extras(&mut b, w2, n22, &[2], rng);
            b.bk(w2, 1);
            spec.with("w1", w1).with("wk", w2).with("z2", z2)
        }
        Identity => {
            let n = rng.gen_range(2..=20);
            for v in 1..n {
                let p = rng.gen_range(0..v);
                let c = b.child(p);
                debug_assert_eq!(c, v);
            }
            spec
        }
    };
    finish(b, spec, rng)
}
