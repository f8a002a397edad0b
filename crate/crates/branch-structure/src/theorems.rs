use std::collections::BTreeMap;

use graph_core::Tree;
use serde::Serialize;

use crate::profile::{analyze, BranchProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    /// Conjectures are reported but never count as failures.
    pub asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
}

impl Verdict {
    fn check(pass: bool, witness: Vec<usize>) -> Self {
        Verdict { pass, asserted: true, note: None, witness: if pass { Vec::new() } else { witness } }
    }

    fn vacuous(note: &str) -> Self {
        Verdict { pass: true, asserted: true, note: Some(note.to_string()), witness: Vec::new() }
    }

    fn informational(mut self) -> Self {
        self.asserted = false;
        self
    }
}

pub const CHECK_NAMES: [&str; 13] = [
    "internal_paths_absent",
    "pendant_lengths_in_2_3",
    "at_most_one_length3",
    "no_bk_ge5",
    "b4_le_4",
    "b1_le_4",
    "b2_le_11",
    "per_parent_b2_le_6",
    "no_b1_with_b4_same_parent",
    "no_b2_with_b4_same_parent",
    "at_most_one_proper_tk",
    "conjecture_b1_le_3",
    "conjecture_b2_le_9",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub order: usize,
    pub checks: BTreeMap<String, Verdict>,
}

impl TheoremReport {
    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.checks.get(name)
    }

    pub fn passes(&self, name: &str) -> bool {
        self.checks.get(name).is_some_and(|v| v.pass)
    }

    /// Names of asserted checks that failed.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, v)| v.asserted && !v.pass)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn all_asserted_pass(&self) -> bool {
        self.failures().is_empty()
    }
}

fn roots_of(p: &BranchProfile, k: usize) -> Vec<usize> {
    p.b_roots.iter().filter(|b| b.k == k).map(|b| b.root).collect()
}

fn count_cap(p: &BranchProfile, k: usize, cap: usize) -> Verdict {
    let roots = roots_of(p, k);
    Verdict::check(roots.len() <= cap, roots)
}

fn shared_parent(p: &BranchProfile, k1: usize, k2: usize) -> Verdict {
    let mut witness = Vec::new();
    for a in p.b_roots.iter().filter(|b| b.k == k1) {
        for b in p.b_roots.iter().filter(|b| b.k == k2) {
            if a.parent == b.parent {
                witness.extend([a.parent, a.root, b.root]);
            }
        }
    }
    Verdict::check(witness.is_empty(), witness)
}

pub fn check_theorems(t: &Tree) -> TheoremReport {
    check_profile(t, &analyze(t))
}

pub fn check_profile(t: &Tree, p: &BranchProfile) -> TheoremReport {
    let mut checks = BTreeMap::new();
    let mut put = |name: &str, v: Verdict| {
        checks.insert(name.to_string(), v);
    };

    if t.max_degree() <= 2 {
        for name in CHECK_NAMES {
            let v = Verdict::vacuous("path: no branching vertex");
            put(name, if name.starts_with("conjecture") { v.informational() } else { v });
        }
        return TheoremReport { order: t.order(), checks };
    }

    let internal: Vec<usize> = p
        .internal_paths
        .iter()
        .flat_map(|ip| std::iter::once(ip.ends.0).chain(ip.interior.iter().copied()).chain([ip.ends.1]))
        .collect();
    put("internal_paths_absent", Verdict::check(p.internal_paths.is_empty(), internal));

    if t.order() < 10 {
        put("pendant_lengths_in_2_3", Verdict::vacuous("order below 10"));
        put("at_most_one_length3", Verdict::vacuous("order below 10"));
    } else {
        let bad: Vec<usize> = p
            .pendant_paths
            .iter()
            .filter(|pp| pp.length != 2 && pp.length != 3)
            .flat_map(|pp| [pp.attach, pp.leaf])
            .collect();
        put("pendant_lengths_in_2_3", Verdict::check(bad.is_empty(), bad));
        let long: Vec<usize> = p.pendant_paths.iter().filter(|pp| pp.length == 3).map(|pp| pp.start).collect();
        put("at_most_one_length3", Verdict::check(long.len() <= 1, long));
    }

    let big: Vec<usize> = p.b_roots.iter().filter(|b| b.k >= 5).map(|b| b.root).collect();
    put("no_bk_ge5", Verdict::check(big.is_empty(), big));
    put("b4_le_4", count_cap(p, 4, 4));
    put("b1_le_4", count_cap(p, 1, 4));
    put("b2_le_11", count_cap(p, 2, 11));

    // Vertices of maximum degree are treated as possible roots and exempt.
    let dmax = t.max_degree();
    let mut per_parent: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for b in p.b_roots.iter().filter(|b| b.k == 2) {
        per_parent.entry(b.parent).or_default().push(b.root);
    }
    let mut over = Vec::new();
    for (w, roots) in &per_parent {
        if t.degree(*w) != dmax && roots.len() > 6 {
            over.push(*w);
            over.extend(roots);
        }
    }
    put("per_parent_b2_le_6", Verdict::check(over.is_empty(), over));
    put("no_b1_with_b4_same_parent", shared_parent(p, 1, 4));
    put("no_b2_with_b4_same_parent", shared_parent(p, 2, 4));

    let tk: Vec<usize> = p.proper_tk_roots.iter().map(|&(v, _)| v).collect();
    put("at_most_one_proper_tk", Verdict::check(tk.len() <= 1, tk));

    put("conjecture_b1_le_3", count_cap(p, 1, 3).informational());
    put("conjecture_b2_le_9", count_cap(p, 2, 9).informational());

    TheoremReport { order: t.order(), checks }
}
