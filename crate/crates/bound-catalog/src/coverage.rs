//! Which catalog entry, probe or table stands for each labelled display of
//! the B1 and B2 arguments.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Coverage {
    /// Encoded term by term under these ids.
    Encoded(&'static [&'static str]),
    /// Checked by sampling the named expression along the named parameter.
    Probe { id: &'static str, param: &'static str },
    /// Not encoded verbatim, for the given reason.
    Note(&'static str),
}

use Coverage::*;

const SUM_NOTE: &str = "sum over unspecified child degrees; bounded by the entry with the maximizing degree";

#[rustfmt::skip]
pub const COVERAGE: &[(&str, Coverage)] = &[
    ("change-10", Encoded(&["change-10"])),
    ("change-20", Encoded(&["change-20"])),
    ("change-20-20", Encoded(&["change-20-20"])),
    ("change-40", Probe { id: "change-20-20", param: "du" }),
    ("change-60", Encoded(&["change-60"])),
    ("change-70", Encoded(&["change-70"])),
    ("change-75", Note("list of forbidden (k1, k2) pairs; reproduced by forbidden_configuration_table")),
    ("change-20-2a", Encoded(&["change-20-2a"])),
    ("change-20-2", Encoded(&["change-20-2"])),
    ("change-60-2", Encoded(&["change-60-2"])),
    ("change-70-2", Encoded(&["change-70-2", "change-70-2.alt"])),
    ("change-80", Encoded(&["change-80"])),
    ("change-90", Encoded(&["change-90"])),
    ("change-100", Encoded(&["change-100"])),
    ("change-110", Encoded(&["change-110"])),
    ("change-B2-10", Encoded(&["change-B2-10"])),
    ("change-B2-20", Encoded(&["change-B2-20"])),
    ("change-B2-30", Encoded(&["change-B2-30"])),
    ("change-B2-40", Encoded(&["change-B2-40"])),
    ("change-B2-50", Encoded(&["change-B2-50"])),
    ("change-B2-60", Encoded(&["change-B2-60"])),
    ("change-B2-65", Note("substitution n3 = d(w) - n2 - 1 into change-B2-60 with x = 4")),
    ("change-B2-66", Encoded(&["change-B2-66"])),
    ("change-B2-67", Encoded(&["change-B2-66", "change-B2-67.printed"])),
    ("change-B2-68", Encoded(&["lemma-B2-30.g1"])),
    ("change-B2-69", Encoded(&["lemma-B2-30.g2"])),
    ("change-B2-70", Probe { id: "lemma-B2-30.g1", param: "dw" }),
    ("change-B2-80", Probe { id: "lemma-B2-30.g2", param: "dw" }),
    ("change-B2-60-12", Note("change-B2-60 with n3 = d(w) - n2 - 1")),
    ("change-B2-67-12", Encoded(&["change-B2-66"])),
    ("change-B2-100", Encoded(&["change-B2-100"])),
    ("change-B2-100-22", Encoded(&["change-B2-100-22"])),
    ("change-B2-67-22", Encoded(&["change-B2-67-22.printed", "change-B2-100-22"])),
    ("lemma-change-B2-10-10", Note(SUM_NOTE)),
    ("lemma-change-B2-10-20", Encoded(&["lemma-B2-10.g(dz,8)", "lemma-B2-10.g(dz,8).printed"])),
    ("lemma-change-B2-10-20-root", Encoded(&["lemma-B2-10.g(dz,8).root"])),
    ("lemma-change-B2-10-30", Note(SUM_NOTE)),
    ("lemma-change-B2-10-40", Encoded(&["lemma-B2-10.g21", "lemma-B2-10.g21.printed"])),
    ("lemma-change-B2-10-40-r", Encoded(&["lemma-B2-10.g21.root"])),
    ("lemma-change-B2-10-50", Note(SUM_NOTE)),
    ("lemma-change-B2-10-60", Encoded(&["lemma-B2-10.g221", "lemma-B2-10.g221.printed"])),
    ("lemma-change-B2-10-60-r", Encoded(&["lemma-B2-10.g221.root"])),
    ("lemma-change-B2-10-70", Note(SUM_NOTE)),
    ("lemma-change-B2-10-80", Encoded(&["lemma-B2-10.g222", "lemma-B2-10.g222.printed"])),
    ("lemma-change-B2-10-80-r", Encoded(&["lemma-B2-10.g222.root"])),
    ("change-10-b", Encoded(&["pro-Tk-B1.change-10-b"])),
    ("change-20-b", Encoded(&["pro-Tk-B1.change-20-b", "pro-Tk-B1.change-20-b.printed"])),
    ("change-30-b", Encoded(&["pro-Tk-B1.change-30-b"])),
    ("change-40-b", Encoded(&["pro-Tk-B1.change-40-b", "pro-Tk-B1.change-40-b.printed"])),
    ("lemma-change-B2-20-10", Note(SUM_NOTE)),
    ("lemma-change-B2-20-10-upper", Encoded(&["lemma-B2-20.f1"])),
    ("lemma-change-B2-20-10-5-upper", Probe { id: "lemma-B2-20.f1", param: "dz" }),
    ("lemma-change-B2-20-10-6-upper", Note("inequality between two derivative terms; covered by the same probe as the derivative")),
    ("lemma-change-B2-20-10-7-upper", Note("algebraic rearrangement of the previous inequality")),
    ("lemma-change-B2-20-10-8-upper", Note("algebraic rearrangement of the previous inequality")),
    ("lemma-change-B2-20-20", Note(SUM_NOTE)),
    ("lemma-change-B2-20-20-upper", Encoded(&["lemma-B2-20.f2"])),
    ("thm-noB2-10", Note(SUM_NOTE)),
    ("thm-noB2-10b", Probe { id: "thm.case1.sub1.g", param: "dz" }),
    ("thm-noB2-10c", Encoded(&["thm.case1.sub1.g"])),
    ("thm-noB2-10d", Note("lists of constants; rows of the golden suite")),
    ("thm-noB2-20", Note(SUM_NOTE)),
    ("thm-noB2-20b", Probe { id: "thm.case1.sub2.g", param: "dz" }),
    ("thm-noB2-20c", Encoded(&["thm.case1.sub2.g"])),
    ("thm-noB2-100", Note(SUM_NOTE)),
    ("thm-noB2-100c", Encoded(&["thm.case3.sub1.g"])),
    ("thm-noB2-100d", Note("constant; row of the golden suite")),
    ("thm-noB2-200", Note(SUM_NOTE)),
    ("thm-noB2-200c", Encoded(&["thm.case3.sub2.g"])),
    ("thm-noB2-200ah", Note("general form with free d(z); thm.B11.g(n13) is its specialization")),
    ("thm-noB2-210a", Encoded(&["thm.B11.g(n13)"])),
    ("thm-noB2-210b", Encoded(&["thm.B121.g(n13)"])),
    ("thm-noB2-200a", Encoded(&["thm.B122.g.printed"])),
    ("thm-noB2-200ab", Encoded(&["thm.B122.g", "thm.B122.g.printed"])),
    ("thm-noB2-300a", Encoded(&["thm.B2.g(dw1)"])),
    ("thm-noB2-400a", Encoded(&["thm.B2.g(dw1)"])),
];
