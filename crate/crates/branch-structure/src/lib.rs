//! Structural vocabulary of minimal-ABC trees: pendant and internal paths,
//! B_k-branches, terminal vertices and T_k-branches, a checker for the known
//! structural theorems, and the tree surgeries used in their proofs.

mod profile;
pub mod samples;
mod theorems;
mod transform;

pub use profile::{
    analyze, bk_children, bk_root, is_p2_start, pendant_length, tree_root, BranchProfile, BranchRoot,
    InternalPath, PendantPath,
};
pub use theorems::{check_profile, check_theorems, TheoremReport, Verdict, CHECK_NAMES};
pub use transform::{apply_transformation, TransformError, TransformKind, TransformationSpec, Transformed};
