//! The `S3` quotient of the free group, the subgroups `H` and `N`, and
//! normal-closure certificates.

mod closure;
mod maximal;
mod perm;

pub use closure::{closure_eval, ClosureExpression, ClosureNode};
pub use maximal::{in_h_image, CosetLabel, GroupHomToS3};
pub use perm::{core_in_s3, is_subgroup, subgroup_generated_by, PermSet, Permutation};
