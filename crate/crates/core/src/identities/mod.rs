//! Word expressions with variables, their evaluation in several groups, and
//! the recursions and normal-form checks built on them.

mod chain;
mod check;
pub mod eval;
mod expr;
mod normal_form;
mod pcword;
mod recursion;

pub use chain::{h_chain_generators, chain_rewrites, RewriteCheck};
pub use check::{check_identity, Verdict, CONJUGATE_IDENTITY, SIXTH_POWER_COMMUTATOR};
pub use eval::{eval_expr, Env, EvalTarget, FreeGroupTarget, PcTarget, S3Target, SeriesTarget};
pub use expr::{generator_index, WordExpr};
pub use normal_form::{
    mutated_phi_1, verify_alpha_containment, verify_lemma5_numeric, verify_lemma5_numeric_with_phi,
    verify_lemma5_symbolic, verify_lemma5_symbolic_with_phi, NumericReport, ResidualSide, SymbolicReport,
};
pub use pcword::{PartiallyCommutativeWord, PcLetter};
pub use recursion::{
    build_u_v, build_w, phi_n, phi_n_without_trailing_g, Level, SeriesShapeDescriptor, MAX_INDEX,
};
