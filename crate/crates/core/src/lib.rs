//! Mal'cev-Neumann series rings over ordered free groups and the almost
//! subnormal subgroups they contain.
//!
//! The crate is organized bottom-up:
//!
//! * [`free_group`]: reduced words and the bi-invariant Magnus order.
//! * [`field`]: the coefficient field `Q(s)` and the shift twist `Φ`.
//! * [`series`]: twisted finite-support series, `d = min ∘ supp`, truncated inverses.
//! * [`subgroups`]: the `S3` quotient, `H`, `N = d^-1(H)`, closure certificates.
//! * [`identities`]: word expressions, the `w_n` / `φ_n` recursions and their checks.
//! * [`suites`]: named verification suites, selectable at runtime.

pub mod error;
pub mod field;
pub mod free_group;
pub mod identities;
pub mod parse;
pub mod sampling;
pub mod series;
pub mod subgroups;
pub mod suites;

pub use error::{Error, Result};
