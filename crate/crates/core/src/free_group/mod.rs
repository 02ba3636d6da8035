//! Free group on `x_1, x_2, ...` with the bi-invariant Magnus order.

pub mod magnus;
pub mod order;
mod word;

pub use magnus::{MagnusExpansion, Monomial};
pub use order::{compare, min_of_support, Comparison, MagnusOrder};
pub use word::{Generator, ReducedWord, Syllable};
