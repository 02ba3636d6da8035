//! Finite-support elements of the Mal'cev-Neumann ring `K((G, Φ))`, the
//! min-support map `d`, and truncated inversion.

mod approx;
#[allow(clippy::module_inception)]
mod series;

pub use approx::{truncated_inverse, ApproxJson, ApproxSeries, InversionSplit};
pub use series::{Series, TermJson};
