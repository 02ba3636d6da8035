//! The coefficient field `K = Q(s)` and the shift twist `Φ: G -> Aut(K)`.

mod element;
mod poly;
mod twist;

pub use element::FieldElement;
pub use poly::Poly;
pub use twist::{FieldAutomorphism, TwistMap};
