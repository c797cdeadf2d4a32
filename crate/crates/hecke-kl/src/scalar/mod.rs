//! Exact coefficient arithmetic.

pub mod laurent;
pub mod linalg;
pub mod multipoly;
pub mod rational;

pub use laurent::{Coeff, LaurentPoly};
pub use multipoly::MultiPoly;
pub use rational::{laurent_div_exact, laurent_lcm, LaurentFraction};
