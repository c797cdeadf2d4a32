//! Exact Kazhdan-Lusztig theory for the symmetric groups.
//!
//! The core types are generic over an integer coefficient type implementing [`Coeff`];
//! the aliases below fix the common choices.

pub mod error;
pub mod group;
pub mod hecke;
pub mod cache;
pub mod cells;
pub mod perm;
pub mod scalar;
pub mod shapes;
pub mod specht;
pub mod tableau;
pub mod twist;
pub mod verify;

pub use error::{Error, Result};
pub use hecke::{Basis, HeckeElement, KlTable};
pub use perm::{Permutation, Side, Word};
pub use scalar::{Coeff, LaurentFraction, LaurentPoly, MultiPoly};
pub use tableau::{rsk, rsk_inverse, Partition, Tableau};

use num_bigint::BigInt;

/// Laurent polynomial with machine integer coefficients (overflow panics).
pub type Laurent = LaurentPoly<i64>;
/// Laurent polynomial with arbitrary precision coefficients.
pub type BigLaurent = LaurentPoly<BigInt>;
/// Element of `Q(v)`.
pub type RationalScalar = LaurentFraction<BigInt>;
pub type Hecke = HeckeElement<i64>;
pub type BigHecke = HeckeElement<BigInt>;
pub type Poly = MultiPoly<i64>;
