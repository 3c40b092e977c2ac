//! Matroids with coefficients in tracts, with exact arithmetic.
//!
//! Everything is generic over [`tract::Tract`]; the aliases below fix the
//! integer type used by the tropical hyperfield and the rationals.
//!
//! ```
//! use tract_matroid::{matroid::Matroid, KrasnerGp, Krasner};
//! let phi = KrasnerGp::constant_on_bases(Krasner, &Matroid::uniform(2, 3)).unwrap();
//! assert_eq!(phi.dual().rank(), 1);
//! ```

pub mod error;
pub mod flats;
pub mod gp;
pub mod hyperarr;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod pointline;
pub mod random;
pub mod rep;
pub mod spaces;
pub mod subset;
pub mod tract;

pub use error::{Error, Result};
pub use tract::{Krasner, PrimeField};

use num_bigint::BigInt;

/// Nonnegative rationals under multiplication, with arbitrary precision.
pub type TropicalHyperfield = tract::Tropical<BigInt>;
/// The field of rationals, with arbitrary precision.
pub type RationalField = tract::Rationals<BigInt>;
/// Tropical elements.
pub type TropicalValue = num_rational::Ratio<BigInt>;

pub type KrasnerGp = gp::GpFunction<Krasner>;
pub type TropicalGp = gp::GpFunction<TropicalHyperfield>;
pub type PrimeFieldGp = gp::GpFunction<PrimeField>;
pub type RationalGp = gp::GpFunction<RationalField>;
