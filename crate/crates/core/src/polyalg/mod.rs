//! Exact univariate polynomials over ℚ and ℚ(i), and resultants of polynomials
//! in u whose coefficients lie in ℚ[z].

mod fekete;
mod field;
mod gaussian;
mod poly;
mod resultant;

pub use fekete::{fekete, fekete_for};
pub use field::Field;
pub use gaussian::GaussianRational;
pub use poly::{divides, gcd_bb, Poly};
pub use resultant::{resultant_in_u, PolyInU};

use crate::exactnum::BigRational;

pub type RatPoly = Poly<BigRational>;
pub type GaussPoly = Poly<GaussianRational>;
