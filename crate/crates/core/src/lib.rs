//! Exact arithmetic for completely multiplicative ±1 sequences.
//!
//! The crate covers the Liouville function λ, the Gaussian Liouville function
//! g (λ restricted to primes ≡ 3 mod 4), the function t (primes ≡ 2 mod 3), and
//! character-like functions attached to an odd prime. For each sequence with a
//! Mahler-type functional equation it evaluates the generating function by
//! independent routes, returns certified rational enclosures, extracts binary
//! digits of the associated constants, and checks the algebraic hypotheses
//! (degree bound, resultant nonvanishing) used in transcendence arguments.
//!
//! Modules:
//!
//! - [`seqcore`]: sieve, point evaluation, Jacobi symbol, recurrence checks.
//! - [`exactnum`]: rational helpers, [`Enclosure`], binary digit extraction.
//! - [`polyalg`]: polynomials over ℚ and ℚ(i), Fekete polynomials, resultants in u.
//! - [`genfun`]: direct and closed-form series, functional-equation residuals.
//! - [`constants`]: named constants and their digits.
//! - [`analysis`]: Mahler hypothesis reports, period witnesses, normality statistics.

pub mod analysis;
pub mod constants;
pub mod error;
pub mod exactnum;
pub mod genfun;
pub mod polyalg;
pub mod seqcore;

pub use error::{Error, Result};
pub use exactnum::{BigRational, BinaryDigits, Enclosure};
pub use genfun::{Family, GenFunSpec};
pub use polyalg::{GaussianRational, Poly, PolyInU, RatPoly};
pub use seqcore::{CharacterLike, FactorSieve, ResidueRule, SequenceSpec, Sign, SignSeq};
