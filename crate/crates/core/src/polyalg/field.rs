use std::fmt::Debug;
use std::ops::{Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exactnum::{format_rational, BigRational};

/// Exact coefficient field for [`Poly`](super::Poly).
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True when the value is a negative real number (used for `a - b z` rendering).
    fn is_negative_real(&self) -> bool;

    /// Rendering of |self| for negative reals, of self otherwise.
    fn render_abs(&self) -> String;

    /// Exact machine-readable rendering.
    fn to_exact_string(&self) -> String;
}

impl Field for BigRational {
    fn is_negative_real(&self) -> bool {
        self.is_negative()
    }

    fn render_abs(&self) -> String {
        format_rational(&self.abs())
    }

    fn to_exact_string(&self) -> String {
        format_rational(self)
    }
}
