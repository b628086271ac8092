use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{bit_size, ceil_log2, format_rational, round_dyadic, to_decimal_string, BigRational};
use crate::error::{Error, Result};

/// A closed rational interval [lo, hi] certified to contain some real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain("enclosure with lo > hi"));
        }
        Ok(Enclosure { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Enclosure::point(BigRational::zero())
    }

    /// [c − r, c + r]; r is taken in absolute value.
    pub fn around(center: &BigRational, radius: &BigRational) -> Self {
        let r = radius.abs();
        Enclosure { lo: center - &r, hi: center + &r }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Largest absolute value of a point in the interval.
    pub fn magnitude(&self) -> BigRational {
        std::cmp::max(self.lo.abs(), self.hi.abs())
    }

    /// ⌈−log₂ width⌉, or `None` for an exact point.
    pub fn width_bits(&self) -> Option<i64> {
        let w = self.width();
        if w.is_zero() {
            return None;
        }
        // ⌈−log₂ w⌉ = −⌊log₂ w⌋, and ⌊log₂ w⌋ = ⌈log₂ w⌉ − 1 unless w is a power of two.
        let c = ceil_log2(&w);
        Some(if w == super::pow2(c) { -c } else { 1 - c })
    }

    /// Whether the width is at most 2^(−bits).
    pub fn width_at_most_bits(&self, bits: i64) -> bool {
        let w = self.width();
        w.is_zero() || super::le_pow2(&w, -bits)
    }

    pub fn scale(&self, k: &BigRational) -> Enclosure {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if a <= b {
            Enclosure { lo: a, hi: b }
        } else {
            Enclosure { lo: b, hi: a }
        }
    }

    pub fn shift(&self, k: &BigRational) -> Enclosure {
        Enclosure { lo: &self.lo + k, hi: &self.hi + k }
    }

    /// Quotient by an interval that excludes zero.
    pub fn checked_div(&self, rhs: &Enclosure) -> Result<Enclosure> {
        if rhs.contains_zero() {
            return Err(Error::domain("interval division by an enclosure containing 0"));
        }
        let inv = Enclosure {
            lo: rhs.hi.recip(),
            hi: rhs.lo.recip(),
        };
        Ok(self * &inv)
    }

    /// x^e over every x in the interval.
    pub fn powi(&self, e: u32) -> Enclosure {
        if e == 0 {
            return Enclosure::point(BigRational::from_integer(1.into()));
        }
        let p = |x: &BigRational| num_traits::Pow::pow(x, e);
        if e % 2 == 1 || self.lo.is_positive() || self.lo.is_zero() {
            return Enclosure { lo: p(&self.lo), hi: p(&self.hi) };
        }
        if !self.hi.is_positive() {
            return Enclosure { lo: p(&self.hi), hi: p(&self.lo) };
        }
        Enclosure { lo: BigRational::zero(), hi: p(&self.magnitude()) }
    }

    /// Snaps both endpoints outward to the 2^(−bits) grid.
    pub fn round_outward(&self, bits: u64) -> Enclosure {
        Enclosure {
            lo: round_dyadic(&self.lo, bits, false),
            hi: round_dyadic(&self.hi, bits, true),
        }
    }

    /// Rounds outward only when an endpoint's representation exceeds `2 * bits`
    /// bits; small exact values pass through unchanged.
    pub fn tighten(&self, bits: u64) -> Enclosure {
        if bit_size(&self.lo) > 2 * bits || bit_size(&self.hi) > 2 * bits {
            self.round_outward(bits)
        } else {
            self.clone()
        }
    }

    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (to_decimal_string(&self.lo, digits), to_decimal_string(&self.hi, digits))
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl From<BigRational> for Enclosure {
    fn from(x: BigRational) -> Self {
        Enclosure::point(x)
    }
}

impl<'a> Add<&'a Enclosure> for &'a Enclosure {
    type Output = Enclosure;

    fn add(self, rhs: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl<'a> Sub<&'a Enclosure> for &'a Enclosure {
    type Output = Enclosure;

    fn sub(self, rhs: &Enclosure) -> Enclosure {
        Enclosure { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl<'a> Mul<&'a Enclosure> for &'a Enclosure {
    type Output = Enclosure;

    fn mul(self, rhs: &Enclosure) -> Enclosure {
        if self.is_exact() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_exact() {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Enclosure { lo, hi }
    }
}

impl Neg for &Enclosure {
    type Output = Enclosure;

    fn neg(self) -> Enclosure {
        Enclosure { lo: -&self.hi, hi: -&self.lo }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Enclosure> for Enclosure {
            type Output = Enclosure;
            fn $m(self, rhs: Enclosure) -> Enclosure {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Enclosure {
    type Output = Enclosure;

    fn neg(self) -> Enclosure {
        -&self
    }
}
