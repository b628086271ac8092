use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Field;
use crate::exactnum::{format_rational, BigRational};

/// re + im·i with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// re² + im².
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::real(re)
    }
}

impl Add for GaussianRational {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        GaussianRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        GaussianRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussianRational {
    type Output = Self;

    /// Panics on division by zero, like `BigRational`.
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        let t = self * rhs.conj();
        GaussianRational { re: t.re / &n, im: t.im / n }
    }
}

impl Neg for GaussianRational {
    type Output = Self;

    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::real(BigRational::one())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let im = match (self.im.abs() == BigRational::one(), self.im.is_negative()) {
            (true, false) => "i".to_string(),
            (true, true) => "-i".to_string(),
            (false, _) => format!("{}i", format_rational(&self.im)),
        };
        if self.re.is_zero() {
            write!(f, "{im}")
        } else if self.im.is_negative() {
            write!(f, "{} - {}", format_rational(&self.re), im.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", format_rational(&self.re), im)
        }
    }
}

impl Field for GaussianRational {
    fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }

    fn render_abs(&self) -> String {
        if self.im.is_zero() {
            format_rational(&self.re.abs())
        } else if self.re.is_zero() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }

    fn to_exact_string(&self) -> String {
        format!("{}+{}i", format_rational(&self.re), format_rational(&self.im))
    }
}
