//! Exact rationals and certified enclosures.
//!
//! Rational arithmetic is `num_rational::BigRational` (always reduced, positive
//! denominator). This module adds the pieces the series code needs on top:
//! checked division and powers, `p/q` parsing, dyadic comparisons, decimal
//! rendering, the [`Enclosure`] interval type and binary digit extraction.

mod digits;
mod enclosure;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use digits::{to_binary_digits, BinaryDigits};
pub use enclosure::Enclosure;
pub use num_rational::BigRational;

/// n/d as a reduced rational. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// 2^e for any integer e.
pub fn pow2(e: i64) -> BigRational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::domain("division by zero"));
    }
    Ok(a / b)
}

/// a^e; negative exponents need a ≠ 0.
pub fn checked_pow(a: &BigRational, e: i32) -> Result<BigRational> {
    if e < 0 && a.is_zero() {
        return Err(Error::domain("zero to a negative power"));
    }
    Ok(num_traits::Pow::pow(a, e))
}

/// Total size of the reduced representation in bits.
pub fn bit_size(x: &BigRational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Parses `p/q`, `p`, or a terminating decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::domain(format!("malformed rational '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::domain(format!("zero denominator in '{s}'")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip_abs: BigInt = match ip.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let frac: BigInt = fp.parse().map_err(|_| bad())?;
        let mag = BigRational::new(ip_abs * &scale + frac, scale);
        return Ok(if neg { -mag } else { mag });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Exact `p/q` (or `p` when q = 1).
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal expansion truncated toward zero after `digits` fractional places.
pub fn to_decimal_string(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (a.numer() * &scale).div_floor(a.denom());
    let (ip, fp) = scaled.div_rem(&scale);
    let mut out = String::new();
    if neg && !scaled.is_zero() {
        out.push('-');
    }
    out.push_str(&ip.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", fp.to_string(), width = digits));
    }
    out
}

/// Serializes a rational as the exact string "p/q" (or "p" for integers).
pub fn serialize_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// Whether 0 < x ≤ 2^e (x must be positive to return true).
pub fn le_pow2(x: &BigRational, e: i64) -> bool {
    if !x.is_positive() {
        return false;
    }
    let (n, d) = (x.numer(), x.denom());
    if e >= 0 {
        n <= &(d << e as u64)
    } else {
        (n << e.unsigned_abs()) <= *d
    }
}

/// ⌈log₂ x⌉ for x > 0.
pub fn ceil_log2(x: &BigRational) -> i64 {
    debug_assert!(x.is_positive());
    let guess = x.numer().bits() as i64 - x.denom().bits() as i64;
    (guess - 1..=guess + 1)
        .find(|&c| le_pow2(x, c))
        .expect("bit-length estimate is within one")
}

/// Rounds x down (`up = false`) or up to a multiple of 2^(−bits).
pub fn round_dyadic(x: &BigRational, bits: u64, up: bool) -> BigRational {
    let scaled = x.numer() << bits;
    let (q, r) = scaled.div_mod_floor(x.denom());
    let q = if up && !r.is_zero() { q + 1 } else { q };
    BigRational::new(q, BigInt::one() << bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_operations_are_exact() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(checked_pow(&rat(1, 2), 8).unwrap(), rat(1, 256));
        assert_eq!(rat(2, 5) * rat(5, 2), int(1));
        assert_eq!(checked_pow(&rat(2, 3), -2).unwrap(), rat(9, 4));
        assert!(rat(1, 3) < rat(1, 2));
    }

    #[test]
    fn division_by_zero_is_domain_error() {
        assert!(matches!(checked_div(&int(1), &int(0)), Err(Error::Domain(_))));
        assert!(checked_pow(&int(0), -1).is_err());
        assert_eq!(checked_pow(&int(0), 0).unwrap(), int(1));
    }

    #[test]
    fn results_are_reduced() {
        let x = rat(6, 8) * rat(4, 9);
        assert_eq!((x.numer().clone(), x.denom().clone()), (BigInt::from(1), BigInt::from(3)));
        let y = rat(3, -6);
        assert_eq!(y.denom(), &BigInt::from(2));
        assert_eq!(y.numer(), &BigInt::from(-1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -2/4 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        for bad in ["", "1/0", "a/b", "1.", "1.2.3", "0.x"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(-3, 7)), "-3/7");
        assert_eq!(format_rational(&int(4)), "4");
        assert_eq!(to_decimal_string(&rat(2, 3), 5), "0.66666");
        assert_eq!(to_decimal_string(&rat(-1, 8), 4), "-0.1250");
        assert_eq!(to_decimal_string(&rat(-1, 1000), 2), "0.00");
        assert_eq!(to_decimal_string(&rat(7, 2), 0), "3");
    }

    #[test]
    fn dyadic_helpers() {
        assert!(le_pow2(&rat(1, 4), -2));
        assert!(!le_pow2(&rat(1, 3), -2));
        assert_eq!(ceil_log2(&rat(1, 4)), -2);
        assert_eq!(ceil_log2(&rat(1, 3)), -1);
        assert_eq!(ceil_log2(&int(5)), 3);
        assert_eq!(ceil_log2(&int(1)), 0);
        assert_eq!(round_dyadic(&rat(1, 3), 2, false), rat(1, 4));
        assert_eq!(round_dyadic(&rat(1, 3), 2, true), rat(1, 2));
        assert_eq!(round_dyadic(&rat(-1, 3), 2, false), rat(-1, 2));
        assert_eq!(round_dyadic(&rat(3, 4), 2, true), rat(3, 4));
        assert_eq!(pow2(-3), rat(1, 8));
        assert_eq!(pow2(3), int(8));
    }
}
