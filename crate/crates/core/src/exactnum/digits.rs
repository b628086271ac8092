use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{BigRational, Enclosure};
use crate::error::{Error, Result};

/// Outcome of reading binary digits off an enclosure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum BinaryDigits {
    /// Digits after the binary point, most significant first.
    Digits(String),
    /// The endpoints first disagree at this 1-based digit position.
    Indeterminate(usize),
}

impl BinaryDigits {
    pub fn digits(&self) -> Option<&str> {
        match self {
            BinaryDigits::Digits(s) => Some(s),
            BinaryDigits::Indeterminate(_) => None,
        }
    }
}

fn floor_scaled(x: &BigRational, n: usize) -> BigInt {
    (x.numer() << n).div_floor(x.denom())
}

/// The first `n_digits` binary digits of every real in `x ⊂ [0, 1)`.
///
/// Digits are read as ⌊x·2^n⌋ at both endpoints; since that map is monotone
/// they are shared by the whole interval exactly when the endpoints agree.
pub fn to_binary_digits(x: &Enclosure, n_digits: usize) -> Result<BinaryDigits> {
    if x.lo() < &BigRational::zero() || x.hi() >= &BigRational::one() {
        return Err(Error::domain(format!("enclosure {x} is not inside [0, 1)")));
    }
    if n_digits == 0 {
        return Err(Error::domain("at least one digit must be requested"));
    }
    let lo = floor_scaled(x.lo(), n_digits);
    let hi = floor_scaled(x.hi(), n_digits);
    if lo == hi {
        let s = lo.to_str_radix(2);
        return Ok(BinaryDigits::Digits(format!("{s:0>n_digits$}")));
    }
    // Prefixes agree up to some k < n; find the first disagreeing position.
    let k = (1..=n_digits)
        .find(|&k| floor_scaled(x.lo(), k) != floor_scaled(x.hi(), k))
        .expect("full-length prefixes differ");
    Ok(BinaryDigits::Indeterminate(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{pow2, rat};

    #[test]
    fn exact_five_eighths() {
        let x = Enclosure::point(rat(5, 8));
        assert_eq!(to_binary_digits(&x, 3).unwrap(), BinaryDigits::Digits("101".into()));
        assert_eq!(to_binary_digits(&x, 5).unwrap(), BinaryDigits::Digits("10100".into()));
    }

    #[test]
    fn dyadic_straddle_is_indeterminate() {
        let r = pow2(-10);
        let x = Enclosure::new(rat(5, 8) - &r, rat(5, 8) + &r).unwrap();
        assert_eq!(to_binary_digits(&x, 3).unwrap(), BinaryDigits::Indeterminate(3));
        assert_eq!(to_binary_digits(&x, 2).unwrap(), BinaryDigits::Digits("10".into()));
    }

    #[test]
    fn leading_zeros_are_kept() {
        let x = Enclosure::point(rat(1, 16));
        assert_eq!(to_binary_digits(&x, 6).unwrap().digits(), Some("000100"));
    }

    #[test]
    fn outside_unit_interval_is_rejected() {
        assert!(to_binary_digits(&Enclosure::point(rat(1, 1)), 3).is_err());
        assert!(to_binary_digits(&Enclosure::point(rat(-1, 8)), 3).is_err());
        assert!(to_binary_digits(&Enclosure::point(rat(1, 8)), 0).is_err());
    }
}
