//! Named binary constants attached to the sequences: the bit numbers
//! Σ ((1+f_n)/2)·2⁻ⁿ and the series values X(1/2), with certified digits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{pow2, rat, to_binary_digits, BigRational, BinaryDigits, Enclosure};
use crate::genfun::{eval_closed_with, levels_for_precision, GenFunSpec};
use crate::seqcore::{parse_sign, CharacterLike, ResidueRule, SequenceSpec, Sign};

/// Canonical first 21 bits of l, reproduced by the definition.
pub const LIOUVILLE_PREFIX: &str = "100101001100011100001";

/// A second 21-bit string in circulation for l. It disagrees with the
/// definition from bit 8 on and is kept only so the mismatch can be reported.
pub const LIOUVILLE_VARIANT_PREFIX: &str = "100101011101101111100";

/// Upper limit for precision escalation in [`digits`].
pub const MAX_DIGIT_BITS: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Definition {
    /// Σ ((1+f_n)/2)·2⁻ⁿ.
    BitNumber,
    /// X(1/2) for the generating function X of the sequence.
    SeriesValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedConstant {
    sequence: SequenceSpec,
    definition: Definition,
}

impl NamedConstant {
    pub fn new(sequence: SequenceSpec, definition: Definition) -> Result<Self> {
        if definition == Definition::SeriesValue && sequence == SequenceSpec::Liouville {
            return Err(Error::NotAvailable("λ has no closed-form series value".into()));
        }
        Ok(NamedConstant { sequence, definition })
    }

    pub fn liouville_number() -> Self {
        NamedConstant { sequence: SequenceSpec::Liouville, definition: Definition::BitNumber }
    }

    pub fn gamma_bits() -> Self {
        NamedConstant { sequence: SequenceSpec::GaussianLiouville, definition: Definition::BitNumber }
    }

    pub fn g_half() -> Self {
        NamedConstant { sequence: SequenceSpec::GaussianLiouville, definition: Definition::SeriesValue }
    }

    pub fn tau_bits() -> Self {
        NamedConstant { sequence: SequenceSpec::Mod3, definition: Definition::BitNumber }
    }

    pub fn t_half() -> Self {
        NamedConstant { sequence: SequenceSpec::Mod3, definition: Definition::SeriesValue }
    }

    pub fn phi(ch: CharacterLike, definition: Definition) -> Self {
        NamedConstant { sequence: SequenceSpec::CharacterLike(ch), definition }
    }

    /// The constants with fixed names plus φ_p for p ∈ {3, 5, 7}, ε = ±1.
    pub fn catalogue() -> Vec<NamedConstant> {
        let mut out = vec![
            Self::liouville_number(),
            Self::gamma_bits(),
            Self::g_half(),
            Self::tau_bits(),
            Self::t_half(),
        ];
        for p in [3, 5, 7] {
            for eps in [Sign::Plus, Sign::Minus] {
                let ch = CharacterLike::new(p, eps, ResidueRule::Legendre).expect("odd prime");
                out.push(Self::phi(ch, Definition::SeriesValue));
                out.push(Self::phi(ch, Definition::BitNumber));
            }
        }
        out
    }

    pub fn sequence(&self) -> &SequenceSpec {
        &self.sequence
    }

    pub fn definition(&self) -> Definition {
        self.definition
    }

    /// The same sequence under the other definition.
    pub fn partner(&self) -> Result<NamedConstant> {
        let other = match self.definition {
            Definition::BitNumber => Definition::SeriesValue,
            Definition::SeriesValue => Definition::BitNumber,
        };
        NamedConstant::new(self.sequence, other)
    }

    /// Type tag: LiouvilleNumber_l, GaussianBits_gamma, ….
    pub fn kind(&self) -> &'static str {
        use Definition::*;
        match (&self.sequence, self.definition) {
            (SequenceSpec::Liouville, _) => "LiouvilleNumber_l",
            (SequenceSpec::GaussianLiouville, BitNumber) => "GaussianBits_gamma",
            (SequenceSpec::GaussianLiouville, SeriesValue) => "GaussianSeries_G_half",
            (SequenceSpec::Mod3, BitNumber) => "Mod3Bits_tau",
            (SequenceSpec::Mod3, SeriesValue) => "Mod3Series_T_half",
            (SequenceSpec::CharacterLike(_), BitNumber) => "CharacterLikeBits_phi_p",
            (SequenceSpec::CharacterLike(_), SeriesValue) => "CharacterLike_phi_p",
        }
    }

    /// Short name accepted by [`FromStr`].
    pub fn name(&self) -> String {
        let def = match self.definition {
            Definition::BitNumber => "bits",
            Definition::SeriesValue => "series",
        };
        match &self.sequence {
            SequenceSpec::Liouville => "l".into(),
            SequenceSpec::GaussianLiouville => format!("gamma-{def}"),
            SequenceSpec::Mod3 => format!("tau-{def}"),
            SequenceSpec::CharacterLike(ch) => {
                let eps = if ch.epsilon() == Sign::Plus { "plus" } else { "minus" };
                let rule = if ch.rule() == ResidueRule::Trivial { "-trivial" } else { "" };
                format!("phi-{def}-{}-{eps}{rule}", ch.p())
            }
        }
    }
}

impl fmt::Display for NamedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for NamedConstant {
    type Err = Error;

    /// Accepts `l`, `gamma-bits`, `gamma-series` (also `G-half`), `tau-bits`,
    /// `tau-series` (also `T-half`) and `phi-{bits|series}-P-{plus|minus}[-trivial]`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l" | "liouville" => return Ok(Self::liouville_number()),
            "gamma-bits" | "gamma" => return Ok(Self::gamma_bits()),
            "gamma-series" | "G-half" => return Ok(Self::g_half()),
            "tau-bits" | "tau" => return Ok(Self::tau_bits()),
            "tau-series" | "T-half" => return Ok(Self::t_half()),
            _ => {}
        }
        let bad = || Error::domain(format!("unknown constant '{s}'"));
        let parts: Vec<&str> = s.split('-').collect();
        if parts.len() < 4 || parts.len() > 5 || parts[0] != "phi" {
            return Err(bad());
        }
        let definition = match parts[1] {
            "bits" => Definition::BitNumber,
            "series" => Definition::SeriesValue,
            _ => return Err(bad()),
        };
        let p: u64 = parts[2].parse().map_err(|_| bad())?;
        let eps = match parts[3] {
            "plus" => Sign::Plus,
            "minus" => Sign::Minus,
            other => parse_sign(other)?,
        };
        let rule = match parts.get(4) {
            None => ResidueRule::Legendre,
            Some(&"trivial") => ResidueRule::Trivial,
            Some(_) => return Err(bad()),
        };
        Ok(Self::phi(CharacterLike::new(p, eps, rule)?, definition))
    }
}

fn check_precision(bits: u64) -> Result<()> {
    if bits < 8 {
        return Err(Error::domain("precision must be at least 8 bits"));
    }
    Ok(())
}

/// The first n bits (1+f_k)/2 packed into an integer, most significant first.
fn bit_integer(sequence: &SequenceSpec, n: u64) -> Result<BigInt> {
    let s = sequence.values(n)?.bit_string();
    Ok(BigInt::parse_bytes(s.as_bytes(), 2).expect("binary string"))
}

/// Enclosure of the constant with width at most 2^(−precision_bits).
pub fn value(c: &NamedConstant, precision_bits: u64) -> Result<Enclosure> {
    check_precision(precision_bits)?;
    match c.definition {
        Definition::BitNumber => {
            let n = precision_bits;
            let s = BigRational::new(bit_integer(&c.sequence, n)?, BigInt::one() << n);
            let hi = &s + pow2(-(n as i64));
            Enclosure::new(s, hi)
        }
        Definition::SeriesValue => {
            let spec = GenFunSpec::new(c.sequence)?;
            let half = rat(1, 2);
            let mut target = precision_bits + 2;
            loop {
                let k = levels_for_precision(&spec, &half, target)?;
                let e = eval_closed_with(&spec, &half, k, target + 64)?;
                if e.width_at_most_bits(precision_bits as i64) {
                    return Ok(e);
                }
                target += 16;
            }
        }
    }
}

/// First `n_digits` binary digits of a bit-number constant, certified twice:
/// read off the sequence, and extracted from [`value`] with escalating precision.
pub fn digits(c: &NamedConstant, n_digits: usize) -> Result<String> {
    digits_with_cap(c, n_digits, MAX_DIGIT_BITS)
}

/// [`digits`] with an explicit escalation cap (raised to 2·n_digits if lower).
pub fn digits_with_cap(c: &NamedConstant, n_digits: usize, max_bits: u64) -> Result<String> {
    if n_digits == 0 {
        return Err(Error::domain("at least one digit is required"));
    }
    if c.definition != Definition::BitNumber {
        return Err(Error::domain("digits are defined for bit-number constants"));
    }
    let n = n_digits as u64;
    let direct = c.sequence.values(n)?.bit_string();
    let cap = max_bits.max(2 * n);
    let mut prec = n + 16;
    loop {
        let v = value(c, prec)?;
        if v.hi() < &BigRational::one() {
            if let BinaryDigits::Digits(s) = to_binary_digits(&v, n_digits)? {
                if s != direct {
                    return Err(Error::Consistency(format!(
                        "digits of {c} disagree: sequence gives {direct}, value gives {s}"
                    )));
                }
                return Ok(s);
            }
        }
        if prec >= cap {
            return Err(Error::Unresolved { what: format!("{n_digits} digits of {c}"), max_bits: prec });
        }
        prec = (prec * 2).min(cap);
    }
}

/// Enclosure of BitNumber − (1 + SeriesValue)/2 for the constant's sequence.
pub fn affine_crosscheck(c: &NamedConstant, precision_bits: u64) -> Result<Enclosure> {
    check_precision(precision_bits)?;
    let (bits, series) = match c.definition {
        Definition::BitNumber => (*c, c.partner()?),
        Definition::SeriesValue => (c.partner()?, *c),
    };
    let b = value(&bits, precision_bits + 2)?;
    let s = value(&series, precision_bits + 2)?;
    let affine = s.shift(&BigRational::one()).scale(&rat(1, 2));
    Ok(&b - &affine)
}

/// Position (1-based) of the first bit where the variant l string departs
/// from the canonical one, with both strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrefixMismatch {
    pub canonical: &'static str,
    pub variant: &'static str,
    pub first_mismatch: Option<usize>,
}

pub fn liouville_prefix_mismatch() -> PrefixMismatch {
    let first_mismatch = LIOUVILLE_PREFIX
        .bytes()
        .zip(LIOUVILLE_VARIANT_PREFIX.bytes())
        .position(|(a, b)| a != b)
        .map(|i| i + 1);
    PrefixMismatch { canonical: LIOUVILLE_PREFIX, variant: LIOUVILLE_VARIANT_PREFIX, first_mismatch }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::to_decimal_string;

    #[test]
    fn printed_digit_strings() {
        assert_eq!(digits(&NamedConstant::gamma_bits(), 21).unwrap(), "110110011100100111011");
        assert_eq!(digits(&NamedConstant::tau_bits(), 21).unwrap(), "101100101101100100101");
        assert_eq!(digits(&NamedConstant::liouville_number(), 21).unwrap(), LIOUVILLE_PREFIX);
    }

    #[test]
    fn variant_l_string_is_flagged() {
        let m = liouville_prefix_mismatch();
        assert_eq!(m.first_mismatch, Some(8));
        assert_ne!(digits(&NamedConstant::liouville_number(), 21).unwrap(), LIOUVILLE_VARIANT_PREFIX);
    }

    #[test]
    fn series_values() {
        let g = value(&NamedConstant::g_half(), 64).unwrap();
        assert!(g.width_at_most_bits(64));
        assert_eq!(to_decimal_string(g.lo(), 10), "0.7014723764");
        let gb = value(&NamedConstant::gamma_bits(), 64).unwrap();
        assert_eq!(to_decimal_string(gb.lo(), 4), "0.8507");
        let ch = CharacterLike::new(3, Sign::Plus, ResidueRule::Legendre).unwrap();
        let phi3 = value(&NamedConstant::phi(ch, Definition::SeriesValue), 64).unwrap();
        assert!(phi3.intersects(&value(&NamedConstant::t_half(), 64).unwrap()));
    }

    #[test]
    fn crosschecks_contain_zero() {
        for c in NamedConstant::catalogue() {
            match affine_crosscheck(&c, 80) {
                Ok(e) => assert!(e.contains_zero() && e.width_at_most_bits(79), "{c}"),
                Err(Error::NotAvailable(_)) => assert_eq!(c.sequence, SequenceSpec::Liouville),
                Err(e) => panic!("{c}: {e}"),
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for c in NamedConstant::catalogue() {
            assert_eq!(c.name().parse::<NamedConstant>().unwrap(), c);
        }
        let t: NamedConstant = "phi-bits-11-minus-trivial".parse().unwrap();
        assert_eq!(t.name(), "phi-bits-11-minus-trivial");
        assert!("phi-bits-9-plus".parse::<NamedConstant>().is_err());
        assert!("delta".parse::<NamedConstant>().is_err());
        assert_eq!("G-half".parse::<NamedConstant>().unwrap(), NamedConstant::g_half());
    }

    #[test]
    fn liouville_series_unavailable() {
        assert!(matches!(
            NamedConstant::new(SequenceSpec::Liouville, Definition::SeriesValue),
            Err(Error::NotAvailable(_))
        ));
        assert!(matches!(affine_crosscheck(&NamedConstant::liouville_number(), 80), Err(Error::NotAvailable(_))));
    }

    #[test]
    fn series_constant_has_no_digits() {
        assert!(digits(&NamedConstant::g_half(), 5).is_err());
        assert!(digits(&NamedConstant::gamma_bits(), 0).is_err());
        assert!(value(&NamedConstant::gamma_bits(), 7).is_err());
    }

    #[test]
    fn all_ones_sequence_is_unresolved() {
        let ch = CharacterLike::new(3, Sign::Plus, ResidueRule::Trivial).unwrap();
        let c = NamedConstant::phi(ch, Definition::BitNumber);
        assert!(matches!(digits_with_cap(&c, 4, 4096), Err(Error::Unresolved { max_bits: 4096, .. })));
    }

    #[test]
    fn long_digit_runs() {
        for c in [NamedConstant::liouville_number(), NamedConstant::gamma_bits(), NamedConstant::tau_bits()] {
            let d = digits(&c, 2000).unwrap();
            assert_eq!(d, c.sequence().values(2000).unwrap().bit_string());
        }
    }
}
