//! Completely multiplicative ±1 sequences.
//!
//! A sequence is fixed by its values on primes; everything else follows from
//! f(mn) = f(m)f(n). Point queries factor by trial division, bulk queries go
//! through the smallest-prime-factor table in [`FactorSieve`]. All indices are
//! 1-based.

mod jacobi;
mod recurrences;
mod sieve;

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use jacobi::jacobi;
pub use recurrences::{check_recurrences, check_recurrences_in, RecurrenceReport, Rule, Violation};
pub use sieve::FactorSieve;

/// A value in {−1, +1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Sign {
    Minus = -1,
    Plus = 1,
}

impl Sign {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::domain(format!("{other} is not a sign (expected ±1)"))),
        }
    }

    /// The binary digit (1 + f)/2.
    pub fn bit(self) -> u8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => 0,
        }
    }

    pub fn pow(self, e: u64) -> Sign {
        if self == Sign::Minus && e % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.value())
    }
}

/// How a character-like function acts on residues coprime to p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueRule {
    /// f_i = (i/p), the Legendre symbol.
    Legendre,
    /// f_i = 1 for every unit residue.
    Trivial,
}

/// A completely multiplicative f with f(p) = ε and f(kp + i) = f(i).
///
/// Only the Legendre symbol and the trivial character give completely
/// multiplicative real-valued residue assignments, so those are the only rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharacterLike {
    p: u64,
    epsilon: Sign,
    rule: ResidueRule,
}

impl CharacterLike {
    pub fn new(p: u64, epsilon: Sign, rule: ResidueRule) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::domain(format!("{p} is not an odd prime")));
        }
        if p > u64::from(u32::MAX) {
            return Err(Error::domain(format!("modulus {p} exceeds 32 bits")));
        }
        Ok(CharacterLike { p, epsilon, rule })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn rule(&self) -> ResidueRule {
        self.rule
    }

    /// f_i for a residue i with p ∤ i.
    pub fn residue_value(&self, i: u64) -> Sign {
        debug_assert!(i % self.p != 0);
        match self.rule {
            ResidueRule::Trivial => Sign::Plus,
            ResidueRule::Legendre => {
                let r = (i % self.p) as i64;
                match jacobi(r, self.p).expect("p is odd") {
                    1 => Sign::Plus,
                    -1 => Sign::Minus,
                    _ => unreachable!("p is prime and does not divide i"),
                }
            }
        }
    }
}

/// Which completely multiplicative function is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceSpec {
    /// λ: −1 on every prime.
    Liouville,
    /// g: −1 exactly on primes ≡ 3 (mod 4).
    GaussianLiouville,
    /// t: −1 exactly on primes ≡ 2 (mod 3); t(3) = +1.
    Mod3,
    CharacterLike(CharacterLike),
}

impl SequenceSpec {
    pub fn character_like(p: u64, epsilon: Sign, rule: ResidueRule) -> Result<Self> {
        CharacterLike::new(p, epsilon, rule).map(SequenceSpec::CharacterLike)
    }

    /// f(q) for a prime q. The caller guarantees primality.
    pub fn prime_value(&self, q: u64) -> Sign {
        match self {
            SequenceSpec::Liouville => Sign::Minus,
            SequenceSpec::GaussianLiouville => {
                if q % 4 == 3 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            SequenceSpec::Mod3 => {
                if q % 3 == 2 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            SequenceSpec::CharacterLike(ch) => {
                if q == ch.p {
                    ch.epsilon
                } else {
                    ch.residue_value(q)
                }
            }
        }
    }

    /// f(n), by trial division or, when a sieve is supplied, by its factor table.
    pub fn value_at(&self, n: u64, sieve: Option<&FactorSieve>) -> Result<Sign> {
        if n == 0 {
            return Err(Error::domain("sequences are indexed from 1"));
        }
        match sieve {
            Some(s) => {
                if n > s.limit() {
                    return Err(Error::domain(format!(
                        "index {n} exceeds sieve limit {}",
                        s.limit()
                    )));
                }
                Ok(s.prime_factors(n).fold(Sign::Plus, |acc, q| acc * self.prime_value(q)))
            }
            None => Ok(factorize(n)
                .into_iter()
                .fold(Sign::Plus, |acc, (q, e)| acc * self.prime_value(q).pow(u64::from(e)))),
        }
    }

    /// f(1), …, f(limit) via f(n) = f(spf(n)) · f(n / spf(n)).
    pub fn values(&self, limit: u64) -> Result<SignSeq> {
        if limit == 0 {
            return Err(Error::domain("limit must be at least 1"));
        }
        if limit == 1 {
            return Ok(SignSeq { values: vec![Sign::Plus] });
        }
        let sieve = FactorSieve::new(limit)?;
        self.values_with(&sieve)
    }

    /// Bulk evaluation over a prebuilt sieve, up to its limit.
    pub fn values_with(&self, sieve: &FactorSieve) -> Result<SignSeq> {
        let limit = sieve.limit() as usize;
        let mut values: Vec<Sign> = Vec::new();
        values
            .try_reserve_exact(limit)
            .map_err(|e| Error::Resource(format!("{limit} sequence values: {e}")))?;
        values.push(Sign::Plus);
        for n in 2..=limit {
            let p = sieve.spf(n as u64) as usize;
            let v = if p == n {
                self.prime_value(n as u64)
            } else {
                values[p - 1] * values[n / p - 1]
            };
            values.push(v);
        }
        Ok(SignSeq { values })
    }

    pub fn name(&self) -> String {
        match self {
            SequenceSpec::Liouville => "liouville".into(),
            SequenceSpec::GaussianLiouville => "gaussian".into(),
            SequenceSpec::Mod3 => "mod3".into(),
            SequenceSpec::CharacterLike(ch) => {
                let eps = match ch.epsilon {
                    Sign::Plus => "+1",
                    Sign::Minus => "-1",
                };
                match ch.rule {
                    ResidueRule::Legendre => format!("char:{}:{eps}", ch.p),
                    ResidueRule::Trivial => format!("char:{}:{eps}:trivial", ch.p),
                }
            }
        }
    }

    /// Least prime q ≤ bound with f(q) = −1, if any.
    pub fn least_negative_prime(&self, bound: u64) -> Option<u64> {
        match self {
            SequenceSpec::Liouville => (bound >= 2).then_some(2),
            SequenceSpec::GaussianLiouville => (bound >= 3).then_some(3),
            SequenceSpec::Mod3 => (bound >= 2).then_some(2),
            SequenceSpec::CharacterLike(_) => (2..=bound)
                .filter(|&q| is_prime(q))
                .find(|&q| self.prime_value(q) == Sign::Minus),
        }
    }
}

impl std::str::FromStr for SequenceSpec {
    type Err = Error;

    /// Accepts `liouville`, `gaussian`, `mod3` and `char:P:EPS[:legendre|:trivial]`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "liouville" | "lambda" => return Ok(SequenceSpec::Liouville),
            "gaussian" | "g" => return Ok(SequenceSpec::GaussianLiouville),
            "mod3" | "t" => return Ok(SequenceSpec::Mod3),
            _ => {}
        }
        let parts: Vec<&str> = s.split(':').collect();
        if parts.first() != Some(&"char") || !(3..=4).contains(&parts.len()) {
            return Err(Error::domain(format!("unknown sequence '{s}'")));
        }
        let p: u64 = parts[1]
            .parse()
            .map_err(|_| Error::domain(format!("bad modulus '{}'", parts[1])))?;
        let eps = parse_sign(parts[2])?;
        let rule = match parts.get(3).copied() {
            None | Some("legendre") => ResidueRule::Legendre,
            Some("trivial") => ResidueRule::Trivial,
            Some(other) => return Err(Error::domain(format!("unknown residue rule '{other}'"))),
        };
        SequenceSpec::character_like(p, eps, rule)
    }
}

pub fn parse_sign(s: &str) -> Result<Sign> {
    match s {
        "+1" | "1" | "+" | "plus" => Ok(Sign::Plus),
        "-1" | "-" | "minus" => Ok(Sign::Minus),
        other => Err(Error::domain(format!("bad sign '{other}'"))),
    }
}

/// Values f(1), …, f(N) stored contiguously; indexing is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSeq {
    values: Vec<Sign>,
}

impl SignSeq {
    pub fn from_signs(values: Vec<Sign>) -> Self {
        SignSeq { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// f(n) for 1 ≤ n ≤ len.
    pub fn get(&self, n: u64) -> Option<Sign> {
        n.checked_sub(1).and_then(|i| self.values.get(i as usize)).copied()
    }

    /// f(n); panics outside 1..=len.
    pub fn at(&self, n: u64) -> Sign {
        self.values[(n - 1) as usize]
    }

    pub fn as_slice(&self) -> &[Sign] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.values.iter().copied()
    }

    pub fn bits(&self) -> impl Iterator<Item = u8> + '_ {
        self.values.iter().map(|s| s.bit())
    }

    pub fn bit_string(&self) -> String {
        self.bits().map(|b| if b == 1 { '1' } else { '0' }).collect()
    }
}

/// Smallest-prime-factor table for 2..=limit.
pub fn build_sieve(limit: u64) -> Result<FactorSieve> {
    FactorSieve::new(limit)
}

/// f(1), …, f(limit).
pub fn values_range(spec: &SequenceSpec, limit: u64) -> Result<SignSeq> {
    spec.values(limit)
}

/// Trial-division primality.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// p-adic valuation of n ≥ 1.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(bits: &str) -> Vec<Sign> {
        bits.chars()
            .map(|c| if c == '1' { Sign::Plus } else { Sign::Minus })
            .collect()
    }

    const G_PREFIX: [i8; 22] = [
        1, 1, -1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, -1, 1, 1, 1, -1, 1, 1, -1,
    ];

    #[test]
    fn gaussian_prefix_by_trial_division() {
        let spec = SequenceSpec::GaussianLiouville;
        for (i, &want) in G_PREFIX.iter().enumerate() {
            let got = spec.value_at(i as u64 + 1, None).unwrap();
            assert_eq!(got.value(), want, "g_{}", i + 1);
        }
    }

    #[test]
    fn gaussian_prefix_bulk() {
        let v = SequenceSpec::GaussianLiouville.values(22).unwrap();
        let got: Vec<i8> = v.iter().map(Sign::value).collect();
        assert_eq!(got, G_PREFIX);
    }

    #[test]
    fn liouville_and_mod3_bits() {
        let l = SequenceSpec::Liouville.values(21).unwrap();
        assert_eq!(l.as_slice(), seq("100101001100011100001"));
        let t = SequenceSpec::Mod3.values(21).unwrap();
        assert_eq!(t.as_slice(), seq("101100101101100100101"));
    }

    #[test]
    fn one_maps_to_plus() {
        for spec in [
            SequenceSpec::Liouville,
            SequenceSpec::GaussianLiouville,
            SequenceSpec::Mod3,
            SequenceSpec::character_like(7, Sign::Minus, ResidueRule::Trivial).unwrap(),
        ] {
            assert_eq!(spec.value_at(1, None).unwrap(), Sign::Plus);
            assert_eq!(spec.values(1).unwrap().as_slice(), &[Sign::Plus]);
        }
    }

    #[test]
    fn zero_index_is_rejected() {
        assert!(matches!(
            SequenceSpec::Liouville.value_at(0, None),
            Err(Error::Domain(_))
        ));
        assert!(SequenceSpec::Liouville.values(0).is_err());
    }

    #[test]
    fn index_beyond_sieve_is_rejected() {
        let s = FactorSieve::new(10).unwrap();
        assert!(SequenceSpec::Liouville.value_at(11, Some(&s)).is_err());
        assert_eq!(
            SequenceSpec::Liouville.value_at(8, Some(&s)).unwrap(),
            Sign::Minus
        );
    }

    #[test]
    fn character_like_p3_matches_mod3() {
        let ch = SequenceSpec::character_like(3, Sign::Plus, ResidueRule::Legendre).unwrap();
        let a = ch.values(10_000).unwrap();
        let b = SequenceSpec::Mod3.values(10_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn character_like_rejects_bad_modulus() {
        for p in [0, 1, 2, 4, 9, 15] {
            assert!(CharacterLike::new(p, Sign::Plus, ResidueRule::Legendre).is_err(), "{p}");
        }
    }

    #[test]
    fn trivial_rule_is_epsilon_to_the_valuation() {
        for eps in [Sign::Plus, Sign::Minus] {
            let spec = SequenceSpec::character_like(5, eps, ResidueRule::Trivial).unwrap();
            let v = spec.values(5_000).unwrap();
            for n in 1..=5_000u64 {
                assert_eq!(v.at(n), eps.pow(u64::from(valuation(n, 5))), "n={n}");
            }
        }
    }

    #[test]
    fn parse_round_trips_names() {
        for s in ["liouville", "gaussian", "mod3", "char:5:-1", "char:7:+1:trivial"] {
            let spec: SequenceSpec = s.parse().unwrap();
            assert_eq!(spec.name(), s);
        }
        assert!("char:4:+1".parse::<SequenceSpec>().is_err());
        assert!("chebyshev".parse::<SequenceSpec>().is_err());
    }

    #[test]
    fn least_negative_primes() {
        assert_eq!(SequenceSpec::Liouville.least_negative_prime(100), Some(2));
        assert_eq!(SequenceSpec::GaussianLiouville.least_negative_prime(100), Some(3));
        let all_ones = SequenceSpec::character_like(5, Sign::Plus, ResidueRule::Trivial).unwrap();
        assert_eq!(all_ones.least_negative_prime(1000), None);
        let p5 = SequenceSpec::character_like(5, Sign::Minus, ResidueRule::Legendre).unwrap();
        // (2/5) = −1
        assert_eq!(p5.least_negative_prime(100), Some(2));
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(999_983), vec![(999_983, 1)]);
    }
}
