//! Generating functions G, T and F of the sequences with a Mahler-type
//! functional equation, evaluated at rational points of the open unit disk.
//!
//! Two evaluation routes:
//!
//! - **direct**: the exact partial sum Σ_{n≤N} f_n zⁿ widened by the tail
//!   |z|^{N+1}/(1−|z|).
//! - **closed**: the lacunary series in z^{d^k}, one term per level, widened by
//!   a bound in r = |z|^{d^K}: r/((1−r)(1−r²)) for G, r/(1−r)² for T and
//!   r/((1−r)²(1−r^p)) for F.
//!
//! Closed-form levels grow as d^k in exponent, so beyond a working precision
//! the terms are carried as outward-rounded dyadic enclosures instead of exact
//! rationals (see [`eval_closed_with`]).

mod residual;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{bit_size, round_dyadic, BigRational, Enclosure};
use crate::polyalg::{fekete_for, RatPoly};
use crate::seqcore::{CharacterLike, SequenceSpec, Sign};

pub use residual::{functional_equation_residual, telescoping_residual};

/// Working precision used by [`eval_closed`] for terms too large to keep exact.
pub const DEFAULT_WORKING_BITS: u64 = 4096;

/// Which closed form applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// G(z) = Σ z^{2^k}/(1 + z^{2^{k+1}}).
    G,
    /// T(z) = Σ z^{3^k}/(1 + z^{3^k} + z^{2·3^k}).
    T,
    /// F(z) = Σ ε^k Φ(z^{p^k})/(1 − z^{p^{k+1}}).
    F,
}

/// A generating function together with the data of its functional equation.
#[derive(Clone, Debug, PartialEq)]
pub struct GenFunSpec {
    sequence: SequenceSpec,
    family: Family,
    base: u64,
    sign: Sign,
    phi: Option<RatPoly>,
}

impl GenFunSpec {
    pub fn new(sequence: SequenceSpec) -> Result<Self> {
        let (family, base, sign, phi) = match sequence {
            SequenceSpec::Liouville => {
                return Err(Error::NotAvailable(
                    "λ has no known functional equation or closed form".into(),
                ))
            }
            SequenceSpec::GaussianLiouville => (Family::G, 2, Sign::Plus, None),
            SequenceSpec::Mod3 => (Family::T, 3, Sign::Plus, None),
            SequenceSpec::CharacterLike(ch) => (Family::F, ch.p(), ch.epsilon(), Some(fekete_for(&ch))),
        };
        Ok(GenFunSpec { sequence, family, base, sign, phi })
    }

    pub fn gaussian() -> Self {
        GenFunSpec::new(SequenceSpec::GaussianLiouville).expect("G has a closed form")
    }

    pub fn mod3() -> Self {
        GenFunSpec::new(SequenceSpec::Mod3).expect("T has a closed form")
    }

    pub fn character_like(ch: CharacterLike) -> Self {
        GenFunSpec::new(SequenceSpec::CharacterLike(ch)).expect("F has a closed form")
    }

    pub fn sequence(&self) -> &SequenceSpec {
        &self.sequence
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// d in z ↦ z^d.
    pub fn base(&self) -> u64 {
        self.base
    }

    /// f at the base: the factor in X(z) = s·X(z^d) + kernel.
    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Φ(z) for the F family.
    pub fn phi(&self) -> Option<&RatPoly> {
        self.phi.as_ref()
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::G => "G".into(),
            Family::T => "T".into(),
            Family::F => format!("F[{}]", self.sequence.name()),
        }
    }

    /// The level-k term at an enclosure of w = z^{d^k}; no sign factor.
    fn kernel(&self, w: &Enclosure, bits: u64) -> Result<Enclosure> {
        let one = Enclosure::point(BigRational::one());
        let w2 = (w * w).tighten(bits);
        let (num, den) = match self.family {
            Family::G => (w.clone(), &one + &w2),
            Family::T => (w.clone(), &(&one + w) + &w2),
            Family::F => {
                let phi = self.phi.as_ref().expect("F carries Φ");
                let num = eval_poly_enclosure(phi, w, bits);
                let wp = w.powi(self.base as u32).tighten(bits);
                (num, &one - &wp)
            }
        };
        Ok(num.checked_div(&den)?.tighten(bits))
    }
}

impl fmt::Display for GenFunSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn eval_poly_enclosure(p: &RatPoly, w: &Enclosure, bits: u64) -> Enclosure {
    p.coeffs().iter().rev().fold(Enclosure::zero(), |acc, c| {
        (&acc * w).shift(c).tighten(bits)
    })
}

pub(crate) fn check_disk(z: &BigRational) -> Result<()> {
    if z.abs() >= BigRational::one() {
        return Err(Error::domain(format!(
            "evaluation point {} is outside the open unit disk",
            crate::exactnum::format_rational(z)
        )));
    }
    Ok(())
}

/// Exact Σ_{n=1}^{N} f_n zⁿ, by integer Horner on z = a/b.
pub fn direct_partial_sum(sequence: &SequenceSpec, z: &BigRational, n_terms: u64) -> Result<BigRational> {
    if n_terms == 0 {
        return Ok(BigRational::zero());
    }
    if z.is_zero() {
        return Ok(BigRational::zero());
    }
    let f = sequence.values(n_terms)?;
    let (a, b) = (z.numer(), z.denom());
    // U_n = f_n b^{N−n} + a U_{n+1}; the sum is a·U_1 / b^N.
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for n in (1..=n_terms).rev() {
        acc = &acc * a;
        if f.at(n) == Sign::Plus {
            acc += &bpow;
        } else {
            acc -= &bpow;
        }
        bpow *= b;
    }
    Ok(BigRational::new(acc * a, bpow))
}

/// Direct-route enclosure: exact partial sum ± |z|^{N+1}/(1−|z|).
pub fn eval_direct(spec: &GenFunSpec, z: &BigRational, n_terms: u64) -> Result<Enclosure> {
    direct_enclosure(&spec.sequence, z, n_terms)
}

/// The direct route for any sequence, including λ.
pub fn direct_enclosure(sequence: &SequenceSpec, z: &BigRational, n_terms: u64) -> Result<Enclosure> {
    check_disk(z)?;
    if n_terms == 0 {
        return Err(Error::domain("at least one term is required"));
    }
    let sum = direct_partial_sum(sequence, z, n_terms)?;
    let az = z.abs();
    let tail = num_traits::Pow::pow(&az, n_terms + 1) / (BigRational::one() - &az);
    Ok(Enclosure::around(&sum, &tail))
}

/// Exact value of the level-k closed-form term at z, including the sign ε^k.
pub fn closed_form_term(spec: &GenFunSpec, z: &BigRational, k: u32) -> Result<BigRational> {
    check_disk(z)?;
    let e = spec.base.checked_pow(k).ok_or_else(|| Error::domain("level exponent overflows"))?;
    let w = Enclosure::point(pow_u64(z, e));
    let t = spec.kernel(&w, u64::MAX / 4)?;
    debug_assert!(t.is_exact());
    let v = t.lo().clone();
    Ok(if spec.sign.pow(u64::from(k)) == Sign::Minus { -v } else { v })
}

fn pow_u64(x: &BigRational, e: u64) -> BigRational {
    let e: u32 = e.try_into().expect("exponent fits in 32 bits");
    num_traits::Pow::pow(x, e)
}

/// W_m, U_m or V_m: the exact sum of the first m closed-form terms.
pub fn partial_kernel(spec: &GenFunSpec, z: &BigRational, m: u32) -> Result<BigRational> {
    check_disk(z)?;
    (0..m).try_fold(BigRational::zero(), |acc, k| Ok(acc + closed_form_term(spec, z, k)?))
}

/// Closed-form enclosure from `n_levels` terms at the default working precision.
pub fn eval_closed(spec: &GenFunSpec, z: &BigRational, n_levels: u32) -> Result<Enclosure> {
    eval_closed_with(spec, z, n_levels, DEFAULT_WORKING_BITS)
}

/// Closed-form enclosure with an explicit working precision.
///
/// Each term's building blocks stay exact while their representation fits in
/// `2 * working_bits` bits; past that they are rounded outward to multiples of
/// 2^(−working_bits). With small arguments (the usual case) the sum is the
/// exact rational K-term partial sum.
pub fn eval_closed_with(spec: &GenFunSpec, z: &BigRational, n_levels: u32, working_bits: u64) -> Result<Enclosure> {
    check_disk(z)?;
    if n_levels == 0 {
        return Err(Error::domain("at least one level is required"));
    }
    let bits = working_bits.max(16);
    let d = spec.base as u32;
    let mut w = Enclosure::point(z.clone());
    let mut sum = Enclosure::zero();
    for k in 0..n_levels {
        if k > 0 {
            w = w.powi(d).tighten(bits);
        }
        let mut t = spec.kernel(&w, bits)?;
        if spec.sign.pow(u64::from(k)) == Sign::Minus {
            t = -t;
        }
        sum = (&sum + &t).tighten(bits);
    }
    let tail = closed_tail_bound(spec, z, n_levels, bits);
    Ok(Enclosure::new(sum.lo() - &tail, sum.hi() + &tail).expect("lo ≤ hi"))
}

/// Upper bound on Σ_{k≥K} |term_k(z)| for real z.
///
/// Every tail level has |w| ≤ r^{k−K+1} with r = |z|^{d^K}, and each term is
/// at most |w|·g(r) with g = 1/(1−r²) (G), 1/(1−r) (T), 1/((1−r)(1−r^p)) (F),
/// so the tail is at most g(r)·r/(1−r).
pub fn closed_tail_bound(spec: &GenFunSpec, z: &BigRational, n_levels: u32, working_bits: u64) -> BigRational {
    let az = z.abs();
    if az.is_zero() {
        return BigRational::zero();
    }
    let d = spec.base as u32;
    // r ≥ |z|^{d^K}, kept small by upward rounding.
    let mut u = Enclosure::point(az.clone());
    for _ in 0..n_levels {
        u = u.powi(d).tighten(working_bits);
    }
    let one = BigRational::one();
    let r = u.hi().clone();
    let bound = if r < one {
        let q = &one - &r;
        match spec.family {
            Family::G => &r / (&q * (&one - &r * &r)),
            Family::T => &r / (&q * &q),
            Family::F => &r / (&q * &q * (&one - num_traits::Pow::pow(&r, d))),
        }
    } else {
        // Only when |z| is within 2^(−working_bits) of 1; a rounding artifact.
        let zd = num_traits::Pow::pow(&az, d);
        let c = BigRational::from_integer(BigInt::from(spec.base - 1));
        c * &r / ((&one - &az) * (&one - zd))
    };
    if bit_size(&bound) > 2 * working_bits {
        round_dyadic(&bound, working_bits, true)
    } else {
        bound
    }
}

/// Smallest K ≥ 1 whose closed-form tail bound is at most 2^(−bits).
pub fn levels_for_precision(spec: &GenFunSpec, z: &BigRational, bits: u64) -> Result<u32> {
    check_disk(z)?;
    let wb = bits + 64;
    (1..=64)
        .find(|&k| crate::exactnum::le_pow2(&closed_tail_bound(spec, z, k, wb), -(bits as i64)) || z.is_zero())
        .ok_or_else(|| Error::domain("closed form needs more than 64 levels at this point"))
}

/// Approximate log₂|x| for x ≠ 0, accurate well beyond f64 range.
pub(crate) fn approx_log2_abs(x: &BigRational) -> f64 {
    fn log2_int(n: &BigInt) -> f64 {
        let bits = n.bits();
        let shift = bits.saturating_sub(60);
        let top: BigInt = n.abs() >> shift;
        let top: u64 = top.try_into().expect("at most 60 bits");
        (top as f64).log2() + shift as f64
    }
    log2_int(x.numer()) - log2_int(x.denom())
}

/// N such that |z|^{N+1}/(1−|z|) ≤ 2^(−bits), with a small safety margin.
pub fn terms_for_precision(z: &BigRational, bits: u64) -> Result<u64> {
    check_disk(z)?;
    if z.is_zero() {
        return Ok(1);
    }
    let l = -approx_log2_abs(z);
    let extra = -approx_log2_abs(&(BigRational::one() - z.abs()));
    let n = ((bits as f64 + extra) / l).ceil() as u64 + 2;
    Ok(n.max(1))
}
