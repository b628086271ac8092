use num_traits::Pow;

use super::{
    check_disk, eval_closed_with, eval_direct, levels_for_precision, partial_kernel, terms_for_precision,
    GenFunSpec,
};
use crate::error::Result;
use crate::exactnum::{BigRational, Enclosure};
use crate::seqcore::Sign;

fn signed(e: Enclosure, s: Sign) -> Enclosure {
    match s {
        Sign::Plus => e,
        Sign::Minus => -e,
    }
}

/// Enclosure of s^m·X(z^{d^m}) − X(z) + K_m(z), both series by the direct route.
///
/// K_m is the exact m-term kernel, so the true value is 0; the enclosure has
/// width at most 2^(−precision_bits).
pub fn telescoping_residual(spec: &GenFunSpec, z: &BigRational, m: u32, precision_bits: u64) -> Result<Enclosure> {
    check_disk(z)?;
    let e = spec.base().pow(m);
    let w = Pow::pow(z, u32::try_from(e).map_err(|_| crate::Error::domain("z^(d^m) exponent overflows"))?);
    let target = precision_bits + 4;
    let xz = eval_direct(spec, z, terms_for_precision(z, target)?)?;
    let xw = eval_direct(spec, &w, terms_for_precision(&w, target)?)?;
    let k = Enclosure::point(partial_kernel(spec, z, m)?);
    Ok(&(&signed(xw, spec.sign().pow(u64::from(m))) - &xz) + &k)
}

/// Enclosure of s·X(z^d) − X(z) + K_1(z), both series by the closed route.
pub fn functional_equation_residual(spec: &GenFunSpec, z: &BigRational, precision_bits: u64) -> Result<Enclosure> {
    check_disk(z)?;
    let w = Pow::pow(z, spec.base() as u32);
    let target = precision_bits + 4;
    let wb = precision_bits + 64;
    let xz = eval_closed_with(spec, z, levels_for_precision(spec, z, target)?, wb)?;
    let xw = eval_closed_with(spec, &w, levels_for_precision(spec, &w, target)?, wb)?;
    let k = Enclosure::point(partial_kernel(spec, z, 1)?);
    Ok(&(&signed(xw, spec.sign()) - &xz) + &k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::seqcore::{CharacterLike, ResidueRule};

    #[test]
    fn residuals_contain_zero() {
        let specs = [
            GenFunSpec::gaussian(),
            GenFunSpec::mod3(),
            GenFunSpec::character_like(CharacterLike::new(5, Sign::Minus, ResidueRule::Legendre).unwrap()),
            GenFunSpec::character_like(CharacterLike::new(7, Sign::Plus, ResidueRule::Trivial).unwrap()),
        ];
        for s in &specs {
            for z in [rat(1, 2), rat(-1, 3), rat(3, 5)] {
                for m in 1..=3 {
                    let r = telescoping_residual(s, &z, m, 100).unwrap();
                    assert!(r.contains_zero() && r.width_at_most_bits(100), "{s} z={z} m={m}");
                }
                let r = functional_equation_residual(s, &z, 100).unwrap();
                assert!(r.contains_zero() && r.width_at_most_bits(100), "{s} z={z}");
            }
        }
    }

    #[test]
    fn zero_residual_is_exact() {
        let g = GenFunSpec::gaussian();
        let r = functional_equation_residual(&g, &rat(0, 1), 64).unwrap();
        assert!(r.is_exact() && r.contains_zero());
        let r = telescoping_residual(&g, &rat(0, 1), 2, 64).unwrap();
        assert!(r.is_exact() && r.contains_zero());
    }

    #[test]
    fn wrong_kernel_is_detected() {
        let g = GenFunSpec::gaussian();
        let z = rat(1, 2);
        let r = telescoping_residual(&g, &z, 2, 80).unwrap();
        let off = r.shift(&rat(1, 1_000_000));
        assert!(!off.contains_zero());
    }
}
