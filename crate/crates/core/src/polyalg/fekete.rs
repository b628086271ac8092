use super::RatPoly;
use crate::error::Result;
use crate::exactnum::BigRational;
use crate::seqcore::{CharacterLike, ResidueRule, SequenceSpec, Sign};

/// Φ(z) = Σ_{i=1}^{p−1} f_i z^i for the character-like function (p, ε, rule).
///
/// With the Legendre rule this is the Fekete polynomial of p. ε does not
/// enter Φ; it is accepted so callers can pass a full parameter set.
pub fn fekete(p: u64, epsilon: Sign, rule: ResidueRule) -> Result<RatPoly> {
    Ok(fekete_for(&CharacterLike::new(p, epsilon, rule)?))
}

pub fn fekete_for(ch: &CharacterLike) -> RatPoly {
    let spec = SequenceSpec::CharacterLike(*ch);
    let mut coeffs = vec![BigRational::from_integer(0.into())];
    for i in 1..ch.p() {
        let f = spec.value_at(i, None).expect("i ≥ 1");
        coeffs.push(BigRational::from_integer(i64::from(f.value()).into()));
    }
    RatPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::is_prime;

    /// Coefficients from the set of nonzero squares mod p.
    fn quadratic_residue_poly(p: u64) -> RatPoly {
        let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        let mut cs = vec![0i64];
        cs.extend((1..p).map(|i| if squares.contains(&i) { 1 } else { -1 }));
        RatPoly::from_ints(&cs)
    }

    #[test]
    fn p3_legendre() {
        assert_eq!(fekete(3, Sign::Plus, ResidueRule::Legendre).unwrap(), RatPoly::from_ints(&[0, 1, -1]));
    }

    #[test]
    fn p5_legendre() {
        assert_eq!(
            fekete(5, Sign::Minus, ResidueRule::Legendre).unwrap(),
            RatPoly::from_ints(&[0, 1, -1, -1, 1])
        );
        assert_eq!(quadratic_residue_poly(5), RatPoly::from_ints(&[0, 1, -1, -1, 1]));
    }

    #[test]
    fn p3_trivial() {
        assert_eq!(fekete(3, Sign::Plus, ResidueRule::Trivial).unwrap(), RatPoly::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn rejects_non_odd_primes() {
        assert!(fekete(2, Sign::Plus, ResidueRule::Legendre).is_err());
        assert!(fekete(21, Sign::Plus, ResidueRule::Legendre).is_err());
    }

    #[test]
    fn legendre_coefficients_are_balanced() {
        for p in (3..200).filter(|&p| is_prime(p)) {
            let phi = fekete(p, Sign::Plus, ResidueRule::Legendre).unwrap();
            assert_eq!(phi, quadratic_residue_poly(p), "p={p}");
            assert_eq!(phi.degree(), Some(p as usize - 1));
            assert_eq!(phi.coeff(0), BigRational::from_integer(0.into()));
            let sum = phi.coeffs().iter().fold(BigRational::from_integer(0.into()), |a, c| a + c);
            assert_eq!(sum, BigRational::from_integer(0.into()), "p={p}");
        }
    }

    #[test]
    fn z_p_minus_one_never_divides_phi() {
        // deg Φ = p − 1 < p, so (z^p − 1) | Φ would force Φ = 0.
        for p in [3u64, 5, 7, 11, 13] {
            let mut cs = vec![-1i64];
            cs.extend(std::iter::repeat(0).take(p as usize - 1));
            cs.push(1);
            let zp1 = RatPoly::from_ints(&cs);
            for rule in [ResidueRule::Legendre, ResidueRule::Trivial] {
                let phi = fekete(p, Sign::Plus, rule).unwrap();
                assert!(!crate::polyalg::divides(&zp1, &phi).unwrap());
                let (q, r) = phi.divrem(&zp1).unwrap();
                assert!(q.is_zero());
                assert_eq!(r, phi);
            }
        }
    }
}
