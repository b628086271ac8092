use num_traits::{One, Zero};
use proptest::prelude::*;

use cmseq_core::analysis::block_frequencies;
use cmseq_core::exactnum::{rat, to_binary_digits, BigRational, BinaryDigits, Enclosure};
use cmseq_core::genfun::{eval_closed, eval_direct, GenFunSpec};
use cmseq_core::polyalg::{resultant_in_u, GaussianRational, PolyInU, RatPoly};
use cmseq_core::seqcore::{factorize, FactorSieve};
use cmseq_core::{CharacterLike, ResidueRule, SequenceSpec, Sign};

const ODD_PRIMES: [u64; 8] = [3, 5, 7, 11, 13, 17, 19, 23];

fn sequence() -> impl Strategy<Value = SequenceSpec> {
    prop_oneof![
        Just(SequenceSpec::Liouville),
        Just(SequenceSpec::GaussianLiouville),
        Just(SequenceSpec::Mod3),
        (0..ODD_PRIMES.len(), any::<bool>(), any::<bool>()).prop_map(|(i, plus, trivial)| {
            let eps = if plus { Sign::Plus } else { Sign::Minus };
            let rule = if trivial { ResidueRule::Trivial } else { ResidueRule::Legendre };
            SequenceSpec::CharacterLike(CharacterLike::new(ODD_PRIMES[i], eps, rule).unwrap())
        }),
    ]
}

fn genfun() -> impl Strategy<Value = GenFunSpec> {
    sequence()
        .prop_filter("closed form", |s| *s != SequenceSpec::Liouville)
        .prop_map(|s| GenFunSpec::new(s).unwrap())
}

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

/// |z| ≤ 3/4.
fn disk_point() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 40i64..=64).prop_map(|(n, d)| rat(n, d))
}

fn enclosure() -> impl Strategy<Value = (Enclosure, BigRational)> {
    (small_rat(), small_rat(), 0u32..=16).prop_map(|(a, b, t)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let x = &lo + (&hi - &lo) * rat(i64::from(t), 16);
        (Enclosure::new(lo, hi).unwrap(), x)
    })
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(small_rat(), 0..6).prop_map(RatPoly::new)
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rat(), small_rat()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn completely_multiplicative(spec in sequence(), m in 1u64..5000, n in 1u64..5000) {
        let f = |k| spec.value_at(k, None).unwrap();
        prop_assert_eq!(f(m * n), f(m) * f(n));
    }

    #[test]
    fn sieve_agrees_with_trial_division(spec in sequence(), n in 2u64..20_000) {
        let sieve = FactorSieve::new(20_000).unwrap();
        let by_factors = factorize(n)
            .into_iter()
            .fold(Sign::Plus, |acc, (q, e)| acc * spec.prime_value(q).pow(u64::from(e)));
        prop_assert_eq!(spec.value_at(n, Some(&sieve)).unwrap(), by_factors);
        let mut factors: Vec<u64> = sieve.prime_factors(n).collect();
        factors.dedup();
        prop_assert_eq!(factors, factorize(n).into_iter().map(|(q, _)| q).collect::<Vec<_>>());
    }

    #[test]
    fn enclosure_ops_are_sound((a, x) in enclosure(), (b, y) in enclosure()) {
        prop_assert!((&a + &b).contains(&(&x + &y)));
        prop_assert!((&a - &b).contains(&(&x - &y)));
        prop_assert!((&a * &b).contains(&(&x * &y)));
        prop_assert!((-&a).contains(&-x.clone()));
        prop_assert!(a.powi(2).contains(&(&x * &x)));
        prop_assert!(a.powi(3).contains(&(&x * &x * &x)));
        if !b.contains_zero() {
            prop_assert!(a.checked_div(&b).unwrap().contains(&(&x / &y)));
        }
        for bits in [1u64, 4, 9] {
            prop_assert!(a.round_outward(bits).contains(&x));
            prop_assert!(a.tighten(bits).contains(&x));
        }
    }

    #[test]
    fn direct_enclosures_are_nested(spec in genfun(), z in disk_point(), n in 1u64..60) {
        let coarse = eval_direct(&spec, &z, n).unwrap();
        let fine = eval_direct(&spec, &z, n + 1 + n / 2).unwrap();
        prop_assert!(fine.is_subset_of(&coarse));
    }

    #[test]
    fn closed_and_direct_routes_agree(spec in genfun(), z in disk_point(), k in 1u32..5) {
        let closed = eval_closed(&spec, &z, k).unwrap();
        let direct = eval_direct(&spec, &z, 200).unwrap();
        prop_assert!(closed.intersects(&direct));
        let finer = eval_closed(&spec, &z, k + 1).unwrap();
        prop_assert!(finer.intersects(&closed));
    }

    #[test]
    fn digits_are_stable_under_refinement(n in 0u64..4096, w in 1u64..64, s in 0u64..64, k in 1usize..10) {
        let lo = rat(n as i64, 4096);
        let hi = (&lo + rat(w as i64, 1 << 16)).min(rat(4095, 4096));
        let wide = Enclosure::new(lo.clone(), hi.clone()).unwrap();
        let inner_lo = &lo + (&hi - &lo) * rat(s as i64, 128);
        let narrow = Enclosure::new(inner_lo.clone(), inner_lo.clone() + (&hi - &inner_lo) / rat(2, 1)).unwrap();
        if let BinaryDigits::Digits(d) = to_binary_digits(&wide, k).unwrap() {
            prop_assert_eq!(to_binary_digits(&narrow, k).unwrap(), BinaryDigits::Digits(d));
        }
    }

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a.clone(), GaussianRational::zero());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a.clone());
        }
        prop_assert_eq!(a.clone() * GaussianRational::one(), a);
    }

    #[test]
    fn polynomial_ring_axioms(a in rat_poly(), b in rat_poly(), c in rat_poly(), x in small_rat()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn divrem_reconstructs(a in rat_poly(), b in rat_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn resultant_vanishes_iff_common_root(
        ra in prop::collection::vec(-4i64..=4, 1..4),
        rb in prop::collection::vec(-4i64..=4, 1..4),
        ca in 1i64..4,
        cb in 1i64..4,
    ) {
        // Coefficients constant in z: A = ca·Π(u − r), B = cb·Π(u − s).
        let build = |roots: &[i64], c: i64| {
            let poly = roots.iter().fold(RatPoly::from_ints(&[c]), |acc, &r| &acc * &RatPoly::from_ints(&[-r, 1]));
            PolyInU::new(poly.coeffs().iter().map(|x| RatPoly::constant(x.clone())).collect())
        };
        let res = resultant_in_u(&build(&ra, ca), &build(&rb, cb)).unwrap();
        // Brute-force search for a shared rational root among small integers.
        let root_of = |roots: &[i64], c: i64, u: i64| {
            let p = roots.iter().fold(RatPoly::from_ints(&[c]), |acc, &r| &acc * &RatPoly::from_ints(&[-r, 1]));
            p.evaluate(&rat(u, 1)).is_zero()
        };
        let shared = (-4..=4).any(|u| root_of(&ra, ca, u) && root_of(&rb, cb, u));
        prop_assert_eq!(res.is_zero(), shared);
    }

    #[test]
    fn block_marginals(spec in sequence(), n in 20u64..400, k in 2usize..6) {
        let big = block_frequencies(&spec, n, k).unwrap();
        let small = block_frequencies(&spec, n, k - 1).unwrap();
        prop_assert_eq!(big.iter().sum::<u64>(), n - k as u64 + 1);
        // Dropping the last bit of each k-block counts the (k−1)-blocks of windows 1..=N−k+1,
        // which is every (k−1)-window except the final one.
        let bits = spec.values(n).unwrap().bit_string();
        let last = usize::from_str_radix(&bits[bits.len() - (k - 1)..], 2).unwrap();
        for b in 0..small.len() {
            let folded = big[2 * b] + big[2 * b + 1];
            let expected = small[b] - u64::from(b == last);
            prop_assert_eq!(folded, expected);
        }
    }
}
