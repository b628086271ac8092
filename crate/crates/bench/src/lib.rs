//! Shared workloads for the criterion benches.

use cmseq_core::exactnum::{rat, BigRational};
use cmseq_core::{CharacterLike, GenFunSpec, ResidueRule, SequenceSpec, Sign};

pub fn sequences() -> Vec<SequenceSpec> {
    vec![
        SequenceSpec::Liouville,
        SequenceSpec::GaussianLiouville,
        SequenceSpec::Mod3,
        SequenceSpec::character_like(7, Sign::Minus, ResidueRule::Legendre).expect("odd prime"),
    ]
}

pub fn families() -> Vec<GenFunSpec> {
    vec![
        GenFunSpec::gaussian(),
        GenFunSpec::mod3(),
        GenFunSpec::character_like(CharacterLike::new(7, Sign::Minus, ResidueRule::Legendre).expect("odd prime")),
    ]
}

pub fn half() -> BigRational {
    rat(1, 2)
}
