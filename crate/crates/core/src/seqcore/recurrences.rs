use serde::Serialize;

use super::{SequenceSpec, Sign, SignSeq};
use crate::error::{Error, Result};

/// A structural identity a sequence kind is expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// f_1 = 1.
    Unit,
    /// g_{2n} = g_n.
    GaussianDoubling,
    /// g_{4k+1} = −g_{4k+3}.
    GaussianQuarter,
    /// t_{3n} = t_n.
    Mod3Tripling,
    /// t_{3n+1} = 1.
    Mod3One,
    /// t_{3n+2} = −1.
    Mod3Two,
    /// f_{kp+i} = f_i for 1 ≤ i < p.
    ResiduePeriodic,
    /// f_{pn} = ε f_n.
    MultipleOfP,
}

/// `index` is the free variable of the rule (n, k, or kp+i), not the sequence index checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub index: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub limit: u64,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl RecurrenceReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_recurrences(spec: &SequenceSpec, limit: u64) -> Result<RecurrenceReport> {
    if limit < 8 {
        return Err(Error::domain(format!("recurrence check needs limit ≥ 8, got {limit}")));
    }
    let values = spec.values(limit)?;
    Ok(check_recurrences_in(spec, &values))
}

/// Checks the rules for `spec`'s kind against arbitrary values, so corrupted
/// sequences can be fed in to confirm violations are reported.
pub fn check_recurrences_in(spec: &SequenceSpec, values: &SignSeq) -> RecurrenceReport {
    let limit = values.len() as u64;
    let f = |n: u64| values.at(n);
    let mut checks = 0u64;
    let mut violations = Vec::new();
    let mut check = |rule: Rule, index: u64, ok: bool| {
        checks += 1;
        if !ok {
            violations.push(Violation { rule, index });
        }
    };

    if limit >= 1 {
        check(Rule::Unit, 1, f(1) == Sign::Plus);
    }
    match spec {
        SequenceSpec::Liouville => {}
        SequenceSpec::GaussianLiouville => {
            for n in 1..=limit / 2 {
                check(Rule::GaussianDoubling, n, f(2 * n) == f(n));
            }
            for k in 0..=limit.saturating_sub(3) / 4 {
                if 4 * k + 3 <= limit {
                    check(Rule::GaussianQuarter, k, f(4 * k + 1) == -f(4 * k + 3));
                }
            }
        }
        SequenceSpec::Mod3 => {
            for n in 1..=limit / 3 {
                check(Rule::Mod3Tripling, n, f(3 * n) == f(n));
            }
            for n in 0..=limit / 3 {
                if 3 * n < limit {
                    check(Rule::Mod3One, n, f(3 * n + 1) == Sign::Plus);
                }
                if 3 * n + 2 <= limit {
                    check(Rule::Mod3Two, n, f(3 * n + 2) == Sign::Minus);
                }
            }
        }
        SequenceSpec::CharacterLike(ch) => {
            let p = ch.p();
            for m in (p + 1)..=limit {
                let i = m % p;
                if i != 0 {
                    check(Rule::ResiduePeriodic, m, f(m) == f(i));
                }
            }
            for n in 1..=limit / p {
                check(Rule::MultipleOfP, n, f(p * n) == ch.epsilon() * f(n));
            }
        }
    }
    RecurrenceReport { limit, checks, violations }
}
