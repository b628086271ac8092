use serde::Serialize;

use crate::error::{Error, Result};
use crate::seqcore::{SequenceSpec, Sign, SignSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMethod {
    /// (n·k, q·n·k) with q the least prime where f(q) = −1.
    Construction,
    /// First disagreement inside a residue class mod k.
    Scan,
}

/// Two indices past the preperiod, congruent mod k, with different values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodWitness {
    pub k: u64,
    pub m: u64,
    pub n1: u64,
    pub n2: u64,
    pub f_n1: Sign,
    pub f_n2: Sign,
    pub method: WitnessMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum PeriodOutcome {
    Found(PeriodWitness),
    NotFound { k: u64, m: u64, search_limit: u64 },
    /// f(q) = +1 for every prime q ≤ search_limit, so f ≡ 1 there.
    NoNegativePrime { search_limit: u64 },
}

impl PeriodOutcome {
    pub fn witness(&self) -> Option<&PeriodWitness> {
        match self {
            PeriodOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Sequence values up to a search limit, shared across many (k, M) queries.
#[derive(Clone, Debug)]
pub struct PeriodSearch {
    spec: SequenceSpec,
    limit: u64,
    values: SignSeq,
    negative_prime: Option<u64>,
}

impl PeriodSearch {
    pub fn new(spec: SequenceSpec, search_limit: u64) -> Result<Self> {
        if search_limit < 2 {
            return Err(Error::domain("search limit must be at least 2"));
        }
        let values = spec.values(search_limit)?;
        let negative_prime = spec.least_negative_prime(search_limit);
        Ok(PeriodSearch { spec, limit: search_limit, values, negative_prime })
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn search_limit(&self) -> u64 {
        self.limit
    }

    /// Least prime q ≤ limit with f(q) = −1.
    pub fn negative_prime(&self) -> Option<u64> {
        self.negative_prime
    }

    /// Refutes "f is k-periodic from index M + 1 on".
    pub fn find(&self, k: u64, m: u64) -> Result<PeriodOutcome> {
        if k == 0 {
            return Err(Error::domain("period must be at least 1"));
        }
        if self.limit <= m.saturating_add(k) {
            return Err(Error::domain(format!("search limit {} must exceed M + k = {}", self.limit, m as u128 + k as u128)));
        }
        let Some(q) = self.negative_prime else {
            return Ok(PeriodOutcome::NoNegativePrime { search_limit: self.limit });
        };
        let n1 = (m / k + 1) * k;
        if let Some(n2) = q.checked_mul(n1).filter(|&n2| n2 <= self.limit) {
            return self.checked(k, m, n1, n2, WitnessMethod::Construction);
        }
        for r in 0..k {
            let first = m + 1 + (r + k - (m + 1) % k) % k;
            if first > self.limit {
                continue;
            }
            let f0 = self.values.at(first);
            let mut j = first + k;
            while j <= self.limit {
                if self.values.at(j) != f0 {
                    return self.checked(k, m, first, j, WitnessMethod::Scan);
                }
                j += k;
            }
        }
        Ok(PeriodOutcome::NotFound { k, m, search_limit: self.limit })
    }

    fn checked(&self, k: u64, m: u64, n1: u64, n2: u64, method: WitnessMethod) -> Result<PeriodOutcome> {
        let w = PeriodWitness { k, m, n1, n2, f_n1: self.values.at(n1), f_n2: self.values.at(n2), method };
        if n1 % k != n2 % k || n1 <= m || n2 <= m || w.f_n1 == w.f_n2 {
            return Err(Error::Consistency(format!("invalid period witness {w:?}")));
        }
        Ok(PeriodOutcome::Found(w))
    }
}

/// One-shot search; build a [`PeriodSearch`] to answer many queries.
pub fn find_period_witness(spec: &SequenceSpec, k: u64, m: u64, search_limit: u64) -> Result<PeriodOutcome> {
    PeriodSearch::new(*spec, search_limit)?.find(k, m)
}
