use crate::error::{Error, Result};

/// Smallest-prime-factor table for 2 ≤ n ≤ limit.
#[derive(Clone, Debug)]
pub struct FactorSieve {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl FactorSieve {
    /// Linear sieve: every composite is written exactly once, by its smallest prime.
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::domain(format!("sieve limit {limit} < 2")));
        }
        if limit > u64::from(u32::MAX) {
            return Err(Error::domain(format!("sieve limit {limit} exceeds 32 bits")));
        }
        let n = limit as usize;
        let mut spf: Vec<u32> = Vec::new();
        spf.try_reserve_exact(n + 1)
            .map_err(|e| Error::Resource(format!("sieve of {} entries: {e}", n + 1)))?;
        spf.resize(n + 1, 0);

        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let lp = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > lp || m > n {
                    break;
                }
                spf[m] = p;
            }
        }
        Ok(FactorSieve { spf, primes })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of 2 ≤ n ≤ limit.
    pub fn spf(&self, n: u64) -> u64 {
        assert!(n >= 2 && n <= self.limit(), "spf({n}) outside 2..={}", self.limit());
        u64::from(self.spf[n as usize])
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit() && self.spf(n) == n
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().map(|&p| u64::from(p))
    }

    /// Prime factors of n with multiplicity, ascending.
    pub fn prime_factors(&self, n: u64) -> impl Iterator<Item = u64> + '_ {
        std::iter::successors((n > 1).then_some(n), move |&m| {
            let r = m / self.spf(m);
            (r > 1).then_some(r)
        })
        .map(move |m| self.spf(m))
    }
}
