use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{serialize_rational, BigRational};
use crate::seqcore::{SequenceSpec, Sign, SignSeq};

/// Largest supported block length.
pub const MAX_BLOCK_LEN: usize = 16;

/// Descriptive counts of a ±1 prefix. No statistical inference is attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityStats {
    pub n: u64,
    pub plus_count: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub plus_frequency: BigRational,
    /// max over x ≤ N of |Σ_{n≤x} f_n|.
    pub partial_sum_max: u64,
    pub partial_sum_at_n: i64,
}

pub fn normality_stats_of(seq: &SignSeq) -> Result<NormalityStats> {
    if seq.is_empty() {
        return Err(Error::domain("N must be at least 1"));
    }
    let mut sum = 0i64;
    let mut max = 0u64;
    let mut plus = 0u64;
    for s in seq.iter() {
        if s == Sign::Plus {
            plus += 1;
            sum += 1;
        } else {
            sum -= 1;
        }
        max = max.max(sum.unsigned_abs());
    }
    let n = seq.len() as u64;
    Ok(NormalityStats {
        n,
        plus_count: plus,
        plus_frequency: BigRational::new(plus.into(), n.into()),
        partial_sum_max: max,
        partial_sum_at_n: sum,
    })
}

pub fn simple_normality_stats(spec: &SequenceSpec, n: u64) -> Result<NormalityStats> {
    if n == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    normality_stats_of(&spec.values(n)?)
}

/// Counts of the 2^k blocks over the N − k + 1 windows of the bits (1+f_n)/2.
/// Block b is indexed by its bits read as a binary number, first bit most
/// significant.
pub fn block_counts(seq: &SignSeq, k: usize) -> Result<Vec<u64>> {
    if k == 0 || k > MAX_BLOCK_LEN {
        return Err(Error::domain(format!("block length must lie in 1..={MAX_BLOCK_LEN}")));
    }
    if seq.len() < k {
        return Err(Error::domain("N must be at least the block length"));
    }
    let mask = (1usize << k) - 1;
    let mut counts = vec![0u64; 1 << k];
    let mut window = 0usize;
    for (i, b) in seq.bits().enumerate() {
        window = ((window << 1) | b as usize) & mask;
        if i + 1 >= k {
            counts[window] += 1;
        }
    }
    Ok(counts)
}

pub fn block_frequencies(spec: &SequenceSpec, n: u64, k: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::domain("N must be at least 1"));
    }
    block_counts(&spec.values(n)?, k)
}

/// The k-bit label of block index b.
pub fn block_label(b: usize, k: usize) -> String {
    format!("{b:0k$b}")
}

/// (x, Σ_{n≤x} f_n) for x = stride, 2·stride, …, and always x = N.
pub fn partial_sum_walk(spec: &SequenceSpec, n: u64, stride: u64) -> Result<Vec<(u64, i64)>> {
    if n == 0 || stride == 0 {
        return Err(Error::domain("N and stride must be at least 1"));
    }
    let seq = spec.values(n)?;
    let mut out = Vec::with_capacity((n / stride) as usize + 1);
    let mut sum = 0i64;
    for (i, s) in seq.iter().enumerate() {
        sum += i64::from(s.value());
        let x = i as u64 + 1;
        if x % stride == 0 || x == n {
            out.push((x, sum));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn liouville_21() {
        let printed = "100101001100011100001";
        let ones = printed.bytes().filter(|&b| b == b'1').count() as i64;
        let s = simple_normality_stats(&SequenceSpec::Liouville, 21).unwrap();
        assert_eq!(s.plus_frequency, rat(ones, 21));
        assert_eq!(s.partial_sum_at_n, ones - (21 - ones));
        let c = block_frequencies(&SequenceSpec::Liouville, 21, 1).unwrap();
        assert_eq!(c, vec![(21 - ones) as u64, ones as u64]);
    }

    #[test]
    fn single_term() {
        for spec in [SequenceSpec::Liouville, SequenceSpec::Mod3] {
            let s = simple_normality_stats(&spec, 1).unwrap();
            assert_eq!(s.plus_frequency, rat(1, 1));
            assert_eq!((s.partial_sum_max, s.partial_sum_at_n), (1, 1));
        }
    }

    #[test]
    fn single_window() {
        let c = block_frequencies(&SequenceSpec::GaussianLiouville, 3, 3).unwrap();
        assert_eq!(c.iter().sum::<u64>(), 1);
        assert_eq!(c[0b110], 1);
    }

    #[test]
    fn bad_block_lengths() {
        assert!(block_frequencies(&SequenceSpec::Liouville, 10, 0).is_err());
        assert!(block_frequencies(&SequenceSpec::Liouville, 10, 17).is_err());
        assert!(block_frequencies(&SequenceSpec::Liouville, 3, 4).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(block_label(5, 4), "0101");
        assert_eq!(block_label(0, 1), "0");
    }

    #[test]
    fn walk_ends_at_n() {
        let w = partial_sum_walk(&SequenceSpec::Liouville, 21, 5).unwrap();
        assert_eq!(w.iter().map(|p| p.0).collect::<Vec<_>>(), vec![5, 10, 15, 20, 21]);
        assert_eq!(w.last().unwrap().1, -3);
    }
}
