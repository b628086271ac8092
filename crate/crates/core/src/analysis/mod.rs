//! Hypothesis certification for the Mahler method, eventual-periodicity
//! refutations, and descriptive statistics of the ±1 sequences.

mod mahler;
mod period;
mod stats;

pub use mahler::{
    check_mahler, named_instance, Certificate, Condition, ConditionResult, DeltaValue, MahlerInstance, MahlerReport,
    Verdict,
};
pub use period::{find_period_witness, PeriodOutcome, PeriodSearch, PeriodWitness, WitnessMethod};
pub use stats::{
    block_counts, block_frequencies, block_label, normality_stats_of, partial_sum_walk, simple_normality_stats,
    NormalityStats, MAX_BLOCK_LEN,
};
