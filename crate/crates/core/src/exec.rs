//! Pluggable execution of rank-partitioned scans over `S_n`.
//!
//! Scans are expressed as a job over a half-open range of lexicographic ranks
//! that returns a partial polynomial; partial results are summed. Since
//! polynomial addition is associative and commutative the total does not
//! depend on how the ranks are split.

use core::ops::Range;

use crate::Poly;

pub type RangeJob<'a> = dyn Fn(Range<u64>) -> Poly + Sync + 'a;

pub trait Executor: Sync {
    /// Evaluates `job` over a partition of `0..total` and returns the sum.
    fn sum_ranges(&self, total: u64, job: &RangeJob<'_>) -> Poly;
}

/// Runs the whole range on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn sum_ranges(&self, total: u64, job: &RangeJob<'_>) -> Poly {
        job(0..total)
    }
}
