//! A scoped-thread [`Executor`].

use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use qeuler_core::exec::RangeJob;
use qeuler_core::{Executor, Poly};

/// Below this many ranks a scan runs on the calling thread.
const MIN_PARALLEL: u64 = 5040;

/// Splits the rank range into chunks pulled by `threads` workers.
#[derive(Clone, Copy, Debug)]
pub struct Threaded {
    threads: usize,
}

impl Threaded {
    pub fn new(threads: usize) -> Self {
        Threaded { threads: threads.max(1) }
    }

    /// One worker per available core.
    pub fn available() -> Self {
        Threaded::new(thread::available_parallelism().map_or(1, |n| n.get()))
    }

    pub fn threads(&self) -> usize {
        self.threads
    }
}

fn chunks(total: u64, count: u64) -> Vec<Range<u64>> {
    let count = count.clamp(1, total.max(1));
    (0..count).map(|i| total * i / count..total * (i + 1) / count).collect()
}

impl Executor for Threaded {
    fn sum_ranges(&self, total: u64, job: &RangeJob<'_>) -> Poly {
        if self.threads == 1 || total < MIN_PARALLEL {
            return job(0..total);
        }
        let work = chunks(total, self.threads as u64 * 8);
        let next = AtomicUsize::new(0);
        thread::scope(|s| {
            let handles: Vec<_> = (0..self.threads)
                .map(|_| {
                    s.spawn(|| {
                        let mut acc = Poly::zero();
                        while let Some(r) = work.get(next.fetch_add(1, Ordering::Relaxed)) {
                            acc += job(r.clone());
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan worker panicked")).sum()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qeuler_core::genfun::{fix_refined_poly, fix_refined_poly_with};

    #[test]
    fn chunks_cover_range() {
        for (total, count) in [(0, 4), (10, 3), (5040, 64), (7, 100)] {
            let cs = chunks(total, count);
            assert_eq!(cs.first().unwrap().start, 0);
            assert_eq!(cs.last().unwrap().end, total);
            assert!(cs.windows(2).all(|w| w[0].end == w[1].start));
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let seq = fix_refined_poly(8);
        for k in [1, 2, 3, 7] {
            assert_eq!(fix_refined_poly_with(8, &Threaded::new(k)), seq, "threads={k}");
        }
    }
}
