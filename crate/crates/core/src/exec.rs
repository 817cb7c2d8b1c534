//! Chunked map-reduce over contiguous index ranges.
//!
//! Every exhaustive scan in the crate walks an integer counter `0..total`.
//! The counter is split on its top bits into `2^k` contiguous ranges, each
//! range is folded independently, and the partial results are combined in
//! range order. Results are therefore identical for any worker count, and
//! identical with or without the `parallel` feature.

use std::ops::Range;

#[cfg(feature = "parallel")]
use crate::Error;
use crate::Result;

/// How an exhaustive scan is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    /// One range, folded on the calling thread.
    Sequential,
    /// Ranges folded on a rayon pool. `workers: None` uses the global pool;
    /// `split_bits: None` derives the range count from the worker count.
    /// Without the `parallel` feature this degrades to sequential folding of
    /// the same ranges.
    Parallel {
        workers: Option<usize>,
        split_bits: Option<u32>,
    },
}

impl Default for Parallelism {
    fn default() -> Self {
        Parallelism::Parallel {
            workers: None,
            split_bits: None,
        }
    }
}

impl Parallelism {
    pub fn workers(n: usize) -> Self {
        Parallelism::Parallel {
            workers: Some(n.max(1)),
            split_bits: None,
        }
    }

    fn worker_count(&self) -> usize {
        match *self {
            Parallelism::Sequential => 1,
            Parallelism::Parallel { workers: Some(w), .. } => w.max(1),
            Parallelism::Parallel { workers: None, .. } => available_workers(),
        }
    }

    /// Number of top counter bits used to partition `total` indices.
    pub fn split_bits(&self, total: u64) -> u32 {
        let max_bits = 64 - total.max(1).leading_zeros() - 1;
        let bits = match *self {
            Parallelism::Sequential => 0,
            Parallelism::Parallel {
                split_bits: Some(k),
                ..
            } => k,
            // Four ranges per worker keeps the tail short.
            Parallelism::Parallel { .. } => {
                (self.worker_count() * 4).next_power_of_two().trailing_zeros()
            }
        };
        bits.min(max_bits).min(20)
    }
}

#[cfg(feature = "parallel")]
fn available_workers() -> usize {
    rayon::current_num_threads()
}

#[cfg(not(feature = "parallel"))]
fn available_workers() -> usize {
    1
}

/// Contiguous ranges covering `0..total`, `2^bits` of them (fewer when
/// `total` is small). Boundaries depend only on `total` and `bits`.
pub fn partition(total: u64, bits: u32) -> Vec<Range<u64>> {
    let pieces = 1u64 << bits;
    let pieces = pieces.min(total.max(1));
    let base = total / pieces;
    let extra = total % pieces;
    let mut out = Vec::with_capacity(pieces as usize);
    let mut start = 0;
    for p in 0..pieces {
        let len = base + u64::from(p < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Folds every range with `fold` and combines the partial results left to
/// right with `combine`.
pub fn map_reduce<T, F, C>(total: u64, par: Parallelism, fold: F, combine: C) -> Result<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
    C: Fn(T, T) -> T,
{
    let ranges = partition(total, par.split_bits(total));
    let partials = run_ranges(ranges, par, &fold)?;
    let mut iter = partials.into_iter();
    let first = iter.next().expect("partition yields at least one range");
    Ok(iter.fold(first, combine))
}

/// Elementwise sum of histograms; the shorter one is zero-extended.
pub fn add_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

#[cfg(feature = "parallel")]
fn run_ranges<T, F>(ranges: Vec<Range<u64>>, par: Parallelism, fold: &F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    use rayon::prelude::*;

    match par {
        Parallelism::Sequential => Ok(ranges.into_iter().map(fold).collect()),
        Parallelism::Parallel { workers: None, .. } => {
            Ok(ranges.into_par_iter().map(fold).collect())
        }
        Parallelism::Parallel {
            workers: Some(w), ..
        } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::ThreadPool(e.to_string()))?;
            Ok(pool.install(|| ranges.into_par_iter().map(fold).collect()))
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn run_ranges<T, F>(ranges: Vec<Range<u64>>, _par: Parallelism, fold: &F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
{
    Ok(ranges.into_iter().map(fold).collect())
}
