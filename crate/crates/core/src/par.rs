//! Execution strategy for the batch loops in this crate.
//!
//! Every hot loop goes through the helpers below so the sequential and the
//! rayon code paths stay identical apart from the iterator type. Without the
//! `parallel` feature, [`Strategy::Parallel`] silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

pub(crate) fn map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

pub(crate) fn map_range<R, F>(strategy: Strategy, range: std::ops::Range<u64>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    let _ = strategy;
    range.map(f).collect()
}

pub(crate) fn all_range<F>(strategy: Strategy, range: std::ops::Range<u64>, f: F) -> bool
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return range.into_par_iter().all(f);
    }
    let _ = strategy;
    range.into_iter().all(f)
}

/// Largest value in `range` satisfying `pred`.
pub(crate) fn max_satisfying<F>(strategy: Strategy, range: std::ops::RangeInclusive<u64>, pred: F) -> Option<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return range.into_par_iter().filter(|&m| pred(m)).max();
    }
    let _ = strategy;
    range.rev().find(|&m| pred(m))
}
