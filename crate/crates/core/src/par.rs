//! Data-parallel helpers over integer index spaces.
//!
//! Every sweep in the crate (labeled-graph enumeration, code verification
//! trials, subset scans) is expressed as a function of an index in a
//! `Range<u64>`. [`Exec`] selects between a rayon-backed and a plain
//! sequential evaluation; both return identical results, including which
//! element is reported as "first". Without the `parallel` feature the
//! parallel variant falls back to the sequential loop.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Smallest index in `range` satisfying `pred`.
    pub fn find_first<F>(self, range: Range<u64>, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().find_first(|&i| pred(i)),
            _ => range.into_iter().find(|&i| pred(i)),
        }
    }

    /// Number of indices in `range` satisfying `pred`.
    pub fn count<F>(self, range: Range<u64>, pred: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().filter(|&i| pred(i)).count() as u64,
            _ => range.into_iter().filter(|&i| pred(i)).count() as u64,
        }
    }

    /// Maps every index, preserving order.
    pub fn map<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).collect(),
            _ => range.into_iter().map(f).collect(),
        }
    }

    /// Smallest index whose mapped value is `Some`, with that value.
    pub fn find_map_first<T, F>(self, range: Range<u64>, f: F) -> Option<(u64, T)>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range
                .into_par_iter()
                .filter_map(|i| f(i).map(|v| (i, v)))
                .find_first(|_| true),
            _ => range.into_iter().find_map(|i| f(i).map(|v| (i, v))),
        }
    }

    /// Same as [`Exec::find_map_first`] over an explicit slice.
    pub fn find_map_first_in<T, U, F>(self, items: &[U], f: F) -> Option<(usize, T)>
    where
        T: Send,
        U: Sync,
        F: Fn(&U) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items
                .par_iter()
                .enumerate()
                .filter_map(|(i, u)| f(u).map(|v| (i, v)))
                .find_first(|_| true),
            _ => items
                .iter()
                .enumerate()
                .find_map(|(i, u)| f(u).map(|v| (i, v))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.find_first(0..10_000, |i| i % 977 == 976), Some(976));
            assert_eq!(exec.count(0..1000, |i| i % 3 == 0), 334);
            assert_eq!(exec.map(0..5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(
                exec.find_map_first(0..100, |i| (i > 40 && i % 7 == 0).then_some(i * 2)),
                Some((42, 84))
            );
            assert_eq!(exec.find_first(0..10, |_| false), None);
        }
    }
}
