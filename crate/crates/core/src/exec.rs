//! Data-parallel helpers. With the `parallel` feature these fan out over
//! rayon's pool; without it, or with [`Execution::Sequential`], they run as
//! plain iterator loops. Results always come back in input order.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// `filter_map` over a `u64` range (used for bitmask enumeration).
    pub fn filter_map_range<R, F>(self, range: Range<u64>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter_map(f).collect();
        }
        range.filter_map(f).collect()
    }

    pub fn all_range<F>(self, range: Range<usize>, f: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().all(f);
        }
        range.into_iter().all(f)
    }

    /// The first item (in slice order) for which `f` returns `Some`.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().find_map_first(f);
        }
        items.iter().find_map(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u32> = (0..100).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(exec.map(&xs, |x| x * 2)[10], 20);
            assert_eq!(exec.map_range(0..5, |i| i + 1), vec![1, 2, 3, 4, 5]);
            assert_eq!(exec.filter_map_range(0..10, |i| (i % 3 == 0).then_some(i)), vec![0, 3, 6, 9]);
            assert!(exec.all_range(0..50, |i| i < 50));
            assert_eq!(exec.find_map_first(&xs, |&x| (x > 41).then_some(x)), Some(42));
        }
    }
}
