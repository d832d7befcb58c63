//! Sequential or data-parallel evaluation of independent work items.
//!
//! Results never depend on the mode: items are indexed, and searches
//! return the lowest matching index.

use std::ops::Range;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, and
    /// falls back to sequential otherwise.
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
    pub fn map_collect<T, F>(self, items: Range<usize>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            _ => items.map(f).collect(),
        }
    }

    /// The result for the lowest index where `f` returns `Some`.
    pub fn find_map_first<T, F>(self, items: Range<usize>, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().find_map_first(f)
            }
            _ => items.into_iter().find_map(f),
        }
    }

    /// Runs `f` on a pool of `jobs` threads when parallel; `None` keeps the
    /// global pool.
    pub fn with_jobs<T: Send>(self, jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
        match (self, jobs) {
            #[cfg(feature = "parallel")]
            (Execution::Parallel, Some(n)) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            _ => f(),
        }
    }
}
