//! Execution strategy for the data-parallel sweeps.
//!
//! Every sweep takes an [`Execution`] so callers (and the benches) can pick
//! the sequential or the rayon path at runtime. Without the `parallel`
//! feature both variants run sequentially. Results are always collected in
//! input order, so the choice never changes output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
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
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    /// Maps `f` over `0..len`, preserving order.
    pub fn map_range<R, F>(self, len: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Folds the images of `0..len` with an associative, commutative `combine`.
    pub fn reduce_range<R, F, C>(self, len: u64, identity: R, f: F, combine: C) -> R
    where
        R: Send + Sync + Clone,
        F: Fn(u64) -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len)
                .into_par_iter()
                .map(f)
                .reduce(|| identity.clone(), &combine),
            _ => (0..len).map(f).fold(identity, combine),
        }
    }
}
