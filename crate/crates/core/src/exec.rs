//! Sequential/parallel dispatch for the data-parallel inner loops.
//!
//! Lex segment scans, Betti aggregation, row elimination and seed sweeps all
//! go through these helpers. Results are aggregated in input order, so both
//! modes produce identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a data-parallel loop should run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Both modes available in this build, sequential first.
    pub fn all() -> Vec<Execution> {
        #[allow(unused_mut)]
        let mut modes = vec![Execution::Sequential];
        #[cfg(feature = "parallel")]
        modes.push(Execution::Parallel);
        modes
    }

    pub fn name(self) -> &'static str {
        match self {
            Execution::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Execution::Parallel => "parallel",
        }
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Order-preserving map over an index range.
    pub fn map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..n).into_par_iter().map(f).collect(),
        }
    }

    /// Order-preserving filter.
    pub fn filter<T, F>(self, items: &[T], keep: F) -> Vec<T>
    where
        T: Sync + Send + Clone,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().filter(|x| keep(x)).cloned().collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().filter(|x| keep(x)).cloned().collect(),
        }
    }

    /// Count of items satisfying a predicate.
    pub fn count<T, F>(self, items: &[T], pred: F) -> usize
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().filter(|x| pred(x)).count(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().filter(|x| pred(x)).count(),
        }
    }

    /// Applies `f` to every element in place.
    pub fn for_each_mut<T, F>(self, items: &mut [T], f: F)
    where
        T: Send,
        F: Fn(&mut T) + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter_mut().for_each(f),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter_mut().for_each(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        for mode in Execution::all() {
            assert_eq!(mode.map(&xs, |x| x * 2)[999], 1998);
            assert_eq!(mode.count(&xs, |x| x % 3 == 0), 334);
            assert_eq!(mode.filter(&xs, |x| *x < 3), vec![0, 1, 2]);
            assert_eq!(mode.map_range(4, |i| i + 1), vec![1, 2, 3, 4]);
        }
    }
}
