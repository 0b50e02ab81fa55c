//! Execution strategy for the data-parallel loops.
//!
//! Matrix and pair-geometry rows, grid solves and brute-force scans are
//! independent per item, so they parallelize without changing any output
//! bit: every item writes its own slot and iteration order never feeds
//! back into the values. The power iteration itself stays sequential.

/// How data-parallel loops run. With the `parallel` feature disabled,
/// both variants execute the sequential reference path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// Fan out over the rayon thread pool.
    #[default]
    Parallel,
    /// Single-threaded reference path.
    Sequential,
}

/// Fills disjoint `width`-sized rows of a row-major buffer.
pub(crate) fn fill_rows<F>(buf: &mut [f64], width: usize, mode: Parallelism, fill: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Parallelism::Parallel {
        use rayon::prelude::*;
        buf.par_chunks_mut(width)
            .enumerate()
            .for_each(|(i, row)| fill(i, row));
        return;
    }
    let _ = mode;
    for (i, row) in buf.chunks_mut(width).enumerate() {
        fill(i, row);
    }
}

/// Maps `f` over 0..count, collecting results in input order.
pub(crate) fn map_indexed<T, F>(count: usize, mode: Parallelism, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Parallelism::Parallel {
        use rayon::prelude::*;
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..count).map(f).collect()
}
