//! Data-parallel map helpers with a sequential fallback.
//!
//! All reductions downstream of these helpers consume results in index
//! order, so enabling or disabling the `parallel` feature (or changing the
//! rayon thread count) never changes a single bit of the output.

/// Map `f` over `0..n`, returning results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    map_indexed_seq(n, f)
}

/// Sequential twin of [`map_indexed`]; always available so benches can
/// compare both paths in one build.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Fixed chunk size for gradient accumulation. Constant (not derived from
/// the thread count) so the merge order is the same on every machine.
pub const GRAD_CHUNK: usize = 8;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let f = |i: usize| (i as f64).sin() * 1e6;
        let a = map_indexed(100, f);
        let b = map_indexed_seq(100, f);
        assert_eq!(a, b);
    }
}
