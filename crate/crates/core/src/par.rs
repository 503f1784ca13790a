//! Data-parallel kernels with a sequential fallback.
//!
//! With the `parallel` feature the kernels run on the current rayon pool.
//! Small inputs, a single-thread pool, or a build without the feature take
//! the plain sequential path; results are identical either way.

/// Below this many elements the sequential path is used.
pub const PAR_THRESHOLD: usize = 1 << 14;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
fn use_parallel(len: usize) -> bool {
    len >= PAR_THRESHOLD && rayon::current_num_threads() > 1
}

/// Calls `f(index, &mut item)` for every element.
pub fn for_each_indexed<T, F>(data: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if use_parallel(data.len()) {
        data.par_iter_mut().enumerate().for_each(|(i, x)| f(i, x));
        return;
    }
    data.iter_mut().enumerate().for_each(|(i, x)| f(i, x));
}

/// Splits `data` into blocks of `2 * half` elements and calls
/// `f(block_start, lower_half, upper_half)` on each. The two halves pair
/// index `i` with `i + half`, i.e. the states that differ in one bit.
pub fn for_each_pair_block<T, F>(data: &mut [T], half: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T], &mut [T]) + Sync + Send,
{
    let block = 2 * half;
    debug_assert!(half > 0 && data.len().is_multiple_of(block));
    #[cfg(feature = "parallel")]
    if use_parallel(data.len()) {
        data.par_chunks_mut(block).enumerate().for_each(|(k, chunk)| {
            let (lo, hi) = chunk.split_at_mut(half);
            f(k * block, lo, hi)
        });
        return;
    }
    data.chunks_mut(block).enumerate().for_each(|(k, chunk)| {
        let (lo, hi) = chunk.split_at_mut(half);
        f(k * block, lo, hi)
    });
}

/// Order-preserving map over independent work items (sweeps, batches).
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if items.len() > 1 && rayon::current_num_threads() > 1 {
        return items.into_par_iter().map(f).collect();
    }
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_blocks_cover_partners() {
        for len in [8usize, 1 << 15] {
            let mut v: Vec<usize> = vec![0; len];
            for_each_pair_block(&mut v, 2, |base, lo, hi| {
                for j in 0..lo.len() {
                    lo[j] = base + j;
                    hi[j] = base + j + 2;
                }
            });
            assert!(v.iter().enumerate().all(|(i, &x)| i == x));
        }
    }

    #[test]
    fn map_preserves_order() {
        let out = map((0..1000).collect(), |x: u32| x * 2);
        assert_eq!(out, (0..1000).map(|x| x * 2).collect::<Vec<_>>());
    }
}
