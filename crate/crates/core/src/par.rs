//! Data-parallel helpers with a runtime switch to sequential execution.
//!
//! Every helper returns the same result in either mode: searches report the
//! lowest matching index, maps preserve order.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

/// Enables or disables parallel execution (no effect without the feature).
pub fn set_parallel(on: bool) {
    PARALLEL.store(on && cfg!(feature = "parallel"), Ordering::Relaxed);
}

pub fn is_parallel() -> bool {
    PARALLEL.load(Ordering::Relaxed)
}

pub fn map<T, F>(range: std::ops::Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    range.map(f).collect()
}

/// Lowest `i` in the range with `f(i) = Some(_)`.
pub fn find_first<T, F>(range: std::ops::Range<u64>, f: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return range.into_par_iter().filter_map(|i| f(i).map(|v| (i, v))).find_first(|_| true);
    }
    range.into_iter().find_map(|i| f(i).map(|v| (i, v)))
}

pub fn count<F>(range: std::ops::Range<u64>, f: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() {
        return range.into_par_iter().filter(|&i| f(i)).count() as u64;
    }
    range.filter(|&i| f(i)).count() as u64
}

/// Concatenation of per-index outputs, in index order.
pub fn flat_map<T, F>(range: std::ops::Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Vec<T> + Sync + Send,
{
    map(range, f).into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |i: u64| if i % 7 == 3 && i > 20 { Some(i * 2) } else { None };
        let a = find_first(0..1000, f);
        let c = count(0..1000, |i| i % 3 == 0);
        let m = map(0..50, |i| i * i);
        set_parallel(false);
        assert_eq!(find_first(0..1000, f), a);
        assert_eq!(count(0..1000, |i| i % 3 == 0), c);
        assert_eq!(map(0..50, |i| i * i), m);
        set_parallel(true);
        assert_eq!(a, Some((24, 48)));
    }
}
