//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it they are plain iterators. Results keep input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn filter<T: Sync + Clone + Send>(items: &[T], f: impl Fn(&T) -> bool + Sync + Send) -> Vec<T> {
    items.par_iter().filter(|x| f(x)).cloned().collect()
}

#[cfg(not(feature = "parallel"))]
pub fn filter<T: Sync + Clone + Send>(items: &[T], f: impl Fn(&T) -> bool + Sync + Send) -> Vec<T> {
    items.iter().filter(|x| f(x)).cloned().collect()
}

#[cfg(feature = "parallel")]
pub fn flat_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Vec<R> + Sync + Send) -> Vec<R> {
    items.par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Vec<R> + Sync + Send) -> Vec<R> {
    items.iter().flat_map(f).collect()
}

/// First item (in input order) mapped to `Some`.
#[cfg(feature = "parallel")]
pub fn find_map_first<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Option<R> {
    items.par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
pub fn find_map_first<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Option<R> {
    items.iter().find_map(f)
}

#[cfg(feature = "parallel")]
pub fn all<T: Sync>(items: &[T], f: impl Fn(&T) -> bool + Sync + Send) -> bool {
    items.par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
pub fn all<T: Sync>(items: &[T], f: impl Fn(&T) -> bool + Sync + Send) -> bool {
    items.iter().all(f)
}

/// Whether this build runs on rayon.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
