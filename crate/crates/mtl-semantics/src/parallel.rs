//! Worker-pool sizing shared by the parallel searches.

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "MTL_WORKERS";

/// Worker count requested through [`WORKERS_ENV`], if set to a positive integer.
pub fn requested_workers() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Runs `op` on a pool sized by [`WORKERS_ENV`], or on the global pool when unset.
pub fn with_workers<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    match requested_workers().and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(op),
        None => op(),
    }
}
