//! Data-parallel helpers.
//!
//! Every batch loop in the crate goes through [`map_collect`]. With the
//! `parallel` feature enabled (the default) it fans out over rayon's global
//! pool unless the process-wide mode has been switched to
//! [`Execution::Sequential`]; without the feature it is a plain iterator map.
//! Results always come back in input order, so reductions stay deterministic.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

static MODE: AtomicU8 = AtomicU8::new(1);

pub fn set_execution(mode: Execution) {
    MODE.store(
        match mode {
            Execution::Sequential => 0,
            Execution::Parallel => 1,
        },
        Ordering::Relaxed,
    );
}

pub fn execution() -> Execution {
    if cfg!(feature = "parallel") && MODE.load(Ordering::Relaxed) == 1 {
        Execution::Parallel
    } else {
        Execution::Sequential
    }
}

pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if execution() == Execution::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}
