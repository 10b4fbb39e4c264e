//! Order-preserving map over independent work items, parallel when the
//! `parallel` feature is enabled.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential without the `parallel` feature.
    #[default]
    Parallel,
}

/// `items.iter().map(f)` with results in input order.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
