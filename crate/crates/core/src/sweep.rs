//! Sweep helpers: map a check over a parameter grid, data-parallel when the
//! `parallel` feature is enabled.  The explicit sequential and parallel
//! entry points stay public so the bench suite can compare them.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn sweep_seq<T, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn sweep_par<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

/// Dispatch on the feature flag.
pub fn sweep<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        sweep_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_seq(items, f)
    }
}

/// Run a fallible check over a grid and collect the failure messages.
pub fn failures<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Result<(), String> + Sync + Send,
) -> Vec<String> {
    sweep(items, |t| check(t).err())
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_dispatched_agree() {
        let items: Vec<i64> = (0..100).collect();
        let f = |x: &i64| x * x;
        assert_eq!(sweep_seq(&items, f), sweep(&items, f));
    }

    #[test]
    fn failures_are_collected_in_order() {
        let items: Vec<i64> = (0..10).collect();
        let out = failures(&items, |x| {
            if x % 3 == 0 {
                Err(format!("bad {x}"))
            } else {
                Ok(())
            }
        });
        assert_eq!(out, vec!["bad 0", "bad 3", "bad 6", "bad 9"]);
    }
}
