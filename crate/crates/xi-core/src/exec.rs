//! Data-parallel sweeps over parameter grids.
//!
//! With the `parallel` feature the work is spread over a rayon pool; without
//! it every strategy runs on the calling thread. Results always come back in
//! input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// `jobs = None` uses rayon's default worker count.
    Parallel { jobs: Option<usize> },
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel { jobs: None }
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// `jobs = 1` means sequential, anything else parallel.
    pub fn with_jobs(jobs: Option<usize>) -> Self {
        match jobs {
            Some(1) => Exec::Sequential,
            Some(0) | None => Exec::Parallel { jobs: None },
            Some(n) => Exec::Parallel { jobs: Some(n) },
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Exec::Parallel { .. })
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        self.map_init(items, || (), |_, t| f(t))
    }

    /// Like [`Exec::map`], with per-worker scratch state built by `init`.
    pub fn map_init<T, S, R, I, F>(&self, items: &[T], init: I, f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        I: Fn() -> S + Sync + Send,
        F: Fn(&mut S, &T) -> R + Sync + Send,
    {
        match *self {
            Exec::Sequential => {
                let mut state = init();
                items.iter().map(|t| f(&mut state, t)).collect()
            }
            Exec::Parallel { jobs } => par_map_init(jobs, items, init, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map_init<T, S, R, I, F>(jobs: Option<usize>, items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || items.par_iter().map_init(&init, |s, t| f(s, t)).collect();
    match jobs {
        None => run(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("failed to build thread pool")
            .install(run),
    }
}

#[cfg(not(feature = "parallel"))]
fn par_map_init<T, S, R, I, F>(_jobs: Option<usize>, items: &[T], init: I, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &T) -> R + Sync + Send,
{
    let mut state = init();
    items.iter().map(|t| f(&mut state, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let items: Vec<u64> = (0..500).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        for exec in [Exec::Parallel { jobs: None }, Exec::Parallel { jobs: Some(3) }] {
            assert_eq!(exec.map(&items, |x| x * x), seq);
        }
    }

    #[test]
    fn with_jobs() {
        assert_eq!(Exec::with_jobs(Some(1)), Exec::Sequential);
        assert_eq!(Exec::with_jobs(Some(4)), Exec::Parallel { jobs: Some(4) });
        assert_eq!(Exec::with_jobs(None), Exec::Parallel { jobs: None });
    }
}
