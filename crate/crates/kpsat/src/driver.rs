//! Runs the exact search with a wall-clock deadline and optional parallel
//! level expansion.

use std::time::{Duration, Instant};

use kpsat_core::canon::SmallGraph;
use kpsat_core::search::{solve, Hooks, SearchProblem, SearchResult};
use rayon::prelude::*;

pub const DEFAULT_TIME_LIMIT: Duration = Duration::from_secs(600);

#[derive(Debug, Clone)]
pub struct Limits {
    pub time_limit: Option<Duration>,
    /// 0 means one thread per core; 1 runs sequentially.
    pub threads: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            time_limit: Some(DEFAULT_TIME_LIMIT),
            threads: 1,
        }
    }
}

type Children = Vec<(u128, SmallGraph)>;

pub fn run_search(
    problem: &SearchProblem,
    enumerate: bool,
    limits: &Limits,
) -> kpsat_core::Result<(SearchResult, Duration)> {
    let start = Instant::now();
    let deadline = limits.time_limit.map(|d| start + d);
    let stop = move || deadline.is_some_and(|d| Instant::now() >= d);
    let pool = (limits.threads != 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(limits.threads)
            .build()
            .expect("thread pool")
    });
    let map = |level: &[SmallGraph], f: &(dyn Fn(&SmallGraph) -> Children + Sync)| -> Vec<Children> {
        let pool = pool.as_ref().expect("parallel mode");
        pool.install(|| level.par_iter().map(f).collect())
    };
    let hooks = Hooks {
        interrupt: Some(&stop),
        level_map: if pool.is_some() { Some(&map) } else { None },
    };
    let result = solve(problem, enumerate, &hooks)?;
    Ok((result, start.elapsed()))
}
