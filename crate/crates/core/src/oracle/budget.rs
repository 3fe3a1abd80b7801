use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// Caps for an exhaustive search. Exceeding any cap aborts the search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub max_spanning_trees: u64,
    pub max_tuples: u64,
    pub time_cap: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_spanning_trees: 1_000_000,
            max_tuples: 100_000_000,
            time_cap: Duration::from_secs(60),
        }
    }
}

impl SearchBudget {
    pub fn new(max_spanning_trees: u64, max_tuples: u64, time_cap: Duration) -> Result<Self> {
        if max_spanning_trees == 0 || max_tuples == 0 || time_cap.is_zero() {
            return domain("budget caps must be positive");
        }
        Ok(SearchBudget {
            max_spanning_trees,
            max_tuples,
            time_cap,
        })
    }
}

/// Parses `trees:N,tuples:N,seconds:S`; omitted keys keep their defaults.
impl FromStr for SearchBudget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = SearchBudget::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let Some((name, value)) = part.split_once(':') else {
                return domain(format!("budget entry `{part}` is not key:value"));
            };
            let bad = || Error::Domain(format!("budget value `{value}` for `{name}` is invalid"));
            match name.trim() {
                "trees" => b.max_spanning_trees = value.trim().parse().map_err(|_| bad())?,
                "tuples" => b.max_tuples = value.trim().parse().map_err(|_| bad())?,
                "seconds" => {
                    let secs: f64 = value.trim().parse().map_err(|_| bad())?;
                    if !secs.is_finite() || secs <= 0.0 {
                        return Err(bad());
                    }
                    b.time_cap = Duration::from_secs_f64(secs);
                }
                other => return domain(format!("unknown budget key `{other}`")),
            }
        }
        SearchBudget::new(b.max_spanning_trees, b.max_tuples, b.time_cap)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub trees: u64,
    pub tuples: u64,
    pub seconds: f64,
}

/// Shared counters for one search; safe to use from worker threads.
pub(crate) struct Tracker {
    budget: SearchBudget,
    start: Instant,
    trees: AtomicU64,
    tuples: AtomicU64,
    aborted: AtomicBool,
}

impl Tracker {
    pub fn new(budget: SearchBudget) -> Tracker {
        Tracker {
            budget,
            start: Instant::now(),
            trees: AtomicU64::new(0),
            tuples: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    fn exceeded(&self, what: &str) -> Error {
        self.aborted.store(true, Ordering::Relaxed);
        Error::BudgetExceeded(format!(
            "{what} (trees {}, tuples {}, {:.1}s)",
            self.trees.load(Ordering::Relaxed),
            self.tuples.load(Ordering::Relaxed),
            self.start.elapsed().as_secs_f64()
        ))
    }

    fn check_time(&self, count: u64) -> Result<()> {
        if self.aborted.load(Ordering::Relaxed) {
            return Err(self.exceeded("search aborted"));
        }
        if count.is_multiple_of(1024) && self.start.elapsed() > self.budget.time_cap {
            return Err(self.exceeded("time cap reached"));
        }
        Ok(())
    }

    pub fn tree(&self) -> Result<()> {
        let c = self.trees.fetch_add(1, Ordering::Relaxed) + 1;
        if c > self.budget.max_spanning_trees {
            return Err(self.exceeded("spanning-tree cap reached"));
        }
        self.check_time(c)
    }

    pub fn tuple(&self) -> Result<()> {
        let c = self.tuples.fetch_add(1, Ordering::Relaxed) + 1;
        if c > self.budget.max_tuples {
            return Err(self.exceeded("tuple cap reached"));
        }
        self.check_time(c)
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            trees: self.trees.load(Ordering::Relaxed),
            tuples: self.tuples.load(Ordering::Relaxed),
            seconds: self.start.elapsed().as_secs_f64(),
        }
    }
}
