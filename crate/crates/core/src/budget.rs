//! Global node budget shared by every exhaustive enumeration.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: usize = 200_000;

static LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_BUDGET);

pub fn set_limit(n: usize) {
    LIMIT.store(n.max(1), Ordering::SeqCst);
}

pub fn limit() -> usize {
    LIMIT.load(Ordering::SeqCst)
}

/// Counts search nodes of one enumeration against the global limit.
#[derive(Debug)]
pub struct Counter {
    what: &'static str,
    used: usize,
    limit: usize,
}

impl Counter {
    pub fn new(what: &'static str) -> Counter {
        Counter { what, used: 0, limit: limit() }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.add(1)
    }

    pub fn add(&mut self, n: usize) -> Result<()> {
        self.used += n;
        if self.used > self.limit {
            return Err(Error::SizeLimitExceeded { what: self.what.to_string(), limit: self.limit });
        }
        Ok(())
    }

    pub fn used(&self) -> usize {
        self.used
    }
}
