//! Work limits for exhaustive searches.
//!
//! Every enumerator in this crate walks a finite but potentially large search
//! space. A [`SearchLimit`] bounds that walk two ways: a hard cap on the
//! number of items produced (overflow is an explicit error, never a silent
//! truncation) and an optional wall-clock deadline used by the sweep harness
//! to mark cells as skipped instead of hanging.

use std::time::Instant;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct SearchLimit {
    max_items: u64,
    deadline: Option<Instant>,
}

/// Default item cap; desk-scale parameters stay far below this.
pub const DEFAULT_MAX_ITEMS: u64 = 50_000_000;

impl SearchLimit {
    pub fn new(max_items: u64, deadline: Option<Instant>) -> Self {
        Self { max_items, deadline }
    }

    pub fn unbounded() -> Self {
        Self { max_items: u64::MAX, deadline: None }
    }

    pub fn with_deadline(deadline: Instant) -> Self {
        Self { max_items: DEFAULT_MAX_ITEMS, deadline: Some(deadline) }
    }

    pub fn max_items(&self) -> u64 {
        self.max_items
    }

    /// Count one produced item. `counter` is owned by the enumerator.
    /// The deadline is polled every 1024 items to keep the check cheap.
    pub fn tick(&self, counter: &mut u64, what: &'static str) -> Result<()> {
        *counter += 1;
        if *counter > self.max_items {
            return Err(Error::Overflow { what, cap: self.max_items });
        }
        if *counter % 1024 == 0 {
            self.check_deadline()?;
        }
        Ok(())
    }

    pub fn check_deadline(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::BudgetExceeded);
            }
        }
        Ok(())
    }
}

impl Default for SearchLimit {
    fn default() -> Self {
        Self { max_items: DEFAULT_MAX_ITEMS, deadline: None }
    }
}
