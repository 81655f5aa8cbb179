use crate::error::{Error, Result};

/// Limits for the exact searches.
///
/// `search_nodes` caps the branch-and-bound nodes of a single coloring,
/// clique or bi-hole solve. `separators` caps how many minimal separators an
/// enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub search_nodes: u64,
    pub separators: usize,
}

impl Budget {
    pub const DEFAULT: Budget = Budget { search_nodes: 50_000_000, separators: 250_000 };

    pub const fn new(search_nodes: u64, separators: usize) -> Self {
        Budget { search_nodes, separators }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Per-call node counter.
pub(crate) struct Ticker {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Ticker {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        Ticker { used: 0, limit, what }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { what: self.what, limit: self.limit });
        }
        Ok(())
    }
}
