//! Size guard for the exhaustive searches.
//!
//! Exact colouring searches (extremal colourings, enumeration, oracle
//! extrema) are exponential. They refuse graphs above a vertex limit rather
//! than silently degrading to heuristics.

use crate::error::{Error, Result};

/// Environment variable that overrides the default vertex limit.
pub const BUDGET_ENV: &str = "CHROMIND_BUDGET_VERTICES";

/// Default vertex limit for exhaustive searches.
pub const DEFAULT_MAX_VERTICES: usize = 25;

/// Hard ceiling imposed by the 64-bit vertex-set representation.
pub const MAX_REPRESENTABLE_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Budget {
    pub fn new(max_vertices: usize) -> Self {
        Budget { max_vertices }
    }

    /// Default budget, overridden by `CHROMIND_BUDGET_VERTICES` when it holds
    /// a positive integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub fn check(&self, vertices: usize) -> Result<()> {
        let limit = self.max_vertices.min(MAX_REPRESENTABLE_VERTICES);
        if vertices > limit {
            return Err(Error::BudgetExceeded { vertices, limit });
        }
        Ok(())
    }
}
