//! Abort rails for the exponential searches.

use std::time::Instant;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Interrupt {
    #[error("branch budget exhausted")]
    NodeBudget,
    #[error("deadline exceeded")]
    Timeout,
}

/// Optional caps checked inside branch loops; `None` means unbounded.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub const UNBOUNDED: SearchLimits = SearchLimits { max_nodes: None, deadline: None };

    /// Count one search node and fail on an exceeded cap.
    pub fn tick(&self, nodes: &mut u64) -> Result<(), Interrupt> {
        *nodes += 1;
        if let Some(max) = self.max_nodes {
            if *nodes > max {
                return Err(Interrupt::NodeBudget);
            }
        }
        if let Some(deadline) = self.deadline {
            if *nodes % 256 == 0 && Instant::now() > deadline {
                return Err(Interrupt::Timeout);
            }
        }
        Ok(())
    }
}
