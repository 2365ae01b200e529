//! Hamiltonicity searches and the base-design hill climb.

pub mod hamilton;
pub mod hill_climb;
pub mod lollipop;

use serde::Serialize;

/// Limits for the searches in this module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    /// Backtracking nodes per Hamilton search.
    pub max_nodes: u64,
    /// Hill-climbing moves, summed over restarts.
    pub max_iters: u64,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 2_000_000, max_iters: 5_000_000, seed: DEFAULT_SEED }
    }
}

/// Result of a bounded exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted.
    ProvenNone,
    /// The budget ran out first; nothing is known.
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

pub use hamilton::{count_cycles_through_edge, enumerate_hamilton_cycles, find_hamilton_cycle, find_hamilton_path};
pub use hill_climb::hill_climb_tts;
pub use lollipop::find_alternate_cycle;
