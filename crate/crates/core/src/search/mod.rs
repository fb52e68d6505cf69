//! Budgeted, seeded backtracking for nested points, Banff families and
//! good 16-tuples. Every success is re-verified by the matching verifier.

mod family;
mod nesting;
mod tuple;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use family::{find_brdf, BrdfStrategy};
pub use nesting::{find_base_nesting, BaseNesting, NestingState};
pub use tuple::find_16tuple;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const DEFAULT_NESTING_BUDGET: u64 = 1_000_000;

/// Node budget and optional seed; without a seed candidates are tried in
/// ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    pub seed: Option<u64>,
}

impl SearchConfig {
    pub fn new(budget: u64) -> Self {
        Self { budget, seed: None }
    }

    pub fn seeded(budget: u64, seed: u64) -> Self {
        Self { budget, seed: Some(seed) }
    }

    fn rng(&self) -> Option<ChaCha8Rng> {
        self.seed.map(ChaCha8Rng::seed_from_u64)
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome<T> {
    Found { value: T, nodes: u64 },
    /// `exhausted` means the whole tree was explored, so no solution of
    /// the searched shape exists.
    NotFound { nodes: u64, exhausted: bool },
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found { value, .. } => Some(value),
            Outcome::NotFound { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            Outcome::Found { nodes, .. } | Outcome::NotFound { nodes, .. } => *nodes,
        }
    }
}

/// Node counter shared by the engines.
struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    /// Counts one node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }

    fn spent(&self) -> bool {
        self.used >= self.limit
    }
}

fn order<T>(mut items: Vec<T>, rng: &mut Option<ChaCha8Rng>) -> Vec<T> {
    if let Some(r) = rng {
        items.shuffle(r);
    }
    items
}
