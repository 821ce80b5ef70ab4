//! Automorphism search algorithms behind a common trait, looked up by name.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};

use super::checks::Permutation;
use super::monoid::TruncatedPowerMonoid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Automorphisms found, sorted lexicographically.
    pub automorphisms: Vec<Permutation>,
    /// False when the deadline interrupted the search.
    pub complete: bool,
    pub strategy: &'static str,
    /// Search-tree nodes visited (permutations tried, for brute force).
    pub nodes: u64,
}

pub trait AutomorphismSearch: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn search(&self, m: &TruncatedPowerMonoid, deadline: Option<Instant>) -> Result<SearchOutcome>;
}

pub struct StrategyRegistry {
    strategies: BTreeMap<&'static str, Box<dyn AutomorphismSearch>>,
}

pub const DEFAULT_STRATEGY: &str = "refine";

impl StrategyRegistry {
    pub fn empty() -> Self {
        Self {
            strategies: BTreeMap::new(),
        }
    }

    /// Registry holding every built-in strategy.
    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(super::backtrack::RefineBacktrack));
        r.register(Box::new(super::backtrack::ParallelRefineBacktrack));
        r.register(Box::new(super::brute::BruteForce::default()));
        r
    }

    /// Adds a strategy, replacing any previous one with the same name.
    pub fn register(&mut self, s: Box<dyn AutomorphismSearch>) {
        self.strategies.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn AutomorphismSearch> {
        self.strategies
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownStrategy(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.strategies.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn AutomorphismSearch> {
        self.strategies.values().map(|b| b.as_ref())
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
