//! Finite truncations of the power monoids and exhaustive automorphism
//! search over them.
//!
//! Search algorithms implement [`AutomorphismSearch`] and are looked up by
//! name in a [`StrategyRegistry`]:
//!
//! | name         | algorithm                                              |
//! |--------------|--------------------------------------------------------|
//! | `refine`     | colour refinement + backtracking with closure (default) |
//! | `refine-par` | the same, root branches in parallel                    |
//! | `brute`      | every permutation, tiny monoids only                   |

mod backtrack;
mod brute;
pub mod checks;
mod monoid;
mod pipeline;
pub mod refine;
mod strategy;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::config::Limits;
use crate::error::Result;

pub use backtrack::{ParallelRefineBacktrack, RefineBacktrack};
pub use brute::BruteForce;
pub use checks::Permutation;
pub use monoid::{format_mask, mask_to_vec, TruncatedPowerMonoid, Variant, MAX_WINDOW, TABLE_LIMIT};
pub use pipeline::{proof_pipeline, ProofPipelineReport, StepVerdict};
pub use strategy::{AutomorphismSearch, SearchOutcome, StrategyRegistry, DEFAULT_STRATEGY};

/// All automorphisms of `m`, with the default strategy and timeout.
pub fn find_automorphisms(m: &TruncatedPowerMonoid) -> Result<SearchOutcome> {
    find_automorphisms_with(m, DEFAULT_STRATEGY, Some(Limits::global().timeout))
}

pub fn find_automorphisms_with(
    m: &TruncatedPowerMonoid,
    strategy: &str,
    timeout: Option<Duration>,
) -> Result<SearchOutcome> {
    let registry = StrategyRegistry::with_builtins();
    let deadline = timeout.map(|t| Instant::now() + t);
    registry.get(strategy)?.search(m, deadline)
}

pub fn find_cancellative(m: &TruncatedPowerMonoid) -> Vec<usize> {
    m.find_cancellative()
}

/// JSON report for a search; permutations are element-index arrays.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub schema: &'static str,
    pub ground: String,
    pub window: usize,
    pub variant: Variant,
    pub elements: Vec<String>,
    pub strategy: &'static str,
    pub complete: bool,
    pub nodes: u64,
    pub automorphisms: Vec<Permutation>,
}

impl SearchReport {
    pub fn new(m: &TruncatedPowerMonoid, out: &SearchOutcome) -> Self {
        Self {
            schema: "1",
            ground: m.ground().to_string(),
            window: m.window(),
            variant: m.variant(),
            elements: (0..m.len()).map(|i| m.label(i)).collect(),
            strategy: out.strategy,
            complete: out.complete,
            nodes: out.nodes,
            automorphisms: out.automorphisms.clone(),
        }
    }
}
