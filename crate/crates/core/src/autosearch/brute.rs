//! Exhaustive enumeration of all permutations. Only usable on tiny monoids,
//! where it serves as a reference for the pruned searches.

use std::time::Instant;

use crate::error::{Error, Result};

use super::checks::is_automorphism;
use super::monoid::TruncatedPowerMonoid;
use super::strategy::{AutomorphismSearch, SearchOutcome};

pub struct BruteForce {
    /// Largest element count accepted (`n!` permutations are tried).
    pub max_elements: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self { max_elements: 9 }
    }
}

/// Next permutation in lexicographic order; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl AutomorphismSearch for BruteForce {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn description(&self) -> &'static str {
        "tries every permutation; reference implementation for tiny monoids"
    }

    fn search(&self, m: &TruncatedPowerMonoid, deadline: Option<Instant>) -> Result<SearchOutcome> {
        if m.len() > self.max_elements {
            return Err(Error::CapExceeded {
                what: "element count for brute force",
                actual: m.len(),
                cap: self.max_elements,
            });
        }
        let mut p: Vec<usize> = (0..m.len()).collect();
        let mut found = Vec::new();
        let mut nodes = 0u64;
        let mut complete = true;
        loop {
            nodes += 1;
            if nodes.is_multiple_of(4096) && deadline.is_some_and(|d| Instant::now() >= d) {
                complete = false;
                break;
            }
            if is_automorphism(m, &p) {
                found.push(p.clone());
            }
            if !next_permutation(&mut p) {
                break;
            }
        }
        Ok(SearchOutcome {
            automorphisms: found,
            complete,
            strategy: self.name(),
            nodes,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_enumerated_in_order() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }

    #[test]
    fn refuses_large_monoids() {
        let n = crate::numsgp::NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 4, super::super::Variant::P0).unwrap();
        assert!(matches!(BruteForce::default().search(&m, None), Err(Error::CapExceeded { .. })));
    }
}
