//! Seeded random instances for the property suites.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numsgp::NumericalSemigroup;
use crate::setrep::PSet;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generators of the grounds exercised by the acceptance suite.
pub const GROUND_GENERATORS: [&[u64]; 4] = [&[1], &[2, 3], &[3, 5], &[3, 5, 7]];

pub fn grounds() -> Vec<Arc<NumericalSemigroup>> {
    GROUND_GENERATORS
        .iter()
        .map(|g| NumericalSemigroup::from_generators(g, true).unwrap().shared())
        .collect()
}

pub fn members_in(ground: &NumericalSemigroup, lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).filter(|&n| ground.contains(n as i64)).collect()
}

/// A uniformly chosen member of `H ∩ [lo, hi]`, if any.
pub fn member<R: Rng>(rng: &mut R, ground: &NumericalSemigroup, lo: usize, hi: usize) -> Option<usize> {
    members_in(ground, lo, hi).choose(rng).copied()
}

/// A finite subset of `H ∩ [0, span]` with between 1 and `max_size`
/// elements, containing `0` when asked.
pub fn finite<R: Rng>(
    rng: &mut R,
    ground: &Arc<NumericalSemigroup>,
    max_size: usize,
    span: usize,
    with_zero: bool,
) -> PSet {
    let mut pool = members_in(ground, 1, span);
    pool.shuffle(rng);
    let size = rng.gen_range(1..=max_size.max(1));
    let mut elems: BTreeSet<usize> = BTreeSet::new();
    if with_zero || pool.is_empty() {
        elems.insert(0);
    }
    for p in pool {
        if elems.len() >= size {
            break;
        }
        elems.insert(p);
    }
    PSet::finite(ground, elems).expect("members of H")
}

/// A finite set or an eventually full one, with everything below `span`.
pub fn pset<R: Rng>(rng: &mut R, ground: &Arc<NumericalSemigroup>, span: usize, with_zero: bool) -> PSet {
    let head = finite(rng, ground, 6, span, with_zero);
    if rng.gen_bool(0.5) {
        return head;
    }
    let tau = rng.gen_range(0..=span + 4);
    let elems: Vec<usize> = head.head().iter().collect();
    PSet::tail(ground, elems, tau).expect("members of H")
}

/// An idempotent containing `0`: a submonoid generated by a few members
/// of `H`, cut off at a random `k` and filled with `H ∩ Z≥k`.
pub fn idempotent<R: Rng>(rng: &mut R, ground: &Arc<NumericalSemigroup>, span: usize) -> PSet {
    let gens: Vec<usize> = (0..rng.gen_range(0..=3))
        .filter_map(|_| member(rng, ground, 1, span))
        .collect();
    let k = rng.gen_range(0..=span + 4);
    let mut closure = BTreeSet::from([0usize]);
    let mut work = vec![0usize];
    while let Some(x) = work.pop() {
        for &g in &gens {
            if x + g < k && closure.insert(x + g) {
                work.push(x + g);
            }
        }
    }
    PSet::tail(ground, closure, k).expect("members of H")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic() {
        let h = &grounds()[2];
        let draw = |seed| {
            let mut r = rng(seed);
            (0..5).map(|_| pset(&mut r, h, 12, true).to_string()).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
    }

    #[test]
    fn idempotents_are_idempotent() {
        let mut r = rng(3);
        for h in grounds() {
            for _ in 0..20 {
                let e = idempotent(&mut r, &h, 15);
                assert!(e.member(0));
                assert_eq!(e.add(&e).unwrap(), e, "{e}");
            }
        }
    }
}
