//! Executable witnesses for the combinatorial facts behind the rigidity of
//! power monoids of numerical semigroups.
//!
//! Every construction here is checked with the exact sumset kernel; a
//! [`WitnessReport`] records the constructed sets together with the verdict
//! for each.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitSet;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::setrep::{PSet, PSetJson};

/// Largest `|A|` accepted by [`lemma_q_witnesses`].
pub const MAX_Q_BASE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub witnesses: Vec<PSet>,
    pub verified: Vec<bool>,
    /// The lower bound on the number of solutions that the construction
    /// is meant to attain.
    pub bound_claimed: usize,
    pub distinct_count: usize,
}

impl WitnessReport {
    fn new(witnesses: Vec<PSet>, verified: Vec<bool>, bound_claimed: usize) -> Self {
        let distinct_count = witnesses.iter().collect::<HashSet<_>>().len();
        Self {
            witnesses,
            verified,
            bound_claimed,
            distinct_count,
        }
    }

    pub fn all_verified(&self) -> bool {
        self.verified.iter().all(|&v| v)
    }

    /// All witnesses verified, pairwise distinct, and at least as many as
    /// claimed.
    pub fn holds(&self) -> bool {
        self.all_verified()
            && self.distinct_count == self.witnesses.len()
            && self.distinct_count >= self.bound_claimed
    }

    pub fn to_json(&self) -> WitnessReportJson {
        WitnessReportJson {
            schema: "1",
            witnesses: self
                .witnesses
                .iter()
                .zip(&self.verified)
                .map(|(w, &verified)| WitnessJson {
                    literal: w.to_string(),
                    set: w.to_json(),
                    verified,
                })
                .collect(),
            bound_claimed: self.bound_claimed,
            distinct_count: self.distinct_count,
            holds: self.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub literal: String,
    pub set: PSetJson,
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReportJson {
    pub schema: &'static str,
    pub witnesses: Vec<WitnessJson>,
    pub bound_claimed: usize,
    pub distinct_count: usize,
    pub holds: bool,
}

pub fn is_idempotent(e: &PSet) -> Result<bool> {
    Ok(e.add(e)? == *e)
}

fn require_zero_in_ground(ground: &NumericalSemigroup) -> Result<()> {
    if ground.includes_zero() {
        Ok(())
    } else {
        Err(Error::precondition(format!("{ground} does not contain 0")))
    }
}

fn require_member_of_ground(ground: &NumericalSemigroup, y: usize) -> Result<()> {
    if ground.contains(y as i64) {
        Ok(())
    } else {
        Err(Error::GroundViolation {
            element: y as i64,
            ground: ground.describe(),
        })
    }
}

/// Decides `{0, y} + E = E` for an idempotent `E` containing `0`, which
/// holds exactly when `y ∈ E`.
pub fn doubleton_absorb_test(e: &PSet, y: usize) -> Result<bool> {
    let ground = e.ground();
    require_zero_in_ground(ground)?;
    require_member_of_ground(ground, y)?;
    if !e.member(0) {
        return Err(Error::precondition(format!("{e} does not contain 0")));
    }
    if !is_idempotent(e)? {
        return Err(Error::precondition(format!("{e} is not idempotent")));
    }
    let pair = PSet::finite(ground, [0, y])?;
    Ok(pair.add(e)? == *e)
}

/// The halo sets `H_y = {0} ∪ (H ∩ Z≥y)` and `H_y^* = H_y \ {y}`.
pub fn halo_pair(ground: &Arc<NumericalSemigroup>, y: usize) -> Result<(PSet, PSet)> {
    require_zero_in_ground(ground)?;
    if y == 0 {
        return Err(Error::precondition("halo sets need a non-zero y"));
    }
    require_member_of_ground(ground, y)?;
    Ok((PSet::tail(ground, [0], y)?, PSet::tail(ground, [0], y + 1)?))
}

/// Decides `H_y + X = H_y^* + X`, which holds exactly when `y ∈ X`.
pub fn member_by_halo(x: &PSet, y: usize) -> Result<bool> {
    if !x.member(0) {
        return Err(Error::precondition(format!("{x} does not contain 0")));
    }
    let (hy, hy_star) = halo_pair(x.ground(), y)?;
    Ok(hy.add(x)? == hy_star.add(x)?)
}

fn require_finite(a: &PSet, what: &str) -> Result<()> {
    if a.is_finite() {
        Ok(())
    } else {
        Err(Error::precondition(format!("{what} must be finite, got {a}")))
    }
}

/// For every `B ⊆ A \ {0}` builds `Q = A^{n-1} \ B` and checks
/// `Q + A = A^n`. There are `2^{|A|-1}` such `Q`, all distinct.
pub fn lemma_q_witnesses(a: &PSet, n: usize) -> Result<WitnessReport> {
    require_finite(a, "A")?;
    if !a.member(0) {
        return Err(Error::precondition(format!("{a} does not contain 0")));
    }
    if n < 3 {
        return Err(Error::precondition(format!("n must be at least 3, got {n}")));
    }
    let size = a.head().len();
    if size > MAX_Q_BASE {
        return Err(Error::CapExceeded {
            what: "|A|",
            actual: size,
            cap: MAX_Q_BASE,
        });
    }
    let target = a.power(n)?;
    let base = a.power(n - 1)?;
    let nonzero: Vec<usize> = a.head().iter().filter(|&x| x != 0).collect();

    let mut witnesses = Vec::with_capacity(1 << nonzero.len());
    let mut verified = Vec::with_capacity(1 << nonzero.len());
    for mask in 0u32..(1 << nonzero.len()) {
        let removed: BitSet = nonzero
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &x)| x)
            .collect();
        let mut q = base.head().clone();
        q.difference_with(&removed);
        let q = PSet::from_bits(a.ground(), q, None)?;
        verified.push(q.add(a)? == target);
        witnesses.push(q);
    }
    Ok(WitnessReport::new(witnesses, verified, 1 << nonzero.len()))
}

/// All finite `X ⊆ H` with `X + A = B`.
///
/// Any solution satisfies `X + a ⊆ B` for every `a ∈ A`, so it lies inside
/// `D = ⋂_a (B - a) ∩ H`; conversely every subset of `D` already satisfies
/// `X + A ⊆ B`, and only the reverse inclusion needs testing. The search
/// enumerates the non-empty subsets of `D`, refusing when `|D|` exceeds the
/// configured subset cap.
pub fn enumerate_translate_solutions(a: &PSet, b: &PSet) -> Result<Vec<PSet>> {
    enumerate_translate_solutions_capped(a, b, Limits::global().subset_cap)
}

pub fn enumerate_translate_solutions_capped(a: &PSet, b: &PSet, cap: usize) -> Result<Vec<PSet>> {
    a.check_same_ground(b)?;
    require_finite(a, "A")?;
    require_finite(b, "B")?;
    let ground = a.ground();
    let a_min = a.min();
    let candidates: Vec<usize> = b
        .head()
        .iter()
        .filter(|&t| t >= a_min)
        .map(|t| t - a_min)
        .filter(|&d| ground.contains(d as i64))
        .filter(|&d| a.head().iter().all(|x| b.head().contains(d + x)))
        .collect();
    if candidates.len() > cap.min(63) {
        return Err(Error::CapExceeded {
            what: "candidate pool |D|",
            actual: candidates.len(),
            cap: cap.min(63),
        });
    }
    let want = b.head().len();
    let mut masks: Vec<u64> = (1u64..(1u64 << candidates.len()))
        .into_par_iter()
        .filter(|&mask| {
            let x: BitSet = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &d)| d)
                .collect();
            x.sumset(a.head(), None).len() == want
        })
        .collect();
    masks.sort_unstable();
    let mut out: Vec<PSet> = masks
        .into_iter()
        .map(|mask| {
            let elems = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &d)| d);
            PSet::finite(ground, elems)
        })
        .collect::<Result<_>>()?;
    out.sort_by(|x, y| x.head().iter().cmp(y.head().iter()));
    Ok(out)
}

/// With `x = x_1 + ... + x_{n-1}` taken from `x_tuple`, returns `A^n`
/// together with every `X_a = A^n \ {a + x}` for `a ∈ A \ {x_1}`, each
/// checked against `A^n + X = A^{2n}`.
pub fn conjugate_witnesses(a: &PSet, n: usize, x_tuple: &[usize]) -> Result<WitnessReport> {
    require_finite(a, "A")?;
    if n < 2 {
        return Err(Error::precondition(format!("n must be at least 2, got {n}")));
    }
    if x_tuple.len() != n - 1 {
        return Err(Error::precondition(format!(
            "expected {} tuple entries, got {}",
            n - 1,
            x_tuple.len()
        )));
    }
    if let Some(&bad) = x_tuple.iter().find(|&&t| !a.member(t as i64)) {
        return Err(Error::precondition(format!("tuple entry {bad} is not in {a}")));
    }
    let a_n = a.power(n)?;
    let a_2n = a_n.add(&a_n)?;
    let x: usize = x_tuple.iter().sum();
    let x1 = x_tuple[0];

    let mut witnesses = vec![a_n.clone()];
    let mut verified = vec![a_n.add(&a_n)? == a_2n];
    for elem in a.head().iter().filter(|&e| e != x1) {
        let mut xa = a_n.head().clone();
        xa.remove(elem + x);
        let xa = PSet::from_bits(a.ground(), xa, None)?;
        verified.push(a_n.add(&xa)? == a_2n);
        witnesses.push(xa);
    }
    Ok(WitnessReport::new(witnesses, verified, a.head().len()))
}

/// The largest `m` with `2^{m-1} <= solution_count`: an equation with
/// `solution_count` solutions cannot come from a base of more than `m`
/// elements under the `2^{|A|-1}` lower bound.
pub fn image_size_bound(solution_count: u64) -> Result<u32> {
    if solution_count == 0 {
        return Err(Error::precondition("solution count must be positive"));
    }
    Ok(64 - solution_count.leading_zeros())
}
