//! Slow reference implementations used to cross-check the fast paths.
//!
//! Nothing here touches [`BitSet`](crate::bits::BitSet) arithmetic, the sieve
//! or the operation table: sets are `BTreeSet`s, sums are formed pair by
//! pair, and membership in a [`PSet`] is read point by point through
//! [`PSet::member`].

use std::collections::{BTreeSet, HashMap};

use crate::autosearch::TruncatedPowerMonoid;
use crate::error::{Error, Result};
use crate::setrep::PSet;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Frobenius number by closing `{0}` under adding generators, with a
/// worklist, up to `min · max` (beyond which everything is reached).
///
/// Returns `None` when the generators do not have gcd 1.
pub fn frobenius_by_closure(gens: &[u64], includes_zero: bool) -> Option<i64> {
    let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
    if gens.iter().fold(0, |a, &g| gcd(a, g)) != 1 {
        return None;
    }
    let bound = gens.iter().min()? * gens.iter().max()? + 1;
    let mut reached = BTreeSet::from([0u64]);
    let mut work = vec![0u64];
    while let Some(x) = work.pop() {
        for &g in &gens {
            let y = x + g;
            if y <= bound && reached.insert(y) {
                work.push(y);
            }
        }
    }
    let largest_gap = (1..=bound).rev().find(|n| !reached.contains(n));
    Some(match (largest_gap, includes_zero) {
        (Some(g), _) => g as i64,
        (None, true) => -1,
        (None, false) => 0,
    })
}

/// Members of `x` in `[0, limit]`.
pub fn members(x: &PSet, limit: usize) -> BTreeSet<usize> {
    (0..=limit).filter(|&n| x.member(n as i64)).collect()
}

/// `(X + Y) ∩ [0, limit]`, pair by pair.
pub fn naive_sumset(x: &BTreeSet<usize>, y: &BTreeSet<usize>, limit: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &a in x {
        for &b in y {
            if a + b <= limit {
                out.insert(a + b);
            }
        }
    }
    out
}

/// A point beyond which `x`, `y` and everything derived from them by
/// sums and translations by at most `slack` are settled.
pub fn settle_limit(x: &PSet, y: &PSet, slack: usize) -> usize {
    let top = |p: &PSet| p.threshold().or(p.max()).unwrap_or(0);
    let f = x.ground().frobenius().max(0) as usize;
    2 * (top(x) + top(y) + f + 2) + slack
}

/// Checks `z = x + y` on `[0, limit]` against the pairwise sum.
pub fn sum_agrees(x: &PSet, y: &PSet, z: &PSet, limit: usize) -> bool {
    naive_sumset(&members(x, limit), &members(y, limit), limit) == members(z, limit)
}

/// Every finite `X ⊆ H ∩ [0, max B]` with `X + A = B`, by trying all
/// subsets of that interval. Wider than the enumerator in
/// [`lemmas`](crate::lemmas), which first narrows the candidates.
pub fn translate_solutions_brute(a: &PSet, b: &PSet, cap: usize) -> Result<Vec<BTreeSet<usize>>> {
    let (Some(amax), Some(bmax)) = (a.max(), b.max()) else {
        return Err(Error::precondition("A and B must be finite"));
    };
    let a_set = members(a, amax);
    let b_set = members(b, bmax);
    let pool: Vec<usize> = (0..=bmax).filter(|&n| a.ground().contains(n as i64)).collect();
    if pool.len() > cap {
        return Err(Error::CapExceeded {
            what: "brute-force pool",
            actual: pool.len(),
            cap,
        });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << pool.len()) {
        let x: BTreeSet<usize> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        if naive_sumset(&x, &a_set, usize::MAX) == b_set {
            out.push(x);
        }
    }
    out.sort();
    Ok(out)
}

/// Searches `u, v ∈ H ∩ [0, span]` with `X + u = Y + v`, comparing on a
/// window past which both sides are full.
pub fn conjugate_brute(x: &PSet, y: &PSet, span: usize) -> bool {
    let h = x.ground();
    let limit = settle_limit(x, y, 2 * span);
    let shifted = |p: &PSet, t: usize| -> BTreeSet<usize> {
        (t..=limit).filter(|&n| p.member((n - t) as i64)).collect()
    };
    let hs: Vec<usize> = (0..=span).filter(|&u| h.contains(u as i64)).collect();
    let ys: Vec<BTreeSet<usize>> = hs.iter().map(|&v| shifted(y, v)).collect();
    hs.iter().any(|&u| {
        let xu = shifted(x, u);
        ys.contains(&xu)
    })
}

fn mask_members(mask: u128) -> Vec<usize> {
    (0..128).filter(|&b| mask >> b & 1 == 1).collect()
}

/// Re-checks `f(X ⊕ Y) = f(X) ⊕ f(Y)` on every pair from the element
/// masks alone, without the monoid's operation.
pub fn is_homomorphism_naive(m: &TruncatedPowerMonoid, f: &[usize]) -> bool {
    let n = m.len();
    if f.len() != n {
        return false;
    }
    let window = m.window();
    let sets: Vec<BTreeSet<usize>> = m.elements().iter().map(|&e| mask_members(e).into_iter().collect()).collect();
    let index: HashMap<&BTreeSet<usize>, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let op = |a: usize, b: usize| index.get(&naive_sumset(&sets[a], &sets[b], window)).copied();
    (0..n).all(|a| {
        (0..n).all(|b| match (op(a, b), op(f[a], f[b])) {
            (Some(z), Some(w)) => f[z] == w,
            _ => false,
        })
    })
}

/// Compares every entry of the operation with the pairwise sum.
pub fn operation_agrees(m: &TruncatedPowerMonoid) -> bool {
    let window = m.window();
    let sets: Vec<BTreeSet<usize>> = m.elements().iter().map(|&e| mask_members(e).into_iter().collect()).collect();
    (0..m.len()).all(|a| (0..m.len()).all(|b| sets[m.op(a, b)] == naive_sumset(&sets[a], &sets[b], window)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numsgp::NumericalSemigroup;

    #[test]
    fn closure_frobenius() {
        assert_eq!(frobenius_by_closure(&[2, 3], true), Some(1));
        assert_eq!(frobenius_by_closure(&[3, 5], true), Some(7));
        assert_eq!(frobenius_by_closure(&[3, 5, 7], true), Some(4));
        assert_eq!(frobenius_by_closure(&[1], true), Some(-1));
        assert_eq!(frobenius_by_closure(&[1], false), Some(0));
        assert_eq!(frobenius_by_closure(&[4, 6], true), None);
    }

    #[test]
    fn brute_solutions() {
        let n = NumericalSemigroup::natural().shared();
        let a = PSet::parse(&n, "{0,1}").unwrap();
        let b = PSet::parse(&n, "{0,1,2,3}").unwrap();
        let sols = translate_solutions_brute(&a, &b, 20).unwrap();
        assert_eq!(sols, vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([0, 2])]);
    }

    #[test]
    fn brute_conjugacy() {
        let h = NumericalSemigroup::from_generators(&[3, 5], true).unwrap().shared();
        let x = PSet::parse(&h, "{0,3}").unwrap();
        let y = PSet::parse(&h, "{5,8}").unwrap();
        let z = PSet::parse(&h, "{0,5}").unwrap();
        assert!(conjugate_brute(&x, &y, 10));
        assert!(!conjugate_brute(&x, &z, 10));
    }
}
