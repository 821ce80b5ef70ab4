//! Window truncations of `P_0(H)` and `P(H)`.
//!
//! For a window `N`, the elements are the subsets of `H ∩ [0, N]` (all of
//! them containing `0` for the `P0` variant, all non-empty ones for `P`)
//! and the operation is `X ⊕ Y = (X + Y) ∩ [0, N]`.
//!
//! `⊕` is associative: an element `s ≤ N` of `(X + Y) + Z` is a sum
//! `x + y + z` whose partial sum `x + y ≤ s ≤ N` survives the first
//! truncation, and symmetrically for `X + (Y + Z)`. So both sides equal
//! `(X + Y + Z) ∩ [0, N]`. The truncation is not a submonoid of `P_0(H)`:
//! for instance no non-zero singleton stays cancellative.
//!
//! In the `P` variant a sum can leave the window entirely (`{1} ⊕ {1}` for
//! `N = 1`), so that variant carries one extra element, the empty set,
//! which absorbs everything. It is stored last.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::setrep::PSet;

/// Largest window representable with 128-bit element masks.
pub const MAX_WINDOW: usize = 127;
/// Above this many elements the operation is evaluated on demand.
pub const TABLE_LIMIT: usize = 1 << 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Subsets containing `0`.
    P0,
    /// All non-empty subsets, plus the absorbing empty overflow element.
    P,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p0" => Ok(Variant::P0),
            "p" => Ok(Variant::P),
            other => Err(Error::input(format!("unknown variant `{other}` (expected p0 or p)"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::P0 => "p0",
            Variant::P => "p",
        })
    }
}

pub struct TruncatedPowerMonoid {
    ground: Arc<NumericalSemigroup>,
    window: usize,
    variant: Variant,
    /// Members of `H ∩ [0, N]` that index element bits (`[1, N]` for `P0`).
    positions: Vec<usize>,
    elements: Vec<u128>,
    table: Option<Vec<u32>>,
}

pub fn mask_to_vec(mask: u128) -> Vec<usize> {
    (0..128).filter(|&b| mask & (1u128 << b) != 0).collect()
}

pub fn format_mask(mask: u128) -> String {
    let parts: Vec<String> = mask_to_vec(mask).iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl TruncatedPowerMonoid {
    pub fn build(ground: &Arc<NumericalSemigroup>, window: usize, variant: Variant) -> Result<Self> {
        Self::build_capped(ground, window, variant, Limits::global().element_cap)
    }

    pub fn build_capped(
        ground: &Arc<NumericalSemigroup>,
        window: usize,
        variant: Variant,
        cap: usize,
    ) -> Result<Self> {
        if window > MAX_WINDOW {
            return Err(Error::CapExceeded {
                what: "window",
                actual: window,
                cap: MAX_WINDOW,
            });
        }
        if variant == Variant::P0 && !ground.includes_zero() {
            return Err(Error::precondition(format!(
                "the P0 variant needs a ground containing 0, got {ground}"
            )));
        }
        let lo = match variant {
            Variant::P0 => 1,
            Variant::P => 0,
        };
        let positions: Vec<usize> = (lo..=window).filter(|&n| ground.contains(n as i64)).collect();
        let k = positions.len();
        let count = 1usize
            .checked_shl(k as u32)
            .filter(|&c| k < 60 && c <= cap)
        .ok_or(Error::CapExceeded {
            what: "element count",
            actual: if k < 60 { 1 << k } else { usize::MAX },
            cap,
        })?;

        let elements: Vec<u128> = (0..count)
            .map(|i| {
                let bits = match variant {
                    Variant::P0 => i,
                    Variant::P if i + 1 == count => 0,
                    Variant::P => i + 1,
                };
                let base = if variant == Variant::P0 { 1u128 } else { 0 };
                positions
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| bits & (1 << j) != 0)
                    .fold(base, |m, (_, &p)| m | (1u128 << p))
            })
            .collect();

        let mut m = Self {
            ground: Arc::clone(ground),
            window,
            variant,
            positions,
            elements,
            table: None,
        };
        if count <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(count * count);
            for i in 0..count {
                for j in 0..count {
                    table.push(m.compute_op(i, j) as u32);
                }
            }
            m.table = Some(table);
        }
        Ok(m)
    }

    pub fn ground(&self) -> &Arc<NumericalSemigroup> {
        &self.ground
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn element(&self, i: usize) -> u128 {
        self.elements[i]
    }

    pub fn elements(&self) -> &[u128] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> String {
        format_mask(self.elements[i])
    }

    fn window_mask(&self) -> u128 {
        if self.window >= 127 {
            u128::MAX
        } else {
            (1u128 << (self.window + 1)) - 1
        }
    }

    /// `(X + Y) ∩ [0, N]` on raw masks.
    pub fn sum_masks(&self, x: u128, y: u128) -> u128 {
        let wm = self.window_mask();
        let mut acc = 0u128;
        let mut rest = x;
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            acc |= y << b;
        }
        acc & wm
    }

    pub fn index_of(&self, mask: u128) -> Option<usize> {
        let wm = self.window_mask();
        if mask & !wm != 0 {
            return None;
        }
        if mask == 0 {
            return (self.variant == Variant::P).then(|| self.len() - 1);
        }
        if self.variant == Variant::P0 && mask & 1 == 0 {
            return None;
        }
        let mut bits = 0usize;
        let mut covered = if self.variant == Variant::P0 { 1u128 } else { 0 };
        for (j, &p) in self.positions.iter().enumerate() {
            if mask & (1u128 << p) != 0 {
                bits |= 1 << j;
                covered |= 1u128 << p;
            }
        }
        if covered != mask {
            return None;
        }
        Some(match self.variant {
            Variant::P0 => bits,
            Variant::P => bits - 1,
        })
    }

    /// Index of the element with the given members.
    pub fn index_of_set(&self, members: &[usize]) -> Option<usize> {
        if members.iter().any(|&m| m > self.window) {
            return None;
        }
        self.index_of(members.iter().fold(0u128, |m, &b| m | (1u128 << b)))
    }

    /// The element `X ∩ [0, N]`, if it belongs to this monoid.
    pub fn index_of_pset(&self, x: &PSet) -> Option<usize> {
        if x.ground() != &self.ground {
            return None;
        }
        let members: Vec<usize> = x.truncate(self.window).iter().collect();
        self.index_of_set(&members)
    }

    fn compute_op(&self, i: usize, j: usize) -> usize {
        let s = self.sum_masks(self.elements[i], self.elements[j]);
        self.index_of(s).expect("truncated sums stay inside the monoid")
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.compute_op(i, j),
        }
    }

    /// The identity `{0}` when `0 ∈ H`.
    pub fn identity(&self) -> Option<usize> {
        self.ground.includes_zero().then(|| self.index_of(1).unwrap())
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.op(i, i) == i
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_idempotent(i)).collect()
    }

    /// `None` for the empty overflow element.
    pub fn min_of(&self, i: usize) -> Option<usize> {
        let e = self.elements[i];
        (e != 0).then(|| e.trailing_zeros() as usize)
    }

    /// `X - min X` as a mask (the empty element maps to itself).
    pub fn shape(&self, i: usize) -> u128 {
        self.min_of(i).map_or(0, |m| self.elements[i] >> m)
    }

    /// First triple violating associativity, over all triples.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Associativity on `samples` random triples.
    pub fn associativity_violation_sampled<R: Rng>(
        &self,
        rng: &mut R,
        samples: usize,
    ) -> Option<(usize, usize, usize)> {
        let n = self.len();
        (0..samples).find_map(|_| {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            (self.op(self.op(a, b), c) != self.op(a, self.op(b, c))).then_some((a, b, c))
        })
    }

    /// Elements `e` for which both `x ↦ x ⊕ e` and `x ↦ e ⊕ x` are
    /// injective.
    pub fn find_cancellative(&self) -> Vec<usize> {
        let n = self.len();
        let injective = |f: &dyn Fn(usize) -> usize| {
            let mut seen = vec![false; n];
            (0..n).all(|x| !std::mem::replace(&mut seen[f(x)], true))
        };
        (0..n)
            .filter(|&e| injective(&|x| self.op(x, e)) && injective(&|x| self.op(e, x)))
            .collect()
    }
}

impl fmt::Debug for TruncatedPowerMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TruncatedPowerMonoid({}, window {}, {}, {} elements)",
            self.ground,
            self.window,
            self.variant,
            self.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(gens: &[u64]) -> Arc<NumericalSemigroup> {
        NumericalSemigroup::from_generators(gens, true).unwrap().shared()
    }

    fn labels(m: &TruncatedPowerMonoid) -> Vec<String> {
        (0..m.len()).map(|i| m.label(i)).collect()
    }

    #[test]
    fn build_examples() {
        let m = TruncatedPowerMonoid::build(&g(&[1]), 2, Variant::P0).unwrap();
        assert_eq!(labels(&m), vec!["{0}", "{0,1}", "{0,2}", "{0,1,2}"]);
        let m = TruncatedPowerMonoid::build(&g(&[2, 3]), 3, Variant::P0).unwrap();
        assert_eq!(labels(&m), vec!["{0}", "{0,2}", "{0,3}", "{0,2,3}"]);
        let m = TruncatedPowerMonoid::build(&g(&[1]), 1, Variant::P).unwrap();
        assert_eq!(labels(&m), vec!["{0}", "{1}", "{0,1}", "{}"]);
        assert_eq!(m.op(1, 1), 3);
        assert_eq!(m.op(3, 0), 3);
    }

    #[test]
    fn element_counts() {
        let h = g(&[3, 5]);
        for n in 0..12 {
            let k = (1..=n).filter(|&x| h.contains(x as i64)).count();
            assert_eq!(TruncatedPowerMonoid::build(&h, n, Variant::P0).unwrap().len(), 1 << k);
            assert_eq!(
                TruncatedPowerMonoid::build(&h, n, Variant::P).unwrap().len(),
                1 << (k + 1)
            );
        }
    }

    #[test]
    fn caps_and_preconditions() {
        assert!(matches!(
            TruncatedPowerMonoid::build(&g(&[1]), 20, Variant::P0),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            TruncatedPowerMonoid::build(&g(&[1]), 200, Variant::P0),
            Err(Error::CapExceeded { .. })
        ));
        let s = NumericalSemigroup::from_generators(&[2, 3], false).unwrap().shared();
        assert!(TruncatedPowerMonoid::build(&s, 3, Variant::P0).is_err());
        let p = TruncatedPowerMonoid::build(&s, 4, Variant::P).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.identity(), None);
    }

    #[test]
    fn op_truncates() {
        let m = TruncatedPowerMonoid::build(&g(&[1]), 2, Variant::P0).unwrap();
        assert_eq!(m.op(1, 1), 3);
        assert_eq!(m.op(2, 2), 2);
        assert_eq!(m.op(0, 3), 3);
        assert_eq!(m.identity(), Some(0));
        assert_eq!(m.idempotents(), vec![0, 2, 3]);
    }

    #[test]
    fn on_demand_matches_table() {
        let h = g(&[1]);
        let small = TruncatedPowerMonoid::build(&h, 8, Variant::P0).unwrap();
        let big = TruncatedPowerMonoid::build(&h, 11, Variant::P0).unwrap();
        assert!(small.has_table());
        assert!(!big.has_table());
        for i in 0..small.len() {
            for j in 0..small.len() {
                let bi = big.index_of(small.element(i)).unwrap();
                let bj = big.index_of(small.element(j)).unwrap();
                let expect = small.sum_masks(small.element(i), small.element(j));
                assert_eq!(small.element(small.op(i, j)), expect);
                // Sums computed in the larger window agree after truncation to 8.
                assert_eq!(big.element(big.op(bi, bj)) & 0x1ff, expect);
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let m = TruncatedPowerMonoid::build(&g(&[2, 3]), 6, Variant::P).unwrap();
        for i in 0..m.len() {
            assert_eq!(m.index_of(m.element(i)), Some(i));
        }
        assert_eq!(m.index_of_set(&[1]), None);
        assert_eq!(m.index_of_set(&[]), Some(m.len() - 1));
        assert_eq!(m.index_of_set(&[7]), None);
    }

    #[test]
    fn cancellative_examples() {
        let m = TruncatedPowerMonoid::build(&g(&[1]), 2, Variant::P0).unwrap();
        assert_eq!(m.find_cancellative(), vec![0]);
        let m = TruncatedPowerMonoid::build(&g(&[1]), 0, Variant::P0).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.find_cancellative(), vec![0]);
        let m = TruncatedPowerMonoid::build(&g(&[2, 3]), 3, Variant::P0).unwrap();
        assert_eq!(m.find_cancellative(), vec![0]);
    }

    #[test]
    fn associative_small_windows() {
        for gens in [&[1u64][..], &[2, 3], &[3, 5]] {
            for variant in [Variant::P0, Variant::P] {
                for n in 0..=5 {
                    let m = TruncatedPowerMonoid::build(&g(gens), n, variant).unwrap();
                    if m.len() <= 64 {
                        assert_eq!(m.associativity_violation(), None);
                    }
                }
            }
        }
    }
}
