//! Numerical semigroups and monoids: cofinite additive subsemigroups of N.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Largest closure window we are willing to sieve.
const MAX_SIEVE: usize = 1 << 24;

/// A numerical semigroup `H`, optionally with `0`.
///
/// The stored generators are the minimal generating set, so two values are
/// equal exactly when they denote the same subset of N.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    includes_zero: bool,
    frobenius: i64,
    /// Members of `[0, F + 1]`; everything above `F` is a member.
    sieve: BitSet,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// The smallest subsemigroup of N containing `gens` (and `0` when
    /// `includes_zero`).
    pub fn from_generators(gens: &[u64], includes_zero: bool) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::input("generator set is empty"));
        }
        if gens.contains(&0) {
            return Err(Error::input("generators must be positive"));
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCofinite(g));
        }
        let lo = *gens.iter().min().unwrap() as usize;
        let hi = *gens.iter().max().unwrap() as usize;
        // Schur: F <= (lo - 1)(hi - 1) - 1, so this window contains the last gap.
        let bound = lo
            .checked_mul(hi)
            .and_then(|v| v.checked_add(hi))
            .filter(|&v| v <= MAX_SIEVE)
            .ok_or(Error::CapExceeded {
                what: "sieve window",
                actual: lo.saturating_mul(hi),
                cap: MAX_SIEVE,
            })?;

        let mut reach = vec![false; bound + 1];
        reach[0] = true;
        for n in 1..=bound {
            reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
        }
        if !includes_zero {
            reach[0] = false;
        }
        let frobenius = reach.iter().rposition(|&r| !r).map_or(-1, |p| p as i64);
        let sieve: BitSet = (0..=(frobenius + 1) as usize).filter(|&n| reach[n]).collect();

        let mut s = Self {
            generators: Vec::new(),
            includes_zero,
            frobenius,
            sieve,
        };
        s.generators = s.minimal_generators();
        Ok(s)
    }

    /// The monoid N itself.
    pub fn natural() -> Self {
        Self::from_generators(&[1], true).expect("<1> is cofinite")
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    fn minimal_generators(&self) -> Vec<usize> {
        let m = self.multiplicity();
        let limit = (self.frobenius + 1) as usize + m + 1;
        let members: Vec<usize> = (1..limit).filter(|&n| self.contains(n as i64)).collect();
        members
            .iter()
            .copied()
            .filter(|&n| {
                !members
                    .iter()
                    .take_while(|&&a| 2 * a <= n)
                    .any(|&a| self.contains((n - a) as i64))
            })
            .collect()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn includes_zero(&self) -> bool {
        self.includes_zero
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Smallest non-zero member.
    pub fn multiplicity(&self) -> usize {
        (1usize..).find(|&n| self.contains(n as i64)).unwrap()
    }

    /// The first integer from which every integer is a member.
    pub fn conductor(&self) -> usize {
        (self.frobenius + 1) as usize
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.sieve.contains(n as usize)
        }
    }

    /// Gaps in N, excluding `0` for the variant without zero.
    pub fn gaps(&self) -> Vec<usize> {
        (1..=self.frobenius.max(0) as usize)
            .filter(|&n| !self.contains(n as i64))
            .collect()
    }

    /// The full complement in N, which lists `0` for the variant without zero.
    pub fn complement_in_n(&self) -> Vec<usize> {
        (0..=self.frobenius.max(0) as usize)
            .filter(|&n| !self.contains(n as i64))
            .collect()
    }

    /// Members strictly below `limit`.
    pub fn members_below(&self, limit: usize) -> BitSet {
        let c = self.conductor();
        let mut out = self.sieve.truncated(limit.min(c));
        if limit > c {
            let mut tail = BitSet::full(limit);
            tail.difference_with(&BitSet::full(c));
            out.union_with(&tail);
        }
        out
    }

    /// Members of `[lo, hi)`.
    pub fn members_between(&self, lo: usize, hi: usize) -> BitSet {
        let mut out = self.members_below(hi);
        out.difference_with(&BitSet::full(lo));
        out
    }

    pub(crate) fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "<{};{}>",
            gens.join(","),
            if self.includes_zero { "0" } else { "no0" }
        )
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `<g1,g2,...;0|no0>`. The `;0` suffix may be omitted.
impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| Error::input(format!("expected <g1,...;0|no0>, got `{s}`")))?;
        let (gens, flag) = match body.split_once(';') {
            Some((g, f)) => (g, f.trim()),
            None => (body, "0"),
        };
        let includes_zero = match flag {
            "0" => true,
            "no0" => false,
            other => return Err(Error::input(format!("unknown zero flag `{other}`"))),
        };
        let gens = parse_generators(gens)?;
        Self::from_generators(&gens, includes_zero)
    }
}

/// Comma-separated positive integers.
pub fn parse_generators(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| Error::input(format!("bad generator `{t}`")))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct SemigroupJson {
    generators: Vec<u64>,
    includes_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frobenius: Option<i64>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupJson {
            generators: self.generators.iter().map(|&g| g as u64).collect(),
            includes_zero: self.includes_zero,
            frobenius: Some(self.frobenius),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SemigroupJson::deserialize(d)?;
        let s = Self::from_generators(&raw.generators, raw.includes_zero).map_err(D::Error::custom)?;
        if let Some(f) = raw.frobenius {
            if f != s.frobenius {
                return Err(D::Error::custom(format!(
                    "stated frobenius {f} disagrees with computed {}",
                    s.frobenius
                )));
            }
        }
        Ok(s)
    }
}
