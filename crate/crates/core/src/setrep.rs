//! Canonical representation of the elements of `P(H)` that are finite or
//! eventually full.
//!
//! A [`PSet`] is either a finite set, or a finite head together with every
//! element of `H` at or above a threshold `τ`. The threshold is always
//! minimal: lowering it by one would change the denoted set. Hence
//! `τ = 0` or `τ - 1` is an element of `H` missing from the set, and two
//! canonical values are structurally equal exactly when they denote the
//! same set.
//!
//! Equality window: if `X` and `Y` are canonical over `H` with Frobenius
//! number `F`, they agree everywhere as soon as they agree on
//! `[0, W]` with `W = max(τ_X, τ_Y, max head) + F + 2`. Above the maximum
//! both sets are either all of `H` (tails) or empty (finite), and `W` itself
//! exceeds `F`, so it is a member of `H` on which the two kinds disagree.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PSet {
    ground: Arc<NumericalSemigroup>,
    head: BitSet,
    threshold: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Finite,
    Tail,
}

impl PSet {
    /// Builds the canonical form of `head ∪ {h ∈ H : h ≥ threshold}` (or of
    /// `head` alone when `threshold` is `None`).
    pub fn canonicalize(
        ground: &Arc<NumericalSemigroup>,
        head: impl IntoIterator<Item = usize>,
        threshold: Option<usize>,
    ) -> Result<Self> {
        let head: BitSet = head.into_iter().collect();
        Self::from_bits(ground, head, threshold)
    }

    pub(crate) fn from_bits(
        ground: &Arc<NumericalSemigroup>,
        mut head: BitSet,
        threshold: Option<usize>,
    ) -> Result<Self> {
        if let Some(bad) = head.iter().find(|&x| !ground.contains(x as i64)) {
            return Err(Error::GroundViolation {
                element: bad as i64,
                ground: ground.describe(),
            });
        }
        let threshold = match threshold {
            None => {
                if head.is_empty() {
                    return Err(Error::input("the empty set is not an element of P(H)"));
                }
                None
            }
            Some(mut tau) => {
                head = head.truncated(tau);
                while tau > 0 && (!ground.contains(tau as i64 - 1) || head.contains(tau - 1)) {
                    tau -= 1;
                    head.remove(tau);
                }
                let max = Limits::global().max_threshold;
                if tau > max {
                    return Err(Error::ThresholdOverflow { threshold: tau, max });
                }
                Some(tau)
            }
        };
        Ok(Self {
            ground: Arc::clone(ground),
            head,
            threshold,
        })
    }

    pub fn finite(ground: &Arc<NumericalSemigroup>, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::canonicalize(ground, elems, None)
    }

    pub fn tail(
        ground: &Arc<NumericalSemigroup>,
        head: impl IntoIterator<Item = usize>,
        threshold: usize,
    ) -> Result<Self> {
        Self::canonicalize(ground, head, Some(threshold))
    }

    /// `H ∩ Z≥k`.
    pub fn semiline(ground: &Arc<NumericalSemigroup>, k: usize) -> Result<Self> {
        Self::tail(ground, [], k)
    }

    /// The whole ground semigroup as an element of `P(H)`.
    pub fn whole(ground: &Arc<NumericalSemigroup>) -> Self {
        Self::semiline(ground, 0).expect("threshold 0 is always admissible")
    }

    pub fn singleton(ground: &Arc<NumericalSemigroup>, x: usize) -> Result<Self> {
        Self::finite(ground, [x])
    }

    pub fn ground(&self) -> &Arc<NumericalSemigroup> {
        &self.ground
    }

    pub fn kind(&self) -> Kind {
        if self.threshold.is_some() {
            Kind::Tail
        } else {
            Kind::Finite
        }
    }

    pub fn is_finite(&self) -> bool {
        self.threshold.is_none()
    }

    /// The finite part: the whole set when finite, the elements below the
    /// threshold otherwise.
    pub fn head(&self) -> &BitSet {
        &self.head
    }

    pub fn threshold(&self) -> Option<usize> {
        self.threshold
    }

    pub fn member(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match self.threshold {
            Some(t) if n as usize >= t => self.ground.contains(n),
            _ => self.head.contains(n as usize),
        }
    }

    pub fn min(&self) -> usize {
        match (self.head.min(), self.threshold) {
            (Some(h), _) => h,
            (None, Some(t)) => (t..).find(|&n| self.ground.contains(n as i64)).unwrap(),
            (None, None) => unreachable!("canonical sets are non-empty"),
        }
    }

    /// Largest element of a finite set.
    pub fn max(&self) -> Option<usize> {
        if self.is_finite() {
            self.head.max()
        } else {
            None
        }
    }

    /// Cardinality of a finite set.
    pub fn cardinality(&self) -> Option<usize> {
        self.is_finite().then(|| self.head.len())
    }

    /// `X ∩ [0, limit)` as a bit-vector.
    pub fn below(&self, limit: usize) -> BitSet {
        let mut out = self.head.truncated(limit);
        if let Some(t) = self.threshold {
            if limit > t {
                out.union_with(&self.ground.members_between(t, limit));
            }
        }
        out
    }

    /// Characteristic vector of `X ∩ [0, window]`.
    pub fn truncate(&self, window: usize) -> BitSet {
        self.below(window + 1)
    }

    /// A `W` such that agreement on `[0, W]` forces equality (see the
    /// module docs).
    pub fn equality_window(&self, other: &PSet) -> usize {
        let f = (self.ground.frobenius() + 1) as usize;
        let top = [
            self.threshold.unwrap_or(0),
            other.threshold.unwrap_or(0),
            self.head.max().unwrap_or(0),
            other.head.max().unwrap_or(0),
        ]
        .into_iter()
        .max()
        .unwrap();
        top + f + 1
    }

    pub(crate) fn check_same_ground(&self, other: &PSet) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch {
                left: self.ground.describe(),
                right: other.ground.describe(),
            })
        }
    }

    /// Parses the literal grammar `{0,2,3}` (finite) or `{0,2,~7}` (the
    /// head `{0,2}` together with `H ∩ Z≥7`).
    pub fn parse(ground: &Arc<NumericalSemigroup>, s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::input(format!("expected a set literal like {{0,2,~7}}, got `{s}`")))?;
        let mut head = Vec::new();
        let mut threshold = None;
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if let Some(t) = tok.strip_prefix('~') {
                if threshold.is_some() {
                    return Err(Error::input("a set literal has at most one ~threshold"));
                }
                threshold = Some(
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::input(format!("bad threshold `{tok}`")))?,
                );
            } else {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| Error::input(format!("bad element `{tok}`")))?;
                if v < 0 {
                    return Err(Error::GroundViolation {
                        element: v,
                        ground: ground.describe(),
                    });
                }
                head.push(v as usize);
            }
        }
        Self::canonicalize(ground, head, threshold)
    }

    pub fn to_json(&self) -> PSetJson {
        PSetJson {
            head: self.head.iter().collect(),
            threshold: self.threshold,
        }
    }

    pub fn from_json(ground: &Arc<NumericalSemigroup>, json: &PSetJson) -> Result<Self> {
        Self::canonicalize(ground, json.head.iter().copied(), json.threshold)
    }
}

/// JSON form `{"head": [...], "threshold": int | null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PSetJson {
    pub head: Vec<usize>,
    pub threshold: Option<usize>,
}

impl fmt::Display for PSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.head.iter().map(|x| x.to_string()).collect();
        if let Some(t) = self.threshold {
            parts.push(format!("~{t}"));
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for PSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.ground)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(gens: &[u64]) -> Arc<NumericalSemigroup> {
        NumericalSemigroup::from_generators(gens, true).unwrap().shared()
    }

    #[test]
    fn canonicalize_examples() {
        let n = g(&[1]);
        let x = PSet::finite(&n, [0, 2]).unwrap();
        assert_eq!(x.to_string(), "{0,2}");
        assert_eq!(x.kind(), Kind::Finite);

        let y = PSet::tail(&n, [0, 3, 4], 5).unwrap();
        assert_eq!(y.head().iter().collect::<Vec<_>>(), vec![0]);
        assert_eq!(y.threshold(), Some(3));

        let h = g(&[2, 3]);
        let z = PSet::tail(&h, [0], 2).unwrap();
        assert!(z.head().is_empty());
        assert_eq!(z.threshold(), Some(0));
        assert_eq!(z, PSet::whole(&h));
    }

    #[test]
    fn canonicalize_errors() {
        let h = g(&[2, 3]);
        assert!(matches!(
            PSet::finite(&h, [0, 1]),
            Err(Error::GroundViolation { element: 1, .. })
        ));
        assert!(matches!(PSet::finite(&h, []), Err(Error::Input(_))));
        assert!(matches!(
            PSet::tail(&h, [], (1 << 20) + 5),
            Err(Error::ThresholdOverflow { .. })
        ));
    }

    #[test]
    fn threshold_skips_gaps() {
        // 7 is a gap of <3,5>, so {~8} and {~7} denote the same set.
        let h = g(&[3, 5]);
        let x = PSet::semiline(&h, 8).unwrap();
        assert_eq!(x.threshold(), Some(7));
        assert_eq!(x.min(), 8);
        assert_eq!(x, PSet::semiline(&h, 7).unwrap());
    }

    #[test]
    fn member_examples() {
        let n = g(&[1]);
        let x = PSet::tail(&n, [0], 2).unwrap();
        assert!(!x.member(1));
        assert!(x.member(2));
        assert!(!x.member(-3));
        assert!(PSet::finite(&n, [0, 2]).unwrap().member(2));
        let h = g(&[3, 5]);
        let y = PSet::tail(&h, [0], 8).unwrap();
        assert!(y.member(9));
        assert!(!y.member(7));
        assert!(!y.member(3));
    }

    #[test]
    fn min_examples() {
        let h = g(&[3, 5]);
        assert_eq!(PSet::finite(&h, [3, 5]).unwrap().min(), 3);
        assert_eq!(PSet::semiline(&h, 8).unwrap().min(), 8);
        assert_eq!(PSet::tail(&h, [0, 6], 10).unwrap().min(), 0);
    }

    #[test]
    fn literals_round_trip() {
        let h = g(&[2, 3]);
        for lit in ["{0,2,3}", "{2,~5}", "{~0}", "{0,~4}"] {
            let x = PSet::parse(&h, lit).unwrap();
            assert_eq!(x.to_string(), lit);
            assert_eq!(PSet::from_json(&h, &x.to_json()).unwrap(), x);
        }
        assert_eq!(PSet::parse(&h, "{0,2,~3}").unwrap().to_string(), "{~0}");
        assert_eq!(PSet::parse(&h, "{0,3,~4}").unwrap().to_string(), "{0,~3}");
        assert!(PSet::parse(&h, "{~3,~4}").is_err());
        assert!(PSet::parse(&h, "0,2").is_err());
        assert!(PSet::parse(&h, "{}").is_err());
        assert!(PSet::parse(&h, "{-1}").is_err());
        let j = serde_json::to_string(&PSet::parse(&h, "{2,~5}").unwrap().to_json()).unwrap();
        assert_eq!(j, r#"{"head":[2],"threshold":5}"#);
    }

    #[test]
    fn truncate_examples() {
        let n = g(&[1]);
        assert_eq!(
            PSet::semiline(&n, 2).unwrap().truncate(4).iter().collect::<Vec<_>>(),
            vec![2, 3, 4]
        );
        assert_eq!(
            PSet::finite(&n, [0, 9]).unwrap().truncate(4).iter().collect::<Vec<_>>(),
            vec![0]
        );
        let h = g(&[2, 3]);
        assert_eq!(PSet::whole(&h).truncate(3).iter().collect::<Vec<_>>(), vec![0, 2, 3]);
    }
}
