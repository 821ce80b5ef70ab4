//! Exact sumset arithmetic on [`PSet`] values.
//!
//! Safe thresholds. Write `c = F + 1` for the conductor of `H`, so every
//! integer `>= c` lies in `H`.
//!
//! * Finite `X` plus tail `Y`: every `h >= σ = min X + max(τ_Y, c)` is in
//!   `X + Y`, since `h - min X >= max(τ_Y, c)` is an element of `H` at or
//!   above `τ_Y`, hence of `Y`.
//! * Tail plus tail: take `σ = max(τ_X, c) + max(τ_Y, c)`. For `h >= σ`,
//!   `x = max(τ_X, c)` lies in `X` and `h - x >= max(τ_Y, c)` lies in `Y`.
//!
//! Below `σ` a sum only involves summands below `σ`, so the exact part is
//! the bit-vector sumset of the two operands restricted to `[0, σ)`.

use std::sync::Arc;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::setrep::PSet;

impl PSet {
    /// The sumset `X + Y`.
    pub fn add(&self, other: &PSet) -> Result<PSet> {
        self.check_same_ground(other)?;
        let c = self.ground().conductor();
        let sigma = match (self.threshold(), other.threshold()) {
            (None, None) => {
                let sum = self.head().sumset(other.head(), None);
                return PSet::from_bits(self.ground(), sum, None);
            }
            (None, Some(ty)) => self.min() + ty.max(c),
            (Some(tx), None) => other.min() + tx.max(c),
            (Some(tx), Some(ty)) => tx.max(c) + ty.max(c),
        };
        let max = Limits::global().max_threshold;
        if sigma > max {
            return Err(Error::ThresholdOverflow { threshold: sigma, max });
        }
        let head = self.below(sigma).sumset(&other.below(sigma), Some(sigma));
        PSet::from_bits(self.ground(), head, Some(sigma))
    }

    /// The `n`-fold sumset `A + ... + A`.
    pub fn power(&self, n: usize) -> Result<PSet> {
        if n == 0 {
            return Err(Error::input("power exponent must be at least 1"));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.add(self)?;
        }
        Ok(acc)
    }

    /// `{x + t : x ∈ X}` as an element of `P(target)`.
    pub fn translate(&self, t: i64, target: &Arc<NumericalSemigroup>) -> Result<PSet> {
        let violation = |element: i64| Error::GroundViolation {
            element,
            ground: target.describe(),
        };
        let lowest = self.min() as i64 + t;
        if lowest < 0 {
            return Err(violation(lowest));
        }
        match self.threshold() {
            None => {
                let mut out = Vec::with_capacity(self.head().len());
                for x in self.head().iter() {
                    let y = x as i64 + t;
                    if !target.contains(y) {
                        return Err(violation(y));
                    }
                    out.push(y as usize);
                }
                PSet::finite(target, out)
            }
            Some(tau) => {
                // Above `start` the shifted set holds every integer.
                let start = (tau.max(self.ground().conductor()) as i64 + t) as usize;
                let sigma = start.max(target.conductor());
                let mut head = Vec::new();
                for n in 0..sigma {
                    if self.member(n as i64 - t) {
                        if !target.contains(n as i64) {
                            return Err(violation(n as i64));
                        }
                        head.push(n);
                    }
                }
                PSet::tail(target, head, sigma)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(gens: &[u64]) -> Arc<NumericalSemigroup> {
        NumericalSemigroup::from_generators(gens, true).unwrap().shared()
    }

    fn lit(h: &Arc<NumericalSemigroup>, s: &str) -> PSet {
        PSet::parse(h, s).unwrap()
    }

    #[test]
    fn add_examples() {
        let n = g(&[1]);
        let zero = lit(&n, "{0}");
        for s in ["{0,1}", "{3,~9}", "{~0}"] {
            assert_eq!(lit(&n, s).add(&zero).unwrap(), lit(&n, s));
        }
        assert_eq!(lit(&n, "{0,1}").add(&lit(&n, "{0,1}")).unwrap(), lit(&n, "{0,1,2}"));
        let h2 = lit(&n, "{0,~2}");
        assert_eq!(h2.add(&h2).unwrap(), h2);
    }

    #[test]
    fn add_mixed_kinds() {
        let h = g(&[3, 5]);
        let x = lit(&h, "{3}");
        let y = lit(&h, "{0,~10}");
        assert_eq!(x.add(&y).unwrap(), lit(&h, "{3,~13}"));
        assert_eq!(y.add(&x).unwrap(), x.add(&y).unwrap());
        let t = lit(&h, "{5,~8}");
        // {5,8,9,10,...} + {5,8,9,...} = {10,13,14,...}
        assert_eq!(t.add(&t).unwrap(), lit(&h, "{10,~13}"));
    }

    #[test]
    fn add_ground_mismatch() {
        let a = lit(&g(&[1]), "{0}");
        let b = lit(&g(&[2, 3]), "{0}");
        assert!(matches!(a.add(&b), Err(Error::GroundMismatch { .. })));
    }

    #[test]
    fn power_examples() {
        let n = g(&[1]);
        assert_eq!(lit(&n, "{0,1}").power(3).unwrap(), lit(&n, "{0,1,2,3}"));
        assert_eq!(lit(&n, "{4,~9}").power(1).unwrap(), lit(&n, "{4,~9}"));
        let h = g(&[3, 5]);
        assert_eq!(lit(&h, "{0,3}").power(2).unwrap(), lit(&h, "{0,3,6}"));
        assert!(lit(&h, "{0}").power(0).is_err());
    }

    #[test]
    fn translate_examples() {
        let n = g(&[1]);
        assert_eq!(lit(&n, "{0,1}").translate(3, &n).unwrap(), lit(&n, "{3,4}"));
        let h = g(&[3, 5]);
        assert_eq!(lit(&h, "{3,5}").translate(-3, &n).unwrap(), lit(&n, "{0,2}"));
        assert_eq!(PSet::semiline(&h, 8).unwrap().translate(-8, &n).unwrap(), PSet::whole(&n));
        // Tail over H keeps the shifted gaps of H.
        assert_eq!(lit(&h, "{~0}").translate(0, &n).unwrap(), lit(&n, "{0,3,5,6,~8}"));
    }

    #[test]
    fn translate_leaving_ground() {
        let n = g(&[1]);
        let h = g(&[3, 5]);
        assert!(matches!(
            lit(&n, "{0,1}").translate(-1, &n),
            Err(Error::GroundViolation { element: -1, .. })
        ));
        assert!(matches!(
            lit(&n, "{0,1}").translate(3, &h),
            Err(Error::GroundViolation { element: 4, .. })
        ));
        assert!(lit(&n, "{~0}").translate(1, &h).is_err());
        assert_eq!(lit(&n, "{~0}").translate(8, &h).unwrap(), PSet::semiline(&h, 8).unwrap());
    }

    #[test]
    fn threshold_overflow_reported() {
        let n = g(&[1]);
        let big = PSet::semiline(&n, 1 << 19).unwrap();
        let far = PSet::finite(&n, [(1 << 20) - 10]).unwrap();
        assert!(matches!(big.add(&far), Err(Error::ThresholdOverflow { .. })));
    }
}
