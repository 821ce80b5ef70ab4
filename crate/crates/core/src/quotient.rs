//! Conjugacy modulo the cancellative elements of `P(H)`.
//!
//! The cancellative elements of `P(H)` are the singletons, so `X` and `Y`
//! are conjugate when `X + u = Y + v` for some `u, v ∈ H`. Each class has a
//! unique representative `X - min X` in `P_0(N)`, and that assignment is an
//! isomorphism of the quotient onto `P_0(N)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::setrep::PSet;

/// The shared ground `N`.
pub fn naturals() -> Arc<NumericalSemigroup> {
    use std::sync::OnceLock;
    static N: OnceLock<Arc<NumericalSemigroup>> = OnceLock::new();
    Arc::clone(N.get_or_init(|| NumericalSemigroup::natural().shared()))
}

/// `X - min X` as an element of `P_0(N)`.
pub fn normalize(x: &PSet) -> PSet {
    x.translate(-(x.min() as i64), &naturals())
        .expect("X - min X lies in N")
}

pub fn conjugate_related(x: &PSet, y: &PSet) -> Result<bool> {
    x.check_same_ground(y)?;
    Ok(normalize(x) == normalize(y))
}

/// `A + k` over `ground`, inverting [`normalize`] for `k` above the
/// Frobenius number.
pub fn lift(a: &PSet, ground: &Arc<NumericalSemigroup>, k: usize) -> Result<PSet> {
    if **a.ground() != *naturals() {
        return Err(Error::precondition(format!("{a:?} is not a subset of N")));
    }
    if !a.member(0) {
        return Err(Error::precondition(format!("{a} does not contain 0")));
    }
    if (k as i64) <= ground.frobenius() {
        return Err(Error::precondition(format!(
            "shift {k} must exceed the Frobenius number {}",
            ground.frobenius()
        )));
    }
    a.translate(k as i64, ground)
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
    fn normalize_examples() {
        let n = naturals();
        assert_eq!(normalize(&lit(&g(&[3, 5]), "{3,5}")), lit(&n, "{0,2}"));
        let h = g(&[2, 3]);
        assert_eq!(normalize(&PSet::whole(&h)), lit(&n, "{0,2,~3}"));
        assert_eq!(normalize(&lit(&h, "{2,~5}")), lit(&n, "{0,~3}"));
    }

    #[test]
    fn related_examples() {
        let h = g(&[2, 3]);
        assert!(conjugate_related(&lit(&h, "{2,4}"), &lit(&h, "{4,6}")).unwrap());
        let x = lit(&h, "{0,3,~7}");
        assert!(conjugate_related(&x, &x).unwrap());
        assert!(!conjugate_related(&lit(&h, "{2,4}"), &lit(&h, "{2,5}")).unwrap());
        assert!(conjugate_related(&x, &lit(&g(&[1]), "{0}")).is_err());
    }

    #[test]
    fn lift_examples() {
        let n = naturals();
        let h = g(&[2, 3]);
        assert_eq!(lift(&lit(&n, "{0,1}"), &h, 2).unwrap(), lit(&h, "{2,3}"));
        let h35 = g(&[3, 5]);
        assert_eq!(lift(&lit(&n, "{0}"), &h35, 8).unwrap(), lit(&h35, "{8}"));
        assert!(matches!(
            lift(&lit(&n, "{0,1}"), &h, 1),
            Err(Error::Precondition(_))
        ));
        assert!(lift(&lit(&n, "{1}"), &h, 5).is_err());
        assert!(lift(&lit(&h, "{0}"), &h, 5).is_err());
    }

    #[test]
    fn lift_without_zero() {
        let s = NumericalSemigroup::from_generators(&[1], false).unwrap().shared();
        assert!(lift(&lit(&naturals(), "{0,2}"), &s, 0).is_err());
        let x = lift(&lit(&naturals(), "{0,2,~4}"), &s, 1).unwrap();
        assert_eq!(x.to_string(), "{1,3,~5}");
        assert_eq!(normalize(&x), lit(&naturals(), "{0,2,~4}"));
    }
}
