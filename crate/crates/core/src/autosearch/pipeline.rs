//! The rigidity argument replayed, step by step, against a candidate map
//! of a truncated power monoid.
//!
//! All steps are truncated analogues: they run inside the window, where
//! some facts about the full power monoid (cancellativity of singletons,
//! for one) no longer hold. The halo step is exact in the window:
//! `H_y ⊕ X = H_y^* ⊕ X` holds precisely when `y ∈ X` for every `y ≤ N`,
//! because the relevant sums `y` and `y + x` either stay at most `N` or are
//! cut from both sides.

use serde::Serialize;

use crate::error::{Error, Result};

use super::checks::{homomorphism_violation, is_bijection};
use super::monoid::{TruncatedPowerMonoid, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepVerdict {
    pub step: &'static str,
    pub description: &'static str,
    pub passed: bool,
    /// Number of individual conditions examined.
    pub checked: usize,
    /// First failing witness.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofPipelineReport {
    pub steps: Vec<StepVerdict>,
    /// Ways in which the window differs from the untruncated monoid.
    pub window_notes: Vec<String>,
}

impl ProofPipelineReport {
    pub fn all_passed(&self) -> bool {
        self.steps.iter().all(|s| s.passed)
    }

    pub fn first_failure(&self) -> Option<&StepVerdict> {
        self.steps.iter().find(|s| !s.passed)
    }

    pub fn step(&self, name: &str) -> Option<&StepVerdict> {
        self.steps.iter().find(|s| s.step == name)
    }
}

struct StepBuilder {
    step: &'static str,
    description: &'static str,
    checked: usize,
    witness: Option<String>,
}

impl StepBuilder {
    fn new(step: &'static str, description: &'static str) -> Self {
        Self {
            step,
            description,
            checked: 0,
            witness: None,
        }
    }

    /// Records one condition; keeps the first failure.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> StepVerdict {
        StepVerdict {
            step: self.step,
            description: self.description,
            passed: self.witness.is_none(),
            checked: self.checked,
            witness: self.witness,
        }
    }
}

pub fn proof_pipeline(m: &TruncatedPowerMonoid, f: &[usize]) -> Result<ProofPipelineReport> {
    if !is_bijection(m, f) {
        return Err(Error::precondition("candidate map is not a bijection of the monoid"));
    }
    let n = m.len();
    let label = |i: usize| m.label(i);
    let ground = m.ground();
    let window = m.window();
    let has_zero = ground.includes_zero();
    let members: Vec<usize> = (0..=window).filter(|&x| ground.contains(x as i64)).collect();
    let mut steps = Vec::new();

    let mut hom = StepBuilder::new("homomorphism", "f(X ⊕ Y) = f(X) ⊕ f(Y) for all X, Y");
    hom.checked = n * n;
    if let Some((a, b)) = homomorphism_violation(m, f) {
        hom.witness = Some(format!(
            "X = {}, Y = {}: f(X ⊕ Y) = {} but f(X) ⊕ f(Y) = {}",
            label(a),
            label(b),
            label(f[m.op(a, b)]),
            label(m.op(f[a], f[b]))
        ));
    }
    steps.push(hom.finish());

    let mut small = StepBuilder::new(
        "fixes-doubletons",
        "every {0,x} (and, for the P variant, every {x}) is fixed",
    );
    for &x in &members {
        if has_zero && x != 0 {
            let i = m.index_of_set(&[0, x]).unwrap();
            small.check(f[i] == i, || format!("f({}) = {}", label(i), label(f[i])));
        }
        if m.variant() == Variant::P {
            let i = m.index_of_set(&[x]).unwrap();
            small.check(f[i] == i, || format!("f({}) = {}", label(i), label(f[i])));
        }
    }
    steps.push(small.finish());

    let mut idem = StepBuilder::new("fixes-idempotents", "every idempotent is fixed");
    for e in m.idempotents() {
        idem.check(f[e] == e, || format!("f({}) = {}", label(e), label(f[e])));
    }
    steps.push(idem.finish());

    let mut halo = StepBuilder::new(
        "halo-membership",
        "H_y ⊕ X = H_y* ⊕ X iff y ∈ X, and the same equality holds for f(X)",
    );
    if has_zero {
        for &y in members.iter().filter(|&&y| y != 0) {
            let upper: Vec<usize> = members.iter().copied().filter(|&h| h == 0 || h >= y).collect();
            let hy = m.index_of_set(&upper).unwrap();
            let strict: Vec<usize> = upper.iter().copied().filter(|&h| h != y).collect();
            let hs = m.index_of_set(&strict).unwrap();
            let equal = |x: usize| m.op(hy, x) == m.op(hs, x);
            for x in (0..n).filter(|&x| m.element(x) & 1 != 0) {
                let in_x = m.element(x) & (1u128 << y) != 0;
                halo.check(equal(x) == in_x, || {
                    format!("y = {y}, X = {}: halo equality disagrees with membership", label(x))
                });
                if m.element(f[x]) & 1 != 0 {
                    halo.check(equal(f[x]) == equal(x), || {
                        format!("y = {y}, X = {}: halo equality not preserved by f", label(x))
                    });
                }
            }
        }
    }
    steps.push(halo.finish());

    let mut min = StepBuilder::new("min-preservation", "min f(X) = min X");
    for (x, &fx) in f.iter().enumerate() {
        min.check(m.min_of(fx) == m.min_of(x), || {
            format!("min {} differs from min f(X) = min {}", label(x), label(fx))
        });
    }
    steps.push(min.finish());

    let mut quot = StepBuilder::new(
        "quotient-well-defined",
        "X - min X = Y - min Y implies f(X) - min f(X) = f(Y) - min f(Y)",
    );
    let shape = |x: usize| m.shape(x);
    let mut classes: std::collections::BTreeMap<u128, usize> = std::collections::BTreeMap::new();
    for x in 0..n {
        match classes.get(&shape(x)) {
            Some(&rep) => quot.check(shape(f[x]) == shape(f[rep]), || {
                format!(
                    "{} and {} are conjugate but f maps them to {} and {}",
                    label(rep),
                    label(x),
                    label(f[rep]),
                    label(f[x])
                )
            }),
            None => {
                classes.insert(shape(x), x);
            }
        }
    }
    steps.push(quot.finish());

    let cancellative = m.find_cancellative();
    let window_notes = vec![format!(
        "{} of {} elements are cancellative in the window: {}",
        cancellative.len(),
        n,
        cancellative.iter().map(|&c| label(c)).collect::<Vec<_>>().join(" ")
    )];
    Ok(ProofPipelineReport { steps, window_notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autosearch::checks::identity;
    use crate::numsgp::NumericalSemigroup;

    fn nat(window: usize, v: Variant) -> TruncatedPowerMonoid {
        TruncatedPowerMonoid::build(&NumericalSemigroup::natural().shared(), window, v).unwrap()
    }

    #[test]
    fn identity_passes_everything() {
        for v in [Variant::P0, Variant::P] {
            for w in 0..=4 {
                let m = nat(w, v);
                let r = proof_pipeline(&m, &identity(m.len())).unwrap();
                assert!(r.all_passed(), "{:?}", r.first_failure());
            }
        }
    }

    #[test]
    fn idempotent_swap_fails_homomorphism() {
        let m = nat(2, Variant::P0);
        let r = proof_pipeline(&m, &[0, 1, 3, 2]).unwrap();
        let first = r.first_failure().unwrap();
        assert_eq!(first.step, "homomorphism");
        assert!(first.witness.as_ref().unwrap().starts_with("X = {0,1}, Y = {0,1}"));
        assert!(!r.step("fixes-idempotents").unwrap().passed);
    }

    #[test]
    fn non_identity_maps_fail_early() {
        // Every permutation of the three non-identity elements of window 2.
        let m = nat(2, Variant::P0);
        let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
        for p in perms {
            let f = vec![0, p[0], p[1], p[2]];
            let r = proof_pipeline(&m, &f).unwrap();
            if f == identity(4) {
                assert!(r.all_passed());
            } else {
                let step = r.first_failure().unwrap().step;
                assert!(
                    !r.step("homomorphism").unwrap().passed || !r.step("fixes-doubletons").unwrap().passed,
                    "{f:?} first failed at {step}"
                );
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        let m = nat(2, Variant::P0);
        assert!(matches!(proof_pipeline(&m, &[0, 0, 1, 2]), Err(Error::Precondition(_))));
    }

    #[test]
    fn min_and_quotient_steps_in_p_variant() {
        let m = nat(1, Variant::P);
        // {0} <-> {1} swapped, {0,1} fixed.
        let r = proof_pipeline(&m, &[1, 0, 2, 3]).unwrap();
        assert!(!r.step("min-preservation").unwrap().passed);
        assert!(!r.step("fixes-doubletons").unwrap().passed);
        assert!(r.step("quotient-well-defined").unwrap().passed);

        let m = nat(2, Variant::P);
        let a = m.index_of_set(&[0, 1]).unwrap();
        let b = m.index_of_set(&[0, 2]).unwrap();
        let mut f = identity(m.len());
        f.swap(a, b);
        let r = proof_pipeline(&m, &f).unwrap();
        let q = r.step("quotient-well-defined").unwrap();
        assert!(!q.passed);
        assert!(q.witness.as_ref().unwrap().contains("{1,2}"));
    }

    #[test]
    fn notes_surface_lost_cancellativity() {
        let r = proof_pipeline(&nat(2, Variant::P0), &identity(4)).unwrap();
        assert!(r.window_notes[0].starts_with("1 of 4 elements are cancellative"));
    }
}
