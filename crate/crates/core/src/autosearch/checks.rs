//! Direct checks on candidate maps, independent of any search pruning.

use std::collections::BTreeSet;

use super::monoid::TruncatedPowerMonoid;

/// A map of the monoid to itself, as the list of images of each index.
pub type Permutation = Vec<usize>;

pub fn is_bijection(m: &TruncatedPowerMonoid, f: &[usize]) -> bool {
    if f.len() != m.len() {
        return false;
    }
    let mut seen = vec![false; f.len()];
    f.iter()
        .all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
}

/// The first pair `(a, b)` with `f(a ⊕ b) ≠ f(a) ⊕ f(b)`, scanning pairs in
/// index order.
pub fn homomorphism_violation(m: &TruncatedPowerMonoid, f: &[usize]) -> Option<(usize, usize)> {
    let n = m.len();
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| f[m.op(a, b)] != m.op(f[a], f[b]))
}

pub fn is_automorphism(m: &TruncatedPowerMonoid, f: &[usize]) -> bool {
    is_bijection(m, f) && homomorphism_violation(m, f).is_none()
}

pub fn identity(n: usize) -> Permutation {
    (0..n).collect()
}

/// `g ∘ f`.
pub fn compose(f: &[usize], g: &[usize]) -> Permutation {
    f.iter().map(|&x| g[x]).collect()
}

pub fn inverse(f: &[usize]) -> Permutation {
    let mut inv = vec![0; f.len()];
    for (i, &v) in f.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Whether the maps contain the identity and are closed under composition
/// and inverses.
pub fn is_group(maps: &[Permutation]) -> bool {
    let Some(first) = maps.first() else {
        return false;
    };
    let set: BTreeSet<&Permutation> = maps.iter().collect();
    set.contains(&identity(first.len()))
        && maps.iter().all(|f| set.contains(&inverse(f)))
        && maps
            .iter()
            .all(|f| maps.iter().all(|g| set.contains(&compose(f, g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autosearch::Variant;
    use crate::numsgp::NumericalSemigroup;

    #[test]
    fn swap_of_idempotents_is_not_a_homomorphism() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).unwrap();
        let swap = vec![0, 1, 3, 2];
        assert!(is_bijection(&m, &swap));
        assert_eq!(homomorphism_violation(&m, &swap), Some((1, 1)));
        assert!(is_automorphism(&m, &identity(4)));
    }

    #[test]
    fn bijection_rejects_bad_maps() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).unwrap();
        assert!(!is_bijection(&m, &[0, 1, 1, 2]));
        assert!(!is_bijection(&m, &[0, 1, 2]));
        assert!(!is_bijection(&m, &[0, 1, 2, 9]));
    }

    #[test]
    fn group_checks() {
        let id = identity(3);
        let cyc = vec![1, 2, 0];
        let cyc2 = compose(&cyc, &cyc);
        assert_eq!(inverse(&cyc), cyc2);
        assert!(is_group(&[id.clone(), cyc.clone(), cyc2]));
        assert!(!is_group(&[id.clone(), cyc]));
        assert!(is_group(std::slice::from_ref(&id)));
        assert!(!is_group(&[vec![1, 0, 2]]));
        assert!(!is_group(&[]));
    }
}
