//! Isomorphism-invariant colouring of monoid elements.
//!
//! Every automorphism maps an element to one of the same colour. The
//! initial colour combines abstract invariants (identity, idempotency,
//! cyclic index and period, row image size, stabiliser and square-root
//! counts); it is then refined until stable by the multiset of
//! `(colour(y), colour(x ⊕ y))` over all `y`.

use std::collections::BTreeMap;

use super::monoid::TruncatedPowerMonoid;

/// Index and period of the cyclic subsemigroup generated by `x`.
fn cyclic_profile(m: &TruncatedPowerMonoid, x: usize) -> (usize, usize) {
    let mut seen = BTreeMap::new();
    let mut cur = x;
    let mut k = 1;
    loop {
        if let Some(&first) = seen.get(&cur) {
            return (first, k - first);
        }
        seen.insert(cur, k);
        cur = m.op(cur, x);
        k += 1;
    }
}

fn relabel<K: Ord>(keys: Vec<K>) -> (Vec<u32>, usize) {
    let ids: BTreeMap<&K, u32> = keys
        .iter()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i as u32))
        .collect();
    let classes = ids.len();
    (keys.iter().map(|k| ids[k]).collect(), classes)
}

pub fn initial_colours(m: &TruncatedPowerMonoid) -> Vec<u32> {
    let n = m.len();
    let identity = m.identity();
    let mut square_roots = vec![0usize; n];
    for y in 0..n {
        square_roots[m.op(y, y)] += 1;
    }
    let keys: Vec<_> = (0..n)
        .map(|x| {
            let mut row = vec![false; n];
            let mut stab = 0;
            for y in 0..n {
                let z = m.op(x, y);
                row[z] = true;
                if z == y {
                    stab += 1;
                }
            }
            (
                Some(x) == identity,
                m.is_idempotent(x),
                cyclic_profile(m, x),
                row.iter().filter(|&&r| r).count(),
                stab,
                square_roots[x],
            )
        })
        .collect();
    relabel(keys).0
}

/// Stable colouring after iterated refinement.
pub fn refined_colours(m: &TruncatedPowerMonoid) -> Vec<u32> {
    let n = m.len();
    let (mut colours, mut classes) = relabel(initial_colours(m));
    loop {
        let keys: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
            .map(|x| {
                let mut sig: Vec<(u32, u32)> = (0..n).map(|y| (colours[y], colours[m.op(x, y)])).collect();
                sig.sort_unstable();
                (colours[x], sig)
            })
            .collect();
        let (next, next_classes) = relabel(keys);
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autosearch::Variant;
    use crate::numsgp::NumericalSemigroup;

    #[test]
    fn window_two_is_discrete() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).unwrap();
        let c = refined_colours(&m);
        let mut sorted = c.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 4, "{c:?}");
    }

    #[test]
    fn cyclic_profile_of_generator() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 3, Variant::P0).unwrap();
        let x = m.index_of_set(&[0, 1]).unwrap();
        // {0,1}, {0,1,2}, {0,1,2,3}, {0,1,2,3}, ...
        assert_eq!(cyclic_profile(&m, x), (3, 1));
    }
}
