//! Backtracking over images, pruned by refined colours and closed under
//! the operation after every assignment.
//!
//! Once `f(a)` and `f(b)` are fixed, `f(a ⊕ b)` is forced to be
//! `f(a) ⊕ f(b)`; propagating this closure rejects most branches long
//! before they reach a leaf.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;

use super::checks::Permutation;
use super::monoid::TruncatedPowerMonoid;
use super::refine::refined_colours;
use super::strategy::{AutomorphismSearch, SearchOutcome};

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct State {
    image: Vec<usize>,
    used: Vec<bool>,
    /// Assigned elements in assignment order.
    trail: Vec<usize>,
}

impl State {
    fn new(n: usize) -> Self {
        Self {
            image: vec![UNSET; n],
            used: vec![false; n],
            trail: Vec::with_capacity(n),
        }
    }

    fn set(&mut self, x: usize, v: usize) {
        self.image[x] = v;
        self.used[v] = true;
        self.trail.push(x);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.image[x]] = false;
            self.image[x] = UNSET;
        }
    }
}

struct Search<'a> {
    m: &'a TruncatedPowerMonoid,
    colours: &'a [u32],
    order: &'a [usize],
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
    found: Vec<Permutation>,
}

impl<'a> Search<'a> {
    fn compatible(&self, st: &State, x: usize, v: usize) -> bool {
        self.colours[x] == self.colours[v] && !st.used[v]
    }

    /// Sets `f(x) = v` and propagates `f(a ⊕ b) = f(a) ⊕ f(b)`. On `false`
    /// the caller must undo to its mark.
    fn assign(&self, st: &mut State, x: usize, v: usize) -> bool {
        if !self.compatible(st, x, v) {
            return false;
        }
        st.set(x, v);
        let mut queue = vec![x];
        while let Some(a) = queue.pop() {
            let mut i = 0;
            while i < st.trail.len() {
                let b = st.trail[i];
                i += 1;
                let z = self.m.op(a, b);
                let w = self.m.op(st.image[a], st.image[b]);
                if st.image[z] != UNSET {
                    if st.image[z] != w {
                        return false;
                    }
                } else {
                    if !self.compatible(st, z, w) {
                        return false;
                    }
                    st.set(z, w);
                    queue.push(z);
                }
            }
        }
        true
    }

    fn candidates(&self, st: &State, x: usize) -> Vec<usize> {
        (0..self.m.len()).filter(|&v| self.compatible(st, x, v)).collect()
    }

    fn out_of_time(&mut self) -> bool {
        if !self.timed_out && self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                self.timed_out = Instant::now() >= d;
            }
        }
        self.timed_out
    }

    fn dfs(&mut self, st: &mut State, mut pos: usize) {
        self.nodes += 1;
        if self.out_of_time() {
            return;
        }
        while pos < self.order.len() && st.image[self.order[pos]] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            self.found.push(st.image.clone());
            return;
        }
        let x = self.order[pos];
        for v in self.candidates(st, x) {
            let mark = st.trail.len();
            if self.assign(st, x, v) {
                self.dfs(st, pos + 1);
            }
            st.undo_to(mark);
            if self.timed_out {
                return;
            }
        }
    }
}

/// Elements ordered by colour-class size, smallest first.
fn search_order(colours: &[u32]) -> Vec<usize> {
    let mut size = std::collections::HashMap::new();
    for &c in colours {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..colours.len()).collect();
    order.sort_by_key(|&x| (size[&colours[x]], x));
    order
}

fn run(
    m: &TruncatedPowerMonoid,
    deadline: Option<Instant>,
    parallel: bool,
    name: &'static str,
) -> Result<SearchOutcome> {
    let colours = refined_colours(m);
    let order = search_order(&colours);
    let new_search = || Search {
        m,
        colours: &colours,
        order: &order,
        deadline,
        nodes: 0,
        timed_out: false,
        found: Vec::new(),
    };

    let (mut found, nodes, timed_out) = if parallel && !order.is_empty() {
        let root = order[0];
        let probe = new_search();
        let roots = probe.candidates(&State::new(m.len()), root);
        let parts: Vec<(Vec<Permutation>, u64, bool)> = roots
            .into_par_iter()
            .map(|v| {
                let mut s = new_search();
                let mut st = State::new(m.len());
                if s.assign(&mut st, root, v) {
                    s.dfs(&mut st, 1);
                }
                (s.found, s.nodes + 1, s.timed_out)
            })
            .collect();
        parts.into_iter().fold((Vec::new(), 1, false), |mut acc, p| {
            acc.0.extend(p.0);
            (acc.0, acc.1 + p.1, acc.2 || p.2)
        })
    } else {
        let mut s = new_search();
        let mut st = State::new(m.len());
        s.dfs(&mut st, 0);
        (s.found, s.nodes, s.timed_out)
    };
    found.sort();
    Ok(SearchOutcome {
        automorphisms: found,
        complete: !timed_out,
        strategy: name,
        nodes,
    })
}

/// Sequential colour-refined backtracking.
pub struct RefineBacktrack;

impl AutomorphismSearch for RefineBacktrack {
    fn name(&self) -> &'static str {
        "refine"
    }

    fn description(&self) -> &'static str {
        "colour refinement, then backtracking with operation closure"
    }

    fn search(&self, m: &TruncatedPowerMonoid, deadline: Option<Instant>) -> Result<SearchOutcome> {
        run(m, deadline, false, self.name())
    }
}

/// Same search with the root choices spread over the rayon pool.
pub struct ParallelRefineBacktrack;

impl AutomorphismSearch for ParallelRefineBacktrack {
    fn name(&self) -> &'static str {
        "refine-par"
    }

    fn description(&self) -> &'static str {
        "refine, with root assignments searched in parallel"
    }

    fn search(&self, m: &TruncatedPowerMonoid, deadline: Option<Instant>) -> Result<SearchOutcome> {
        run(m, deadline, true, self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autosearch::checks::{identity, is_automorphism};
    use crate::autosearch::Variant;
    use crate::numsgp::NumericalSemigroup;

    #[test]
    fn window_two_has_only_identity() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).unwrap();
        let out = RefineBacktrack.search(&m, None).unwrap();
        assert!(out.complete);
        assert_eq!(out.automorphisms, vec![identity(4)]);
    }

    #[test]
    fn single_element() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 0, Variant::P0).unwrap();
        assert_eq!(RefineBacktrack.search(&m, None).unwrap().automorphisms, vec![vec![0]]);
        assert_eq!(
            ParallelRefineBacktrack.search(&m, None).unwrap().automorphisms,
            vec![vec![0]]
        );
    }

    #[test]
    fn expired_deadline_is_partial() {
        let n = NumericalSemigroup::natural().shared();
        let m = TruncatedPowerMonoid::build(&n, 3, Variant::P0).unwrap();
        let out = RefineBacktrack.search(&m, Some(Instant::now())).unwrap();
        assert!(!out.complete);
    }

    #[test]
    fn parallel_agrees_with_sequential() {
        let n = NumericalSemigroup::natural().shared();
        for w in 0..=5 {
            for v in [Variant::P0, Variant::P] {
                let m = TruncatedPowerMonoid::build(&n, w, v).unwrap();
                let a = RefineBacktrack.search(&m, None).unwrap();
                let b = ParallelRefineBacktrack.search(&m, None).unwrap();
                assert_eq!(a.automorphisms, b.automorphisms);
                assert!(a.automorphisms.iter().all(|f| is_automorphism(&m, f)));
            }
        }
    }
}
