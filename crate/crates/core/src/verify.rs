//! The acceptance suite: eleven criteria, each checked against an
//! independent oracle or an exhaustive count, reported one line apiece.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::autosearch::checks::{identity, is_group};
use crate::autosearch::{
    find_automorphisms_with, proof_pipeline, TruncatedPowerMonoid, Variant, DEFAULT_STRATEGY,
};
use crate::error::{Error, Result};
use crate::lemmas::{
    conjugate_witnesses, doubleton_absorb_test, enumerate_translate_solutions, image_size_bound,
    lemma_q_witnesses, member_by_halo,
};
use crate::numsgp::NumericalSemigroup;
use crate::oracle;
use crate::quotient::{lift, naturals, normalize};
use crate::sample::{self, SampleRng};
use crate::setrep::PSet;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {}: {} [{} ms]",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed_ms
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    pub passed: bool,
}

/// What a criterion sees: its own generator and the run seed.
pub struct Ctx {
    rng: SampleRng,
    seed: u64,
}

type Outcome = std::result::Result<String, String>;
type Check = fn(&mut Ctx) -> Outcome;

const CRITERIA: [(u32, &str, Check); 11] = [
    (1, "frobenius numbers", frobenius),
    (2, "translate solutions of {0,1} into {0,1,2,3}", translate_example),
    (3, "Q witnesses for n = 3", q_witnesses),
    (4, "X_a witnesses for n = 2", conjugates),
    (5, "halo membership", halo),
    (6, "doubleton absorption", absorb),
    (7, "semiline identity", semiline),
    (8, "normalization is a homomorphism", normalization),
    (9, "automorphism search", automorphisms),
    (10, "truncation soundness", truncation),
    (11, "image size bound", image_bound),
];

pub fn criterion_ids() -> impl Iterator<Item = u32> {
    CRITERIA.iter().map(|c| c.0)
}

/// Runs one criterion with its own generator, so results do not depend on
/// which other criteria ran.
pub fn run_criterion(id: u32, seed: u64) -> Result<CriterionResult> {
    let &(id, title, check) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::input(format!("no criterion {id}")))?;
    let mut ctx = Ctx {
        rng: sample::rng(seed ^ u64::from(id)),
        seed,
    };
    let start = Instant::now();
    let outcome = check(&mut ctx);
    let elapsed_ms = start.elapsed().as_millis();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Ok(CriterionResult {
        id,
        title,
        passed,
        detail,
        elapsed_ms,
    })
}

pub fn run_all(seed: u64) -> VerifyReport {
    let criteria: Vec<CriterionResult> = criterion_ids()
        .map(|id| run_criterion(id, seed).expect("known id"))
        .collect();
    let passed = criteria.iter().all(|c| c.passed);
    VerifyReport {
        schema: "1",
        seed,
        criteria,
        passed,
    }
}

fn fail(msg: impl fmt::Display) -> String {
    msg.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pick_ground(rng: &mut SampleRng, grounds: &[Arc<NumericalSemigroup>]) -> Arc<NumericalSemigroup> {
    Arc::clone(&grounds[rng.gen_range(0..grounds.len())])
}

fn frobenius(_: &mut Ctx) -> Outcome {
    let cases: [(&[u64], i64); 4] = [(&[2, 3], 1), (&[3, 5], 7), (&[3, 5, 7], 4), (&[1], -1)];
    let mut slowest = Duration::ZERO;
    for (gens, want) in cases {
        let start = Instant::now();
        let h = NumericalSemigroup::from_generators(gens, true).map_err(fail)?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        let oracle = oracle::frobenius_by_closure(gens, true);
        ensure(h.frobenius() == want && oracle == Some(want), || {
            format!("{gens:?}: got {}, closure gives {oracle:?}, expected {want}", h.frobenius())
        })?;
        ensure(took < Duration::from_secs(1), || format!("{gens:?} took {took:?}"))?;
    }
    Ok(format!("4 grounds match the closure oracle, slowest {slowest:?}"))
}

fn translate_example(_: &mut Ctx) -> Outcome {
    let n = naturals();
    let a = PSet::parse(&n, "{0,1}").map_err(fail)?;
    let b = PSet::parse(&n, "{0,1,2,3}").map_err(fail)?;
    let found: BTreeSet<String> = enumerate_translate_solutions(&a, &b)
        .map_err(fail)?
        .iter()
        .map(|s| s.to_string())
        .collect();
    let want: BTreeSet<String> = ["{0,2}".to_string(), "{0,1,2}".to_string()].into();
    ensure(found == want, || format!("enumerator returned {found:?}"))?;
    let brute = oracle::translate_solutions_brute(&a, &b, 20).map_err(fail)?;
    let brute: BTreeSet<BTreeSet<usize>> = brute.into_iter().collect();
    let want: BTreeSet<BTreeSet<usize>> = [BTreeSet::from([0, 2]), BTreeSet::from([0, 1, 2])].into();
    ensure(brute == want, || format!("brute force returned {brute:?}"))?;
    Ok("exactly {0,2} and {0,1,2}, confirmed by brute force".into())
}

/// The instances shared by criteria 3 and 11.
fn q_instances(seed: u64) -> Vec<PSet> {
    let rng = &mut sample::rng(seed ^ 0x51);
    let grounds = sample::grounds();
    (0..50)
        .map(|_| {
            let h = pick_ground(rng, &grounds);
            sample::finite(rng, &h, 4, 10, true)
        })
        .collect()
}

/// Solutions of `X + A = A^3`, or `None` when the candidate pool exceeds
/// the cap.
fn q_solutions(a: &PSet) -> std::result::Result<Option<Vec<PSet>>, String> {
    let target = a.power(3).map_err(fail)?;
    match enumerate_translate_solutions(a, &target) {
        Ok(s) => Ok(Some(s)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(fail(e)),
    }
}

fn q_witnesses(ctx: &mut Ctx) -> Outcome {
    let instances = q_instances(ctx.seed);
    let mut enumerated = 0;
    for a in &instances {
        let report = lemma_q_witnesses(a, 3).map_err(fail)?;
        let size = a.cardinality().unwrap_or(0);
        ensure(report.holds() && report.witnesses.len() == 1 << (size - 1), || {
            format!("A = {a} over {}: {} witnesses, {} verified", a.ground(), report.witnesses.len(), report.verified.iter().filter(|&&v| v).count())
        })?;
        let target = a.power(3).map_err(fail)?;
        let limit = oracle::settle_limit(a, &target, 0);
        for q in &report.witnesses {
            ensure(oracle::sum_agrees(q, a, &target, limit), || {
                format!("A = {a}: Q = {q} fails the pairwise check")
            })?;
        }
        if let Some(solutions) = q_solutions(a)? {
            enumerated += 1;
            let all: HashSet<&PSet> = solutions.iter().collect();
            if let Some(q) = report.witnesses.iter().find(|q| !all.contains(q)) {
                return Err(format!("A = {a}: enumerator misses Q = {q}"));
            }
        }
    }
    Ok(format!(
        "{} instances hold; enumerator completed on {enumerated} and contains every Q",
        instances.len()
    ))
}

fn conjugates(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let grounds = sample::grounds();
    let count = 50;
    for _ in 0..count {
        let h = pick_ground(rng, &grounds);
        let a = sample::finite(rng, &h, 4, 10, true);
        let elems: Vec<usize> = a.head().iter().collect();
        let x1 = elems[rng.gen_range(0..elems.len())];
        let report = conjugate_witnesses(&a, 2, &[x1]).map_err(fail)?;
        let size = elems.len();
        ensure(report.holds() && report.distinct_count >= size, || {
            format!("A = {a} over {h}, x = {x1}: {} distinct, verified {:?}", report.distinct_count, report.verified)
        })?;
        let target = a.power(4).map_err(fail)?;
        let a2 = a.power(2).map_err(fail)?;
        let limit = oracle::settle_limit(&a2, &target, 0);
        for w in &report.witnesses {
            ensure(oracle::sum_agrees(&a2, w, &target, limit), || {
                format!("A = {a}: X = {w} fails the pairwise check")
            })?;
        }
    }
    Ok(format!("{count} instances, each with at least |A| distinct verified witnesses"))
}

fn halo(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let grounds = sample::grounds();
    let per_ground = 1000;
    for h in &grounds {
        for _ in 0..per_ground {
            let x = sample::pset(rng, h, 16, true);
            let y = sample::member(rng, h, 1, 24).expect("H is infinite");
            let by_halo = member_by_halo(&x, y).map_err(fail)?;
            ensure(by_halo == x.member(y as i64), || {
                format!("X = {x} over {h}, y = {y}: halo says {by_halo}")
            })?;
        }
    }
    Ok(format!("{per_ground} pairs on each of {} grounds agree", grounds.len()))
}

fn absorb(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let grounds = sample::grounds();
    let count = 200;
    for _ in 0..count {
        let h = pick_ground(rng, &grounds);
        let e = sample::idempotent(rng, &h, 16);
        let y = sample::member(rng, &h, 0, 24).expect("H is infinite");
        let got = doubleton_absorb_test(&e, y).map_err(fail)?;
        ensure(got == e.member(y as i64), || format!("E = {e} over {h}, y = {y}: test says {got}"))?;
    }
    Ok(format!("{count} idempotents agree with membership"))
}

fn semiline(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let grounds = sample::grounds();
    let count = 200;
    for _ in 0..count {
        let h = pick_ground(rng, &grounds);
        let f = h.frobenius();
        let k = (f + 1).max(0) as usize + rng.gen_range(0..30);
        let zero = rng.gen_bool(0.5);
        let x = sample::pset(rng, &h, 16, zero);
        let line = PSet::semiline(&h, k).map_err(fail)?;
        let sum = line.add(&x).map_err(fail)?;
        let want = PSet::semiline(&h, k + x.min()).map_err(fail)?;
        ensure(sum == want, || format!("k = {k}, X = {x} over {h}: got {sum}"))?;
        let limit = oracle::settle_limit(&line, &x, 0);
        ensure(oracle::sum_agrees(&line, &x, &sum, limit), || {
            format!("k = {k}, X = {x}: pairwise sum differs")
        })?;
    }
    Ok(format!("{count} sums equal the shifted semiline"))
}

fn normalization(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let grounds = sample::grounds();
    let pairs = 500;
    for _ in 0..pairs {
        let h = pick_ground(rng, &grounds);
        let zero = rng.gen_bool(0.5);
        let x = sample::pset(rng, &h, 16, zero);
        let zero = rng.gen_bool(0.5);
        let y = sample::pset(rng, &h, 16, zero);
        let left = normalize(&x.add(&y).map_err(fail)?);
        let right = normalize(&x).add(&normalize(&y)).map_err(fail)?;
        ensure(left == right, || format!("X = {x}, Y = {y} over {h}: {left} vs {right}"))?;
    }
    let n = naturals();
    let trips = 200;
    for _ in 0..trips {
        let s = pick_ground(rng, &grounds);
        let a = sample::pset(rng, &n, 16, true);
        let k = (s.frobenius() + 1).max(0) as usize + rng.gen_range(0..50);
        let lifted = lift(&a, &s, k).map_err(fail)?;
        let back = normalize(&lifted);
        ensure(back == a, || format!("A = {a}, S = {s}, k = {k}: came back as {back}"))?;
    }
    Ok(format!("{pairs} pairs and {trips} lift round trips"))
}

fn automorphisms(_: &mut Ctx) -> Outcome {
    let limit = Duration::from_secs(60);
    let n = naturals();
    let h23 = NumericalSemigroup::from_generators(&[2, 3], true).map_err(fail)?.shared();
    let mut searched = 0;
    for ground in [&n, &h23] {
        for window in 0..=4 {
            let m = TruncatedPowerMonoid::build(ground, window, Variant::P0).map_err(fail)?;
            let start = Instant::now();
            let out = find_automorphisms_with(&m, DEFAULT_STRATEGY, Some(limit)).map_err(fail)?;
            let took = start.elapsed();
            let case = format!("({ground}, {window}, p0)");
            ensure(out.complete && took < limit, || format!("{case}: incomplete after {took:?}"))?;
            ensure(out.automorphisms.contains(&identity(m.len())), || format!("{case}: identity missing"))?;
            for f in &out.automorphisms {
                ensure(oracle::is_homomorphism_naive(&m, f), || format!("{case}: {f:?} fails the re-check"))?;
            }
            ensure(is_group(&out.automorphisms), || format!("{case}: not closed under composition"))?;
            if m.len() <= 9 {
                let brute = find_automorphisms_with(&m, "brute", None).map_err(fail)?;
                ensure(brute.automorphisms == out.automorphisms, || {
                    format!("{case}: brute force found {:?}", brute.automorphisms)
                })?;
            }
            searched += 1;
        }
    }

    let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).map_err(fail)?;
    let out = find_automorphisms_with(&m, DEFAULT_STRATEGY, Some(limit)).map_err(fail)?;
    ensure(out.automorphisms == vec![identity(4)], || {
        format!("(N, 2, p0) gave {:?}", out.automorphisms)
    })?;
    let report = proof_pipeline(&m, &identity(4)).map_err(fail)?;
    ensure(report.all_passed(), || format!("identity failed {:?}", report.first_failure()))?;
    let a = m.index_of_set(&[0, 2]).expect("in window");
    let b = m.index_of_set(&[0, 1, 2]).expect("in window");
    let mut swap = identity(4);
    swap.swap(a, b);
    let report = proof_pipeline(&m, &swap).map_err(fail)?;
    let hom = report.step("homomorphism").expect("always present");
    ensure(!hom.passed && hom.witness.is_some(), || "idempotent swap passed the homomorphism step".into())?;
    Ok(format!(
        "{searched} searches complete; (N, 2, p0) is rigid; swap fails with {}",
        hom.witness.as_deref().unwrap_or_default()
    ))
}

fn truncation(ctx: &mut Ctx) -> Outcome {
    let rng = &mut ctx.rng;
    let mut grounds = sample::grounds();
    grounds.push(NumericalSemigroup::from_generators(&[2, 3], false).map_err(fail)?.shared());
    let mut exhaustive = 0;
    for h in &grounds {
        for variant in [Variant::P0, Variant::P] {
            if variant == Variant::P0 && !h.includes_zero() {
                continue;
            }
            for window in 0.. {
                let m = match TruncatedPowerMonoid::build_capped(h, window, variant, 64) {
                    Ok(m) => m,
                    Err(e) if e.is_cap() => break,
                    Err(e) => return Err(fail(e)),
                };
                let case = format!("({h}, {window}, {variant})");
                ensure(m.associativity_violation().is_none(), || format!("{case}: not associative"))?;
                ensure(oracle::operation_agrees(&m), || format!("{case}: operation differs from pairwise sums"))?;
                exhaustive += 1;
            }
        }
    }
    let samples = 100_000;
    let n = naturals();
    let mut sampled = 0;
    for (ground, variant) in [(&n, Variant::P0), (&n, Variant::P), (&grounds[1], Variant::P0)] {
        for window in 0..=40 {
            let m = match TruncatedPowerMonoid::build(ground, window, variant) {
                Ok(m) => m,
                Err(e) if e.is_cap() => break,
                Err(e) => return Err(fail(e)),
            };
            if m.len() <= 64 {
                continue;
            }
            if let Some((a, b, c)) = m.associativity_violation_sampled(rng, samples) {
                return Err(format!(
                    "({ground}, {window}, {variant}): ({} ⊕ {}) ⊕ {} differs",
                    m.label(a),
                    m.label(b),
                    m.label(c)
                ));
            }
            sampled += 1;
        }
    }
    let m = TruncatedPowerMonoid::build(&n, 2, Variant::P0).map_err(fail)?;
    let labels: Vec<String> = m.find_cancellative().iter().map(|&c| m.label(c)).collect();
    ensure(labels == ["{0}"], || format!("cancellative elements of (N, 2, p0): {labels:?}"))?;
    Ok(format!(
        "{exhaustive} monoids exhaustive, {sampled} sampled with {samples} triples; (N, 2, p0) cancellative = {{0}}"
    ))
}

fn image_bound(ctx: &mut Ctx) -> Outcome {
    let instances = q_instances(ctx.seed);
    let mut checked = 0;
    for a in &instances {
        if let Some(solutions) = q_solutions(a)? {
            let bound = image_size_bound(solutions.len() as u64).map_err(fail)?;
            let size = a.cardinality().unwrap_or(0);
            ensure(size <= bound as usize, || {
                format!("A = {a}: |A| = {size} exceeds bound {bound} from {} solutions", solutions.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} of {} instances enumerated, all within the bound", instances.len()))
}
