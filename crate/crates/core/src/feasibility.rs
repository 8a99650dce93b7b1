//! The decision engine for the generic non-regularity prediction.
//!
//! Fix a prime `p`, a dimension `n`, a weight bound `r`, and an *inertial type*:
//! a multiset of `n` exponents `a_1, ..., a_n` in `[0, p-2]`. The prediction
//! under scrutiny says: every semisimple residual representation that
//!
//! 1. has determinant-on-inertia exponent `a_1 + ... + a_n + n(n-1)/2 mod (p-1)`,
//! 2. arises with `r <= (n-1)/2` and `p > n(n-1)/2 + 1`, and
//! 3. contains a summand of niveau `> 1` whenever `r = (n-1)/2`,
//!
//! fails to be `r`-regular, *provided* each of its summands is attainable: the
//! summand's exponent must be the generic-fiber exponent of some rank-one module
//! whose niveau-1 profile draws its `x` entries from the type's values and its
//! `y` entries from `[0, r]`. [`exhaustive_verify`] enumerates that entire search
//! space and reports any `r`-regular survivor as a counterexample.
//!
//! The attainable sets are closed under the Frobenius twist `kappa -> p kappa`
//! (rotating a profile cyclically rotates its constraint system and multiplies
//! its generic-fiber exponent by `p`), so deduplicating summands by Frobenius
//! orbit loses nothing; a debug flag disables the deduplication for cardinality
//! cross-checks.

use crate::breuil::{enumerate_profiles, ProfileError};
use crate::reps::{InducedSummand, RepError, ResidualRep, SummandRecord};
use crate::tame::{ExponentClass, ParamError, TameParams};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("inertial type prime {ty} does not match parameter prime {params}")]
    PrimeMismatch { ty: i64, params: i64 },
    #[error("type has {ty_len} exponents but the representation has dimension {rep_dim}")]
    DimensionMismatch { ty_len: usize, rep_dim: i64 },
    #[error("precondition `{check}` failed: {detail}")]
    Precondition { check: &'static str, detail: String },
    #[error("candidate budget exceeded for type [{ty}]: {candidates} candidate reps > budget {budget}")]
    BudgetExceeded {
        ty: String,
        candidates: u128,
        budget: u64,
    },
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// A multiset of `n` inertial exponents in `[0, p-2]`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InertialType {
    prime: i64,
    exponents: Vec<i64>,
}

impl InertialType {
    pub fn new(prime: i64, exponents: Vec<i64>) -> Result<Self, VerifyError> {
        // Validate the prime through the same guard as tame parameters.
        TameParams::new(prime, 1)?;
        if exponents.is_empty() {
            return Err(VerifyError::Precondition {
                check: "type-nonempty",
                detail: "an inertial type needs at least one exponent".into(),
            });
        }
        for &a in &exponents {
            if !(0..=prime - 2).contains(&a) {
                return Err(VerifyError::Precondition {
                    check: "type-range",
                    detail: format!("type exponent {a} outside 0..={}", prime - 2),
                });
            }
        }
        let mut exponents = exponents;
        exponents.sort_unstable();
        Ok(InertialType { prime, exponents })
    }

    pub fn prime(&self) -> i64 {
        self.prime
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// The distinct values, ascending (the allowed `x` set for profiles).
    pub fn distinct_values(&self) -> Vec<i64> {
        let mut v = self.exponents.clone();
        v.dedup();
        v
    }

    /// All multisets of size `n` over `[0, p-2]`, in lexicographic order.
    pub fn enumerate_all(prime: i64, n: usize) -> Result<Vec<InertialType>, VerifyError> {
        TameParams::new(prime, 1)?;
        if n == 0 {
            return Err(VerifyError::Precondition {
                check: "type-nonempty",
                detail: "n must be positive".into(),
            });
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn recurse(prime: i64, n: usize, start: i64, current: &mut Vec<i64>, out: &mut Vec<InertialType>) {
            if current.len() == n {
                out.push(InertialType {
                    prime,
                    exponents: current.clone(),
                });
                return;
            }
            for a in start..=prime - 2 {
                current.push(a);
                recurse(prime, n, a, current, out);
                current.pop();
            }
        }
        recurse(prime, n, 0, &mut current, &mut out);
        Ok(out)
    }
}

impl fmt::Display for InertialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The attainable generic-fiber exponents at niveau `d = params.niveau()`: the
/// set of `kappa` values reachable by feasible profiles whose `x` entries come
/// from the type's distinct values and whose `y` entries lie in `[0, weight]`.
pub fn attainable_exponents(
    params: TameParams,
    weight: i64,
    ty: &InertialType,
) -> Result<BTreeSet<i64>, VerifyError> {
    if params.prime() != ty.prime() {
        return Err(VerifyError::PrimeMismatch {
            ty: ty.prime(),
            params: params.prime(),
        });
    }
    let allowed = ty.distinct_values();
    let mut out = BTreeSet::new();
    for profile in enumerate_profiles(params, weight, &allowed)? {
        out.insert(profile.kappa().value());
    }
    Ok(out)
}

/// One named hypothesis check with a human-readable explanation.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HypothesisChecklist {
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisChecklist {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_names(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }

    fn passes_ignoring(&self, skipped: &[&str]) -> bool {
        self.checks
            .iter()
            .filter(|c| !skipped.contains(&c.name))
            .all(|c| c.passed)
    }
}

/// Verdict of the hypothesis screen for one `(type, r, rep)` instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// At least one hypothesis fails; the prediction says nothing about this rep.
    NotApplicable { failed: Vec<&'static str> },
    /// All hypotheses hold: the prediction is that the rep is not `r`-regular.
    PredictsNotRegular,
}

/// A `(type, weight, rep)` triple with matching prime and dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremInstance {
    ty: InertialType,
    weight: i64,
    rep: ResidualRep,
}

impl TheoremInstance {
    pub fn new(ty: InertialType, weight: i64, rep: ResidualRep) -> Result<Self, VerifyError> {
        if ty.prime() != rep.prime() {
            return Err(VerifyError::PrimeMismatch {
                ty: ty.prime(),
                params: rep.prime(),
            });
        }
        if ty.len() as i64 != rep.dimension() {
            return Err(VerifyError::DimensionMismatch {
                ty_len: ty.len(),
                rep_dim: rep.dimension(),
            });
        }
        if weight < 0 {
            return Err(VerifyError::Precondition {
                check: "r-nonnegative",
                detail: format!("r = {weight} must be >= 0"),
            });
        }
        Ok(TheoremInstance { ty, weight, rep })
    }

    pub fn ty(&self) -> &InertialType {
        &self.ty
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn rep(&self) -> &ResidualRep {
        &self.rep
    }

    /// Run the four named hypothesis checks:
    ///
    /// * `det`: determinant-on-inertia exponent equals
    ///   `sum a_j + n(n-1)/2 mod (p-1)`;
    /// * `r-bound`: `2r <= n - 1`;
    /// * `p-bound`: `p > n(n-1)/2 + 1`;
    /// * `big-subquotient`: required only in the boundary case `2r = n - 1`,
    ///   where the rep must contain a summand of niveau `> 1`.
    pub fn check_hypotheses(&self) -> HypothesisChecklist {
        let p = self.ty.prime();
        let n = self.rep.dimension();
        let r = self.weight;
        let mut checks = Vec::with_capacity(4);

        let required_det =
            (self.ty.exponents().iter().sum::<i64>() + n * (n - 1) / 2).rem_euclid(p - 1);
        let got_det = self.rep.det_inertia_exponent();
        checks.push(HypothesisCheck {
            name: "det",
            passed: got_det == required_det,
            detail: format!("det exponent {got_det}, required {required_det} (mod {})", p - 1),
        });

        checks.push(HypothesisCheck {
            name: "r-bound",
            passed: 2 * r <= n - 1,
            detail: format!("2r = {} vs n-1 = {}", 2 * r, n - 1),
        });

        let p_floor = n * (n - 1) / 2 + 1;
        checks.push(HypothesisCheck {
            name: "p-bound",
            passed: p > p_floor,
            detail: format!("p = {p} vs n(n-1)/2 + 1 = {p_floor}"),
        });

        if 2 * r == n - 1 {
            checks.push(HypothesisCheck {
                name: "big-subquotient",
                passed: self.rep.has_big_subquotient(),
                detail: if self.rep.has_big_subquotient() {
                    "a summand of niveau > 1 is present".into()
                } else {
                    "required at 2r = n-1, but all summands have niveau 1".into()
                },
            });
        } else {
            checks.push(HypothesisCheck {
                name: "big-subquotient",
                passed: true,
                detail: format!("not required when 2r = {} < n-1 = {}", 2 * r, n - 1),
            });
        }

        HypothesisChecklist { checks }
    }

    pub fn verdict(&self) -> Verdict {
        let checklist = self.check_hypotheses();
        if checklist.all_passed() {
            Verdict::PredictsNotRegular
        } else {
            Verdict::NotApplicable {
                failed: checklist.failed_names(),
            }
        }
    }
}

/// Options for [`exhaustive_verify`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Maximum number of candidate reps per `(p, type)`; exceeding it is an error.
    pub budget: u64,
    /// Deduplicate summands by Frobenius orbit (default). Disabling is a debug
    /// aid for cardinality cross-checks; it never changes the verdict.
    pub orbit_dedup: bool,
    /// Diagnostic mode: drop the `big-subquotient` hypothesis from the screen, so
    /// the report can exhibit `r`-regular all-niveau-1 reps that demonstrate why
    /// that hypothesis is needed. Exploration output, not an asserted claim.
    pub skip_big_subquotient: bool,
    /// Worker threads for [`exhaustive_verify_all_types`]; `None` uses the global
    /// rayon pool (default: available parallelism).
    pub workers: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: 10_000_000,
            orbit_dedup: true,
            skip_big_subquotient: false,
            workers: None,
        }
    }
}

/// An `r`-regular rep that passed every (non-skipped) hypothesis check.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub type_exponents: Vec<i64>,
    pub rep: String,
    pub summands: Vec<SummandRecord>,
    pub exponents: Vec<i64>,
    pub det_exponent: i64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub p: i64,
    pub n: i64,
    pub r: i64,
    pub types_checked: u64,
    pub reps_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Partitions of `n` into positive parts, parts descending, partitions in
/// descending lexicographic order: `[3] -> [[3], [2,1], [1,1,1]]`.
fn partitions(n: i64) -> Vec<Vec<i64>> {
    fn recurse(rest: i64, max_part: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        let mut part = max_part.min(rest);
        while part >= 1 {
            current.push(part);
            recurse(rest - part, part, current, out);
            current.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    recurse(n, n, &mut Vec::new(), &mut out);
    out
}

/// Group a descending partition into `(part, multiplicity)` pairs.
fn group_partition(partition: &[i64]) -> Vec<(u32, usize)> {
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &part in partition {
        let part = part as u32;
        match groups.last_mut() {
            Some((d, m)) if *d == part => *m += 1,
            _ => groups.push((part, 1)),
        }
    }
    groups
}

/// Iterate all multisets of size `mult` from `pool` (by index, non-decreasing),
/// invoking `f` with the chosen values appended to `prefix`.
fn for_each_multiset(
    pool: &[i64],
    niveau: u32,
    mult: usize,
    start: usize,
    prefix: &mut Vec<(u32, i64)>,
    f: &mut dyn FnMut(&mut Vec<(u32, i64)>),
) {
    if mult == 0 {
        f(prefix);
        return;
    }
    for i in start..pool.len() {
        prefix.push((niveau, pool[i]));
        for_each_multiset(pool, niveau, mult - 1, i, prefix, f);
        prefix.pop();
    }
}

fn for_each_rep_in_groups(
    groups: &[(u32, usize)],
    pools: &BTreeMap<u32, Vec<i64>>,
    prefix: &mut Vec<(u32, i64)>,
    f: &mut dyn FnMut(&mut Vec<(u32, i64)>),
) {
    match groups.split_first() {
        None => f(prefix),
        Some((&(d, mult), rest)) => {
            let pool = &pools[&d];
            for_each_multiset(pool, d, mult, 0, prefix, &mut |prefix| {
                for_each_rep_in_groups(rest, pools, prefix, f);
            });
        }
    }
}

/// Build the niveau-`d` summand pool for a type: attainable exponents that are
/// primitive, optionally collapsed to Frobenius-orbit representatives.
fn summand_pool(
    prime: i64,
    niveau: u32,
    weight: i64,
    ty: &InertialType,
    orbit_dedup: bool,
) -> Result<Vec<i64>, VerifyError> {
    let params = TameParams::new(prime, niveau)?;
    let attainable = attainable_exponents(params, weight, ty)?;
    let mut pool = BTreeSet::new();
    for kappa in attainable {
        let class = ExponentClass::new(params, kappa);
        if class.is_primitive() {
            if orbit_dedup {
                pool.insert(class.orbit_min().value());
            } else {
                pool.insert(kappa);
            }
        }
    }
    Ok(pool.into_iter().collect())
}

fn check_preconditions(p: i64, n: i64, r: i64) -> Result<(), VerifyError> {
    let p_floor = n * (n - 1) / 2 + 1;
    if p <= p_floor {
        return Err(VerifyError::Precondition {
            check: "p-bound",
            detail: format!("need p > n(n-1)/2 + 1 = {p_floor}, got p = {p}"),
        });
    }
    if r < 0 || 2 * r > n - 1 {
        return Err(VerifyError::Precondition {
            check: "r-bound",
            detail: format!("need 0 <= 2r <= n-1 = {}, got r = {r}", n - 1),
        });
    }
    if r > p - 2 {
        return Err(VerifyError::Precondition {
            check: "r-weight",
            detail: format!("need r <= p-2 = {}, got r = {r}", p - 2),
        });
    }
    Ok(())
}

/// Enumerate every candidate rep for one inertial type and screen it.
///
/// Candidates are multisets of primitive attainable summands over all niveau
/// partitions of `n = |type|`. Each candidate that passes the hypothesis screen
/// must fail `r`-regularity; survivors are returned as counterexamples (an empty
/// list verifies the prediction on this type). The total number of candidates is
/// computed up front and compared against `options.budget` before any work.
pub fn exhaustive_verify(
    ty: &InertialType,
    r: i64,
    options: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let p = ty.prime();
    let n = ty.len() as i64;
    check_preconditions(p, n, r)?;

    let mut pools: BTreeMap<u32, Vec<i64>> = BTreeMap::new();
    for d in 1..=n as u32 {
        pools.insert(d, summand_pool(p, d, r, ty, options.orbit_dedup)?);
    }

    let all_partitions = partitions(n);
    let mut total_candidates: u128 = 0;
    for partition in &all_partitions {
        let mut count: u128 = 1;
        for (d, mult) in group_partition(partition) {
            let pool_len = pools[&d].len() as u128;
            count = count.saturating_mul(binomial(pool_len + mult as u128 - 1, mult as u128));
        }
        total_candidates += count;
    }
    if total_candidates > options.budget as u128 {
        return Err(VerifyError::BudgetExceeded {
            ty: ty.to_string(),
            candidates: total_candidates,
            budget: options.budget,
        });
    }

    let skipped: &[&str] = if options.skip_big_subquotient {
        &["big-subquotient"]
    } else {
        &[]
    };

    let mut reps_checked: u64 = 0;
    let mut counterexamples = Vec::new();
    for partition in &all_partitions {
        let groups = group_partition(partition);
        let mut prefix = Vec::new();
        let mut build_error: Option<VerifyError> = None;
        for_each_rep_in_groups(&groups, &pools, &mut prefix, &mut |combo| {
            if build_error.is_some() {
                return;
            }
            reps_checked += 1;
            let rep = match combo
                .iter()
                .map(|&(d, kappa)| InducedSummand::from_parts(p, d, kappa))
                .collect::<Result<Vec<_>, _>>()
                .and_then(ResidualRep::new)
            {
                Ok(rep) => rep,
                Err(err) => {
                    build_error = Some(err.into());
                    return;
                }
            };
            let instance = TheoremInstance {
                ty: ty.clone(),
                weight: r,
                rep,
            };
            let checklist = instance.check_hypotheses();
            if checklist.passes_ignoring(skipped) && instance.rep.is_r_regular(r) {
                counterexamples.push(Counterexample {
                    type_exponents: ty.exponents().to_vec(),
                    rep: instance.rep.to_string(),
                    summands: instance.rep.summand_records(),
                    exponents: instance.rep.exponents(),
                    det_exponent: instance.rep.det_inertia_exponent(),
                });
            }
        });
        if let Some(err) = build_error {
            return Err(err);
        }
    }
    debug_assert_eq!(reps_checked as u128, total_candidates);

    // Re-validate every reported counterexample from scratch: it must be
    // r-regular and pass the (non-skipped) hypothesis screen.
    for ce in &counterexamples {
        let rep = ResidualRep::parse(p, &ce.rep).expect("counterexample rep must re-parse");
        let instance = TheoremInstance::new(ty.clone(), r, rep).expect("counterexample must rebuild");
        assert!(
            instance.rep().is_r_regular(r),
            "internal invariant: reported counterexample must be r-regular"
        );
        assert!(
            instance.check_hypotheses().passes_ignoring(skipped),
            "internal invariant: reported counterexample must pass the hypothesis screen"
        );
    }

    Ok(VerificationReport {
        p,
        n,
        r,
        types_checked: 1,
        reps_checked,
        counterexamples,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

/// Run [`exhaustive_verify`] over every inertial type of size `n`, in parallel
/// across types, and merge the reports (deterministically, in type order).
pub fn exhaustive_verify_all_types(
    p: i64,
    n: usize,
    r: i64,
    options: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    check_preconditions(p, n as i64, r)?;
    let types = InertialType::enumerate_all(p, n)?;

    let run = || -> Vec<Result<VerificationReport, VerifyError>> {
        types
            .par_iter()
            .map(|ty| exhaustive_verify(ty, r, options))
            .collect()
    };
    let results = match options.workers {
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("failed to build worker pool")
            .install(run),
        None => run(),
    };

    let mut merged = VerificationReport {
        p,
        n: n as i64,
        r,
        types_checked: 0,
        reps_checked: 0,
        counterexamples: Vec::new(),
        elapsed_ms: 0,
    };
    for result in results {
        let report = result?;
        merged.types_checked += 1;
        merged.reps_checked += report.reps_checked;
        merged.counterexamples.extend(report.counterexamples);
    }
    merged.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(p: i64, exps: &[i64]) -> InertialType {
        InertialType::new(p, exps.to_vec()).expect("valid test type")
    }

    #[test]
    fn attainable_niveau_one_examples() {
        let t1 = TameParams::new(5, 1).unwrap();
        let set0 = attainable_exponents(t1, 0, &ty(5, &[2])).unwrap();
        assert_eq!(set0.into_iter().collect::<Vec<_>>(), vec![2]);
        let set1 = attainable_exponents(t1, 1, &ty(5, &[2])).unwrap();
        assert_eq!(set1.into_iter().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn attainable_is_monotone_in_weight() {
        let params = TameParams::new(7, 2).unwrap();
        let t = ty(7, &[0, 2, 5]);
        let mut previous = BTreeSet::new();
        for r in 0..=3 {
            let current = attainable_exponents(params, r, &t).unwrap();
            assert!(
                previous.is_subset(&current),
                "attainable set must grow with r (r = {r})"
            );
            previous = current;
        }
    }

    #[test]
    fn attainable_contains_worked_kappa() {
        let params = TameParams::new(5, 2).unwrap();
        let set = attainable_exponents(params, 1, &ty(5, &[1, 2])).unwrap();
        assert!(set.contains(&16), "profile x=(1,2), y=(0,1) reaches 16");
    }

    #[test]
    fn attainable_is_frobenius_closed() {
        // Rotating a profile shows p*kappa is attainable whenever kappa is.
        for (p, d, r, exps) in [
            (5i64, 2u32, 1i64, vec![1i64, 2]),
            (7, 2, 1, vec![0, 2, 5]),
            (7, 3, 1, vec![0, 1, 5]),
            (5, 3, 2, vec![0, 3]),
        ] {
            let params = TameParams::new(p, d).unwrap();
            let t = ty(p, &exps);
            let set = attainable_exponents(params, r, &t).unwrap();
            for &kappa in &set {
                let twisted = ExponentClass::new(params, kappa).frobenius_twist().value();
                assert!(
                    set.contains(&twisted),
                    "p={p} d={d} r={r}: {kappa} attainable but twist {twisted} is not"
                );
            }
        }
    }

    #[test]
    fn det_check_worked_example() {
        // p=11, n=3, r=1, type {0,3,7}: required det = 0+3+7+3 = 13 = 3 mod 10.
        let t = ty(11, &[0, 3, 7]);
        let rep = ResidualRep::parse(11, "1:1,1:4,1:8").unwrap();
        let instance = TheoremInstance::new(t, 1, rep).unwrap();
        let checklist = instance.check_hypotheses();
        let det = checklist.checks.iter().find(|c| c.name == "det").unwrap();
        assert!(det.passed, "1+4+8 = 13 = 3 mod 10");
        assert!(det.detail.contains("required 3"));
    }

    #[test]
    fn p_bound_examples() {
        let t = ty(5, &[0, 0, 0]);
        let rep = ResidualRep::parse(5, "1:0,1:0,1:0").unwrap();
        let instance = TheoremInstance::new(t, 0, rep).unwrap();
        let checklist = instance.check_hypotheses();
        assert!(checklist.checks.iter().find(|c| c.name == "p-bound").unwrap().passed);
        // p=3 fails the bound for n=3 (needs p > 4); surfaced as a precondition
        // error by the verifier.
        let err = exhaustive_verify(&ty(3, &[0, 0, 0]), 0, &VerifyOptions::default()).unwrap_err();
        assert!(matches!(err, VerifyError::Precondition { check: "p-bound", .. }));
    }

    #[test]
    fn big_subquotient_boundary_case() {
        // n=3, r=1 sits at 2r = n-1, so all-niveau-1 reps fail the screen.
        let t = ty(11, &[0, 3, 7]);
        let rep = ResidualRep::parse(11, "1:1,1:4,1:8").unwrap();
        let instance = TheoremInstance::new(t.clone(), 1, rep).unwrap();
        assert_eq!(
            instance.verdict(),
            Verdict::NotApplicable { failed: vec!["big-subquotient"] }
        );
        // At r=0 the check is vacuous.
        let rep = ResidualRep::parse(11, "1:1,1:4,1:8").unwrap();
        let instance = TheoremInstance::new(t, 0, rep).unwrap();
        assert_eq!(instance.verdict(), Verdict::PredictsNotRegular);
    }

    #[test]
    fn verify_small_type_hand_counted() {
        // p=7, n=3, r=0, type {0,1,2}: at r=0 only constant profiles are feasible,
        // so niveau-1 pools are {0,1,2} and higher-niveau pools are empty (s*x is
        // Frobenius-fixed, hence imprimitive). Candidates: the 10 multisets of
        // size 3 from {0,1,2}.
        let report = exhaustive_verify(&ty(7, &[0, 1, 2]), 0, &VerifyOptions::default()).unwrap();
        assert_eq!(report.reps_checked, 10);
        assert_eq!(report.types_checked, 1);
        assert!(report.counterexamples.is_empty());
    }

    #[test]
    fn diagnostic_mode_exhibits_boundary_counterexamples() {
        // p=11, n=3, r=1, type {0,3,7}: without the big-subquotient hypothesis
        // the all-niveau-1 rep 1:1,1:4,1:8 passes det (13 = 3 mod 10) and is
        // 1-regular, so the diagnostic run must surface at least it.
        let t = ty(11, &[0, 3, 7]);
        let diagnostic = VerifyOptions {
            skip_big_subquotient: true,
            ..VerifyOptions::default()
        };
        let report = exhaustive_verify(&t, 1, &diagnostic).unwrap();
        assert!(!report.counterexamples.is_empty());
        assert!(
            report
                .counterexamples
                .iter()
                .any(|ce| ce.exponents == vec![1, 4, 8]),
            "expected the hand-derived boundary example to appear"
        );
        // With the hypothesis active the same search is clean.
        let clean = exhaustive_verify(&t, 1, &VerifyOptions::default()).unwrap();
        assert!(clean.counterexamples.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let small = VerifyOptions {
            budget: 1,
            ..VerifyOptions::default()
        };
        let err = exhaustive_verify(&ty(7, &[0, 1, 2]), 0, &small).unwrap_err();
        assert!(matches!(err, VerifyError::BudgetExceeded { candidates: 10, budget: 1, .. }));
    }

    #[test]
    fn orbit_dedup_only_changes_cardinalities() {
        let t = ty(7, &[0, 2, 5]);
        let with_dedup = exhaustive_verify(&t, 1, &VerifyOptions::default()).unwrap();
        let without = exhaustive_verify(
            &t,
            1,
            &VerifyOptions {
                orbit_dedup: false,
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        assert!(without.reps_checked >= with_dedup.reps_checked);
        assert_eq!(with_dedup.counterexamples.is_empty(), without.counterexamples.is_empty());
    }

    #[test]
    fn type_enumeration_counts() {
        assert_eq!(InertialType::enumerate_all(13, 3).unwrap().len(), 364);
        assert_eq!(InertialType::enumerate_all(7, 3).unwrap().len(), 56);
        // C(p-1 + n - 1, n) with p=7, n=3: C(8,3) = 56.
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(
            group_partition(&[2, 1, 1]),
            vec![(2u32, 1usize), (1u32, 2usize)]
        );
    }

    #[test]
    fn all_types_merge_is_deterministic() {
        let a = exhaustive_verify_all_types(7, 3, 0, &VerifyOptions::default()).unwrap();
        let b = exhaustive_verify_all_types(
            7,
            3,
            0,
            &VerifyOptions {
                workers: Some(2),
                ..VerifyOptions::default()
            },
        )
        .unwrap();
        assert_eq!(a.types_checked, 56);
        assert_eq!(a.types_checked, b.types_checked);
        assert_eq!(a.reps_checked, b.reps_checked);
        assert_eq!(a.counterexamples, b.counterexamples);
        assert!(a.counterexamples.is_empty());
    }
}
