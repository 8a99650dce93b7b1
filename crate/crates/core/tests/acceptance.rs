//! Acceptance suite: eight exhaustive, desk-scale checks.
//!
//! Each test covers one numbered criterion and prints a single
//! `ACCEPTANCE CRITERION n (label): PASS|FAIL` line; the FAIL form is emitted
//! from a drop guard when an assertion unwinds, so every run yields one
//! verdict line per criterion (visible with `--nocapture`).

use std::path::{Path, PathBuf};

use modp_lab::breuil::{enumerate_profiles, ProfileError};
use modp_lab::matgroup::{
    admissible_weights, build_monomial_induction, factor_prime_power, find_intertwiner,
    load_generator_file, FiniteField, GeneratedGroup, RepresentationPair, SquareMatrix,
    DEFAULT_CAP,
};
use modp_lab::reps::InducedSummand;
use modp_lab::{
    exhaustive_verify_all_types, ExponentClass, ResidualRep, TameParams, VerifyOptions,
};

/// Prints the verdict line for one criterion; FAIL unless `pass` was reached.
struct Verdict {
    number: u32,
    label: &'static str,
    passed: bool,
}

impl Verdict {
    fn start(number: u32, label: &'static str) -> Verdict {
        Verdict {
            number,
            label,
            passed: false,
        }
    }

    fn pass(mut self) {
        self.passed = true;
    }
}

impl Drop for Verdict {
    fn drop(&mut self) {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        println!(
            "ACCEPTANCE CRITERION {} ({}): {}",
            self.number, self.label, verdict
        );
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn field(q: u64) -> FiniteField {
    let (l, m) = factor_prime_power(q).expect("prime power");
    FiniteField::with_default_modulus(l, m).expect("field")
}

/// All size-`size` subsets of `values`, in lexicographic order.
fn combinations(values: &[i64], size: usize) -> Vec<Vec<i64>> {
    fn rec(values: &[i64], size: usize, start: usize, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..values.len() {
            current.push(values[i]);
            rec(values, size, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(values, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Criterion 1: the closed-form profile exponent and the exponent read off the
/// assembled rank-one module agree on every feasible profile, for all
/// p in {3,5,7,11}, d in {1,2,3}, r in {0,1,2}, over every allowed_x subset of
/// size <= 3. Weights r > p-2 are out of range by definition and must be
/// rejected rather than silently skipped.
#[test]
fn criterion_1_exponent_formula_equivalence() {
    let verdict = Verdict::start(1, "generic-fiber exponent formula equivalence");
    let mut checked: u64 = 0;
    for &p in &[3i64, 5, 7, 11] {
        let values: Vec<i64> = (0..=p - 2).collect();
        for d in 1..=3u32 {
            let params = TameParams::new(p, d).unwrap();
            for r in 0..=2i64 {
                if r > p - 2 {
                    match enumerate_profiles(params, r, &[0]) {
                        Err(ProfileError::WeightOutOfRange { .. }) => {}
                        Err(err) => panic!("p={p} d={d} r={r}: unexpected error {err}"),
                        Ok(_) => panic!("p={p} d={d} r={r}: out-of-range weight accepted"),
                    }
                    continue;
                }
                for size in 1..=3usize.min(values.len()) {
                    for subset in combinations(&values, size) {
                        for profile in enumerate_profiles(params, r, &subset).unwrap() {
                            let closed_form = profile.kappa().value();
                            let module = profile
                                .to_rank_one()
                                .unwrap()
                                .generic_fiber_exponent()
                                .value();
                            assert_eq!(
                                closed_form,
                                module,
                                "p={p} d={d} r={r} x={:?} y={:?}",
                                profile.x(),
                                profile.y()
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 10_000, "only {checked} profiles exercised");
    verdict.pass();
}

/// Criterion 2: the exhaustive screen finds no counterexample to the
/// non-regularity prediction over every inertial type of size 3 for
/// p in {7,11,13} and r in {0,1}, with the full hypothesis set active.
#[test]
fn criterion_2_exhaustive_theorem_verification() {
    let verdict = Verdict::start(2, "exhaustive non-regularity verification");
    let options = VerifyOptions::default();
    for &p in &[7i64, 11, 13] {
        let m = (p - 1) as u64;
        let expected_types = m * (m + 1) * (m + 2) / 6;
        for r in [0i64, 1] {
            let report = exhaustive_verify_all_types(p, 3, r, &options).unwrap();
            assert_eq!(report.types_checked, expected_types, "p={p} r={r}");
            assert!(report.reps_checked > 0, "p={p} r={r}: empty sweep");
            assert!(
                report.counterexamples.is_empty(),
                "p={p} r={r}: {:?}",
                report.counterexamples
            );
        }
    }
    verdict.pass();
}

/// Criterion 3: the shipped 12-element rotation fixture annihilates the
/// trivial character (every element has eigenvalue 1), yet the trivial
/// character is not a quotient: no intertwiner exists at mismatched
/// dimensions by contract.
#[test]
fn criterion_3_a4_annihilation_without_intertwiner() {
    let verdict = Verdict::start(3, "A4-style annihilation without intertwiner");
    let (f7, rho_gens) = load_generator_file(fixture("a4_rho_f7.json")).unwrap();
    let (_, theta_gens) = load_generator_file(fixture("a4_theta_trivial_f7.json")).unwrap();
    let pair = RepresentationPair::build(
        f7,
        rho_gens.clone(),
        theta_gens.clone(),
        DEFAULT_CAP,
    )
    .unwrap();
    assert_eq!(pair.order(), 12);
    let report = pair.annihilation_holds();
    assert!(report.holds, "witness: {:?}", report.witness);
    let intertwiner = find_intertwiner(&rho_gens, &theta_gens).unwrap();
    assert!(intertwiner.is_none(), "theta must not embed in rho");
    verdict.pass();
}

/// Criterion 4: kernel containment holds on >= 50 constructed pairs (monomial
/// self-pairs and diagonal groups paired with one coordinate character) over
/// q in {4,7,9,13}, each satisfying the annihilation precondition with an
/// irreducible theta.
#[test]
fn criterion_4_kernel_lemma_property_suite() {
    let verdict = Verdict::start(4, "kernel containment across constructed pairs");
    let mut satisfied = 0usize;
    for &q in &[4u64, 7, 9, 13] {
        let field = field(q);
        let zeta = field.smallest_primitive_element();
        let pow = |e: u64| field.pow(zeta, e);

        // Monomial inductions paired with themselves: theta = rho is
        // irreducible and annihilation is the Cayley-Hamilton identity.
        for exps in [[1u64, 2, 4], [0, 1, 2]] {
            let induction = build_monomial_induction(field.clone(), exps).unwrap();
            let group = induction.close(DEFAULT_CAP).unwrap();
            assert!(group.is_irreducible(), "q={q} exps={exps:?} reducible");
            let gens = induction.generators();
            let pair =
                RepresentationPair::build(field.clone(), gens.clone(), gens, DEFAULT_CAP)
                    .unwrap();
            let report = pair
                .kernel_containment(DEFAULT_CAP)
                .expect("self-pair preconditions");
            assert!(report.holds, "q={q} monomial {exps:?}");
            satisfied += 1;
        }

        // Diagonal groups with theta = one coordinate character (1-dim, hence
        // irreducible; annihilation holds since the coordinate is a root of
        // every diagonal characteristic polynomial).
        let generator_sets: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![pow(1), pow(0), pow(2)]],
            vec![vec![pow(1), pow(1), 1], vec![1, pow(1), pow(1)]],
            vec![vec![pow(1), 1, 1], vec![1, pow(1), 1], vec![1, 1, pow(1)]],
            vec![vec![pow(1), 1]],
        ];
        for diag_gens in generator_sets {
            let width = diag_gens[0].len();
            for coord in 0..width {
                let rho: Vec<SquareMatrix> = diag_gens
                    .iter()
                    .map(|d| SquareMatrix::diagonal(field.clone(), d).unwrap())
                    .collect();
                let theta: Vec<SquareMatrix> = diag_gens
                    .iter()
                    .map(|d| SquareMatrix::new(field.clone(), 1, vec![d[coord]]).unwrap())
                    .collect();
                let pair =
                    RepresentationPair::build(field.clone(), rho, theta, DEFAULT_CAP).unwrap();
                let report = pair
                    .kernel_containment(DEFAULT_CAP)
                    .expect("diagonal-pair preconditions");
                assert!(report.holds, "q={q} coord={coord}");
                satisfied += 1;
            }
        }
    }
    assert!(satisfied >= 50, "only {satisfied} pairs satisfied the preconditions");
    verdict.pass();
}

/// Criterion 5: in the monomial inductions over q in {4,7,13}, every element
/// outside the diagonal subgroup is regular and the group is generated by its
/// regular elements; likewise a full-Jordan-block group acting irreducibly.
#[test]
fn criterion_5_regular_criteria_lemma() {
    let verdict = Verdict::start(5, "regular elements in monomial and unipotent groups");
    for &q in &[4u64, 7, 13] {
        let field = field(q);
        let induction = build_monomial_induction(field, [1, 2, 4]).unwrap();
        let group = induction.close(DEFAULT_CAP).unwrap();
        let mut off_diagonal = 0usize;
        for element in group.elements() {
            if !element.is_diagonal() {
                assert!(
                    element.is_regular(),
                    "q={q}: non-diagonal element {element} not regular"
                );
                off_diagonal += 1;
            }
        }
        assert!(off_diagonal > 0, "q={q}: no off-diagonal elements");
        assert!(
            group.is_regular_generated(DEFAULT_CAP).unwrap(),
            "q={q}: regular elements fail to generate"
        );
    }

    let f3 = FiniteField::prime_field(3).unwrap();
    let j3 = SquareMatrix::new(f3.clone(), 3, vec![1, 1, 0, 0, 1, 1, 0, 0, 1]).unwrap();
    let shift = SquareMatrix::cyclic_shift(f3.clone(), 3).unwrap();
    let group = GeneratedGroup::generate(f3, 3, &[j3, shift], DEFAULT_CAP).unwrap();
    assert!(group.is_irreducible(), "Jordan-block group must act irreducibly");
    assert!(group.is_regular_generated(DEFAULT_CAP).unwrap());
    verdict.pass();
}

/// Criterion 6: the weight-congruence filter leaves exactly the minimal weight
/// for q in {5,7,11} at n = 3 and q in {5,7} at n = 4.
#[test]
fn criterion_6_weight_filter() {
    let verdict = Verdict::start(6, "admissible-weight filter");
    for &q in &[5u64, 7, 11] {
        let weights: Vec<Vec<u64>> = admissible_weights(q, 3).unwrap().into_iter().collect();
        assert_eq!(weights, vec![vec![1, 0, 0]], "q={q}, n=3");
    }
    for &q in &[5u64, 7] {
        let weights: Vec<Vec<u64>> = admissible_weights(q, 4).unwrap().into_iter().collect();
        assert_eq!(weights, vec![vec![1, 0, 0, 0]], "q={q}, n=4");
    }
    verdict.pass();
}

/// Brute-force regularity oracle: search for a cyclic vector by testing every
/// vector v and checking whether (v, Mv, ..., M^(n-1)v) is a basis.
fn cyclic_vector_oracle(m: &SquareMatrix) -> bool {
    let field = m.field().clone();
    let n = m.dim();
    let q = field.size();
    let total = q.pow(n as u32);
    for code in 0..total {
        let mut v = Vec::with_capacity(n);
        let mut rest = code;
        for _ in 0..n {
            v.push((rest % q) as u32);
            rest /= q;
        }
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        let mut columns = vec![v];
        for _ in 1..n {
            let next = m.apply(columns.last().unwrap());
            columns.push(next);
        }
        let mut entries = vec![0u32; n * n];
        for (j, col) in columns.iter().enumerate() {
            for (i, &value) in col.iter().enumerate() {
                entries[i * n + j] = value;
            }
        }
        if SquareMatrix::new(field.clone(), n, entries)
            .unwrap()
            .is_invertible()
        {
            return true;
        }
    }
    false
}

/// Criterion 7: over all 11232 elements of the full 3x3 general linear group
/// over F_3, the minimal-polynomial regularity test agrees with the
/// brute-force cyclic-vector oracle.
#[test]
fn criterion_7_regularity_oracle_equivalence() {
    let verdict = Verdict::start(7, "regularity vs cyclic-vector oracle on GL3(F3)");
    let f3 = FiniteField::prime_field(3).unwrap();
    let transvection =
        SquareMatrix::new(f3.clone(), 3, vec![1, 1, 0, 0, 1, 0, 0, 0, 1]).unwrap();
    let shift = SquareMatrix::cyclic_shift(f3.clone(), 3).unwrap();
    let scale = SquareMatrix::diagonal(f3.clone(), &[2, 1, 1]).unwrap();
    let gl3 = GeneratedGroup::generate(f3, 3, &[transvection, shift, scale], 20_000).unwrap();
    assert_eq!(gl3.order(), 11_232, "expected the full general linear group");
    for element in gl3.elements() {
        assert_eq!(
            element.is_regular(),
            cyclic_vector_oracle(element),
            "disagreement at {element}"
        );
    }
    verdict.pass();
}

fn partitions_of(n: usize) -> Vec<Vec<u32>> {
    match n {
        1 => vec![vec![1]],
        2 => vec![vec![2], vec![1, 1]],
        3 => vec![vec![3], vec![2, 1], vec![1, 1, 1]],
        4 => vec![
            vec![4],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ],
        _ => unreachable!("n <= 4"),
    }
}

/// Choose a multiset of `count` kappas (non-decreasing pool indices) for the
/// current niveau group, then recurse into the remaining groups.
fn pick_group(
    p: i64,
    groups: &[(u32, usize)],
    pools: &[Vec<i64>],
    count: usize,
    start: usize,
    chosen: &mut Vec<(u32, i64)>,
    f: &mut dyn FnMut(&ResidualRep),
) {
    if count == 0 {
        for_each_rep(p, &groups[1..], pools, chosen, f);
        return;
    }
    let (d, _) = groups[0];
    let pool = &pools[d as usize];
    for i in start..pool.len() {
        chosen.push((d, pool[i]));
        pick_group(p, groups, pools, count - 1, i, chosen, f);
        chosen.pop();
    }
}

/// Enumerate every residual rep whose niveau structure matches `groups`.
fn for_each_rep(
    p: i64,
    groups: &[(u32, usize)],
    pools: &[Vec<i64>],
    chosen: &mut Vec<(u32, i64)>,
    f: &mut dyn FnMut(&ResidualRep),
) {
    match groups.first() {
        None => {
            let summands: Vec<InducedSummand> = chosen
                .iter()
                .map(|&(d, kappa)| InducedSummand::from_parts(p, d, kappa).unwrap())
                .collect();
            f(&ResidualRep::new(summands).unwrap());
        }
        Some(&(_, count)) => pick_group(p, groups, pools, count, 0, chosen, f),
    }
}

/// Criterion 8: over every residual rep with p <= 13, n <= 4 (all primitive
/// inducing exponents, all niveau partitions) and r <= 2:
/// the pigeonhole bound forces non-regularity whenever n(r+2) > p; twisting
/// shifts the determinant exponent by n*t; and when the twist is carry-free
/// it shifts the exponent multiset by t and preserves r-regularity. A frozen
/// boundary example shows the shift law genuinely needs the carry-free
/// hypothesis.
#[test]
fn criterion_8_pigeonhole_and_twist_invariances() {
    let verdict = Verdict::start(8, "pigeonhole bound and twist invariances");
    let mut reps_checked: u64 = 0;
    for &p in &[3i64, 5, 7, 11, 13] {
        let mut pools: Vec<Vec<i64>> = vec![Vec::new(); 5];
        for d in 1..=4u32 {
            let params = TameParams::new(p, d).unwrap();
            pools[d as usize] = (0..params.exponent_modulus())
                .filter(|&k| ExponentClass::new(params, k).is_primitive())
                .collect();
        }
        for n in 1..=4usize {
            for partition in partitions_of(n) {
                // Collapse the partition into (niveau, multiplicity) groups.
                let mut groups: Vec<(u32, usize)> = Vec::new();
                for d in partition {
                    match groups.last_mut() {
                        Some((last, count)) if *last == d => *count += 1,
                        _ => groups.push((d, 1)),
                    }
                }
                for_each_rep(p, &groups, &pools, &mut Vec::new(), &mut |rep| {
                    reps_checked += 1;
                    for r in 0..=2i64 {
                        if (n as i64) * (r + 2) > p {
                            assert!(
                                !rep.is_r_regular(r),
                                "pigeonhole: p={p} r={r} rep={rep}"
                            );
                        }
                    }
                    let det = rep.det_inertia_exponent();
                    let mut base = rep.exponents();
                    base.sort_unstable();
                    for t in 0..p - 1 {
                        let twisted = rep.twist(t);
                        let expected_det = (det + (n as i64) * t).rem_euclid(p - 1);
                        assert_eq!(
                            twisted.det_inertia_exponent(),
                            expected_det,
                            "det shift: p={p} t={t} rep={rep}"
                        );
                        if rep.twist_is_carry_free(t) {
                            let mut shifted: Vec<i64> = base.iter().map(|a| a + t).collect();
                            shifted.sort_unstable();
                            let mut twisted_exps = twisted.exponents();
                            twisted_exps.sort_unstable();
                            assert_eq!(
                                twisted_exps, shifted,
                                "carry-free shift: p={p} t={t} rep={rep}"
                            );
                            for r in 0..=2i64 {
                                assert_eq!(
                                    twisted.is_r_regular(r),
                                    rep.is_r_regular(r),
                                    "regularity transport: p={p} t={t} r={r} rep={rep}"
                                );
                            }
                        }
                    }
                });
            }
        }
    }
    assert!(reps_checked > 100_000, "only {reps_checked} reps enumerated");

    // Boundary example: a twist with a digit carry changes the multiset in a
    // way the naive shift law does not predict.
    let rep = ResidualRep::parse(5, "2:16").unwrap();
    assert!(!rep.twist_is_carry_free(2));
    let mut exps = rep.twist(2).exponents();
    exps.sort_unstable();
    assert_eq!(exps, vec![0, 4]);
    assert_ne!(exps, vec![3, 5], "naive shift would predict [3, 5]");
    verdict.pass();
}
