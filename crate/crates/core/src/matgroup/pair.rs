//! Paired representations `(rho, theta)` of a common abstract group given by
//! generators, and the lemma checks that quantify over all of `G`.
//!
//! The pair is realized as the closure of the *paired* generators
//! `(rho(g_i), theta(g_i))` under multiplication: the set of all
//! `(rho(w), theta(w))` for words `w`. That closure is itself a finite group
//! (the graph of theta over rho exactly when no two pairs share a rho
//! component), so well-definedness of theta on `rho(G)` and kernel
//! containment `ker rho <= ker theta` are the *same* finite check: does the
//! pair group contain `(I, B)` with `B != I`?

use super::field::FiniteField;
use super::group::{GeneratedGroup, GroupError};
use super::matrix::{MatrixError, SquareMatrix};
use super::poly::Polynomial;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Pairwise product checks (`|G|^2` lookups) refuse to run above this size.
pub const PAIRWISE_CHECK_CAP: usize = 2_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("rho has {rho} generators but theta has {theta}")]
    GeneratorCountMismatch { rho: usize, theta: usize },
    #[error("{side} generator {index} lives in a different field")]
    MixedFields { side: &'static str, index: usize },
    #[error("{side} generator {index} has dimension {got}, expected {expected}")]
    MixedDimensions {
        side: &'static str,
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("{side} generator {index} is singular")]
    Singular { side: &'static str, index: usize },
    #[error("paired closure exceeded the cap {cap} (partial size {partial})")]
    CapExceeded { cap: usize, partial: usize },
    #[error("preconditions failed: {}", failed.join("; "))]
    PreconditionFailed { failed: Vec<String> },
    #[error("group of size {size} exceeds the pairwise-check cap {cap}")]
    PairwiseCheckTooLarge { size: usize, cap: usize },
    #[error("intertwiner search space of {combinations} combinations exceeds the cap {cap}")]
    SearchSpaceTooLarge { combinations: u64, cap: u64 },
    #[error("family has {got} polynomials, expected one per element ({expected})")]
    FamilySizeMismatch { got: usize, expected: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A matrix rendered for reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct MatrixWitness {
    pub entries: Vec<u32>,
    pub display: String,
}

impl MatrixWitness {
    fn of(m: &SquareMatrix) -> MatrixWitness {
        MatrixWitness {
            entries: m.entries().to_vec(),
            display: m.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct AnnihilationReport {
    pub holds: bool,
    pub elements_checked: usize,
    /// The first `(rho(g), theta(g))` where `charpoly(rho(g))(theta(g)) != 0`.
    pub witness: Option<AnnihilationWitness>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct AnnihilationWitness {
    pub rho: MatrixWitness,
    pub theta: MatrixWitness,
    pub char_poly: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct KernelReport {
    pub holds: bool,
    pub elements_checked: usize,
    /// A pair `(I, theta(g) != I)` violating the containment, if any.
    pub witness: Option<MatrixWitness>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct UnionOfKernelsReport {
    pub holds: bool,
    pub elements_checked: usize,
    /// An element whose diagonal avoids the theta value entirely, if any.
    pub witness: Option<UnionWitness>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct UnionWitness {
    pub rho: MatrixWitness,
    pub theta_value: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DetAgreementReport {
    pub holds: bool,
    pub elements_checked: usize,
    pub witness: Option<DetWitness>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DetWitness {
    pub theta: MatrixWitness,
    pub det: u32,
    pub candidate: u32,
}

/// The paired closure of `(rho(g_i), theta(g_i))`.
#[derive(Debug, Clone)]
pub struct RepresentationPair {
    field: FiniteField,
    rho_dim: usize,
    theta_dim: usize,
    rho_gens: Vec<SquareMatrix>,
    theta_gens: Vec<SquareMatrix>,
    pairs: Vec<(SquareMatrix, SquareMatrix)>,
    pair_index: HashMap<Vec<u32>, usize>,
}

fn pair_key(a: &SquareMatrix, b: &SquareMatrix) -> Vec<u32> {
    let mut key = Vec::with_capacity(a.entries().len() + b.entries().len());
    key.extend_from_slice(a.entries());
    key.extend_from_slice(b.entries());
    key
}

impl RepresentationPair {
    pub fn build(
        field: FiniteField,
        rho_gens: Vec<SquareMatrix>,
        theta_gens: Vec<SquareMatrix>,
        cap: usize,
    ) -> Result<RepresentationPair, PairError> {
        if rho_gens.len() != theta_gens.len() {
            return Err(PairError::GeneratorCountMismatch {
                rho: rho_gens.len(),
                theta: theta_gens.len(),
            });
        }
        if rho_gens.is_empty() {
            return Err(PairError::GeneratorCountMismatch { rho: 0, theta: 0 });
        }
        let rho_dim = rho_gens[0].dim();
        let theta_dim = theta_gens[0].dim();
        for (side, gens, expected) in [
            ("rho", &rho_gens, rho_dim),
            ("theta", &theta_gens, theta_dim),
        ] {
            for (index, g) in gens.iter().enumerate() {
                if *g.field() != field {
                    return Err(PairError::MixedFields { side, index });
                }
                if g.dim() != expected {
                    return Err(PairError::MixedDimensions {
                        side,
                        index,
                        got: g.dim(),
                        expected,
                    });
                }
                if !g.is_invertible() {
                    return Err(PairError::Singular { side, index });
                }
            }
        }

        let identity = (
            SquareMatrix::identity(field.clone(), rho_dim),
            SquareMatrix::identity(field.clone(), theta_dim),
        );
        let mut pairs = vec![identity.clone()];
        let mut pair_index = HashMap::new();
        pair_index.insert(pair_key(&identity.0, &identity.1), 0usize);
        let mut cursor = 0usize;
        while cursor < pairs.len() {
            let current = pairs[cursor].clone();
            for (rg, tg) in rho_gens.iter().zip(&theta_gens) {
                let next = (current.0.mul(rg), current.1.mul(tg));
                let key = pair_key(&next.0, &next.1);
                if !pair_index.contains_key(&key) {
                    if pairs.len() >= cap {
                        return Err(PairError::CapExceeded {
                            cap,
                            partial: pairs.len(),
                        });
                    }
                    pair_index.insert(key, pairs.len());
                    pairs.push(next);
                }
            }
            cursor += 1;
        }

        Ok(RepresentationPair {
            field,
            rho_dim,
            theta_dim,
            rho_gens,
            theta_gens,
            pairs,
            pair_index,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rho_dim(&self) -> usize {
        self.rho_dim
    }

    pub fn theta_dim(&self) -> usize {
        self.theta_dim
    }

    /// All `(rho(w), theta(w))` pairs, BFS order from the identity.
    pub fn pairs(&self) -> &[(SquareMatrix, SquareMatrix)] {
        &self.pairs
    }

    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    /// The closure of the theta generators alone.
    pub fn theta_group(&self, cap: usize) -> Result<GeneratedGroup, GroupError> {
        GeneratedGroup::generate(self.field.clone(), self.theta_dim, &self.theta_gens, cap)
    }

    /// The closure of the rho generators alone.
    pub fn rho_group(&self, cap: usize) -> Result<GeneratedGroup, GroupError> {
        GeneratedGroup::generate(self.field.clone(), self.rho_dim, &self.rho_gens, cap)
    }

    /// Does `charpoly(rho(g))` annihilate `theta(g)` for every `g`?
    pub fn annihilation_holds(&self) -> AnnihilationReport {
        for (rho, theta) in &self.pairs {
            let cp = rho.char_poly();
            let image = cp.eval_matrix(theta);
            if image.entries().iter().any(|&e| e != 0) {
                return AnnihilationReport {
                    holds: false,
                    elements_checked: self.pairs.len(),
                    witness: Some(AnnihilationWitness {
                        rho: MatrixWitness::of(rho),
                        theta: MatrixWitness::of(theta),
                        char_poly: cp.to_string(),
                    }),
                };
            }
        }
        AnnihilationReport {
            holds: true,
            elements_checked: self.pairs.len(),
            witness: None,
        }
    }

    /// Is theta irreducible on `F_q^m` (spinning over the theta generators)?
    pub fn theta_irreducible(&self, cap: usize) -> Result<bool, GroupError> {
        Ok(self.theta_group(cap)?.is_irreducible())
    }

    /// `ker rho <= ker theta`, under the lemma's preconditions (annihilation
    /// holds and theta is irreducible). Violated preconditions are itemized.
    pub fn kernel_containment(&self, cap: usize) -> Result<KernelReport, PairError> {
        let mut failed = Vec::new();
        let annihilation = self.annihilation_holds();
        if !annihilation.holds {
            failed.push("annihilation: charpoly(rho(g)) must annihilate theta(g) for all g".to_string());
        }
        if !self.theta_irreducible(cap)? {
            failed.push("theta-irreducible: theta must have no proper invariant subspace".to_string());
        }
        if !failed.is_empty() {
            return Err(PairError::PreconditionFailed { failed });
        }

        let rho_identity = SquareMatrix::identity(self.field.clone(), self.rho_dim);
        for (rho, theta) in &self.pairs {
            if *rho == rho_identity && !theta.is_identity() {
                return Ok(KernelReport {
                    holds: false,
                    elements_checked: self.pairs.len(),
                    witness: Some(MatrixWitness::of(theta)),
                });
            }
        }
        Ok(KernelReport {
            holds: true,
            elements_checked: self.pairs.len(),
            witness: None,
        })
    }

    /// For `rho` a sum of characters (diagonal) and `theta` a character
    /// (1-dimensional): does every `g` lie in the kernel of some summand of
    /// `rho tensor theta^{-1}`, i.e. does some diagonal entry of `rho(g)`
    /// equal `theta(g)`?
    pub fn union_of_kernels(&self) -> Result<UnionOfKernelsReport, PairError> {
        let mut failed = Vec::new();
        if self.theta_dim != 1 {
            failed.push(format!(
                "theta-character: theta must be 1-dimensional, got {}",
                self.theta_dim
            ));
        }
        if !self.pairs.iter().all(|(rho, _)| rho.is_diagonal()) {
            failed.push("rho-diagonal: rho must be a direct sum of characters".to_string());
        }
        if failed.is_empty() && !self.annihilation_holds().holds {
            failed.push("annihilation: charpoly(rho(g)) must annihilate theta(g) for all g".to_string());
        }
        if !failed.is_empty() {
            return Err(PairError::PreconditionFailed { failed });
        }

        for (rho, theta) in &self.pairs {
            let value = theta.get(0, 0);
            let hit = (0..self.rho_dim).any(|i| rho.get(i, i) == value);
            if !hit {
                return Ok(UnionOfKernelsReport {
                    holds: false,
                    elements_checked: self.pairs.len(),
                    witness: Some(UnionWitness {
                        rho: MatrixWitness::of(rho),
                        theta_value: value,
                    }),
                });
            }
        }
        Ok(UnionOfKernelsReport {
            holds: true,
            elements_checked: self.pairs.len(),
            witness: None,
        })
    }

    /// The characteristic polynomials of the rho side, indexed like `pairs()`.
    pub fn rho_char_poly_family(&self) -> Vec<Polynomial> {
        self.pairs.iter().map(|(rho, _)| rho.char_poly()).collect()
    }

    /// Determinant agreement from a characteristic-polynomial family.
    ///
    /// `family[i]` is a monic polynomial of degree `theta_dim` attached to the
    /// `i`-th pair. Write `a_n(g) = (-1)^deg * constant_term(family[g])` — the
    /// candidate determinant (for the char poly of `theta(g)` itself this *is*
    /// `det theta(g)`). Preconditions, all itemized on failure:
    ///   1. each polynomial is monic of degree `theta_dim`;
    ///   2. `theta(G)` is generated by its regular elements;
    ///   3. `family[g]` annihilates `theta(g)` for every `g`;
    ///   4. `a_n` is multiplicative over all pairs of elements.
    ///
    /// Conclusion: `det theta(g) = a_n(g)` for every `g`. A `false` return on
    /// valid preconditions would be a counterexample to the lemma.
    pub fn det_agreement(&self, family: &[Polynomial], cap: usize) -> Result<DetAgreementReport, PairError> {
        if family.len() != self.pairs.len() {
            return Err(PairError::FamilySizeMismatch {
                got: family.len(),
                expected: self.pairs.len(),
            });
        }
        if self.pairs.len() > PAIRWISE_CHECK_CAP {
            return Err(PairError::PairwiseCheckTooLarge {
                size: self.pairs.len(),
                cap: PAIRWISE_CHECK_CAP,
            });
        }

        let f = &self.field;
        let sign = if self.theta_dim % 2 == 0 {
            1
        } else {
            f.neg(1)
        };
        let a_n = |poly: &Polynomial| f.mul(sign, poly.coeff(0));

        let mut failed = Vec::new();
        for (i, poly) in family.iter().enumerate() {
            if !poly.is_monic() || poly.degree() != Some(self.theta_dim) {
                failed.push(format!(
                    "family-shape: polynomial {i} must be monic of degree {}",
                    self.theta_dim
                ));
                break;
            }
        }
        if failed.is_empty() {
            match self.theta_group(cap.max(self.pairs.len() + 1)) {
                Ok(theta_group) => {
                    if !theta_group.is_regular_generated(cap.max(self.pairs.len() + 1))? {
                        failed.push(
                            "theta-regular-generated: theta(G) must be generated by its regular elements"
                                .to_string(),
                        );
                    }
                }
                Err(e) => return Err(e.into()),
            }
        }
        if failed.is_empty() {
            for (i, (_, theta)) in self.pairs.iter().enumerate() {
                let image = family[i].eval_matrix(theta);
                if image.entries().iter().any(|&e| e != 0) {
                    failed.push(format!(
                        "family-annihilation: polynomial {i} does not annihilate theta"
                    ));
                    break;
                }
            }
        }
        if failed.is_empty() {
            'outer: for i in 0..self.pairs.len() {
                for j in 0..self.pairs.len() {
                    let product = (
                        self.pairs[i].0.mul(&self.pairs[j].0),
                        self.pairs[i].1.mul(&self.pairs[j].1),
                    );
                    let k = self.pair_index[&pair_key(&product.0, &product.1)];
                    let lhs = a_n(&family[k]);
                    let rhs = f.mul(a_n(&family[i]), a_n(&family[j]));
                    if lhs != rhs {
                        failed.push(format!(
                            "a_n-multiplicative: a_n(g{i} * g{j}) = {lhs} but a_n(g{i}) * a_n(g{j}) = {rhs}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        if !failed.is_empty() {
            return Err(PairError::PreconditionFailed { failed });
        }

        for (i, (_, theta)) in self.pairs.iter().enumerate() {
            let candidate = a_n(&family[i]);
            let det = theta.det();
            if det != candidate {
                return Ok(DetAgreementReport {
                    holds: false,
                    elements_checked: self.pairs.len(),
                    witness: Some(DetWitness {
                        theta: MatrixWitness::of(theta),
                        det,
                        candidate,
                    }),
                });
            }
        }
        Ok(DetAgreementReport {
            holds: true,
            elements_checked: self.pairs.len(),
            witness: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::group::DEFAULT_CAP;

    fn f(l: u64) -> FiniteField {
        FiniteField::prime_field(l).unwrap()
    }

    fn mat(field: &FiniteField, n: usize, entries: &[u32]) -> SquareMatrix {
        SquareMatrix::new(field.clone(), n, entries.to_vec()).unwrap()
    }

    fn sl2_f3_pair_with_theta_eq_rho() -> RepresentationPair {
        let f3 = f(3);
        let a = mat(&f3, 2, &[1, 1, 0, 1]);
        let b = mat(&f3, 2, &[1, 0, 1, 1]);
        RepresentationPair::build(f3, vec![a.clone(), b.clone()], vec![a, b], DEFAULT_CAP).unwrap()
    }

    fn a4_so3_pair_with_trivial_theta() -> RepresentationPair {
        let f7 = f(7);
        // The rotation model of A_4: diag(1,-1,-1) and the coordinate 3-cycle
        // generate a 12-element group in which every element fixes a vector.
        let v = SquareMatrix::diagonal(f7.clone(), &[1, 6, 6]).unwrap();
        let p = SquareMatrix::cyclic_shift(f7.clone(), 3).unwrap();
        let one = mat(&f7, 1, &[1]);
        RepresentationPair::build(f7, vec![v, p], vec![one.clone(), one], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn paired_closure_counts_elements() {
        let pair = sl2_f3_pair_with_theta_eq_rho();
        assert_eq!(pair.order(), 24);
        let a4 = a4_so3_pair_with_trivial_theta();
        assert_eq!(a4.order(), 12);
    }

    #[test]
    fn annihilation_via_cayley_hamilton() {
        let pair = sl2_f3_pair_with_theta_eq_rho();
        let report = pair.annihilation_holds();
        assert!(report.holds);
        assert_eq!(report.elements_checked, 24);
    }

    #[test]
    fn a4_with_trivial_theta_annihilates() {
        // Every rotation has eigenvalue 1, so X = 1 is a root of every char poly.
        let pair = a4_so3_pair_with_trivial_theta();
        let report = pair.annihilation_holds();
        assert!(report.holds, "witness: {:?}", report.witness);
        assert_eq!(report.elements_checked, 12);
    }

    #[test]
    fn s3_standard_vs_sign_fails_at_a_three_cycle() {
        let f7 = f(7);
        // r of order 3 with char poly X^2 + X + 1; s a reflection.
        let r = mat(&f7, 2, &[0, 6, 1, 6]);
        let s = mat(&f7, 2, &[0, 1, 1, 0]);
        let sign_r = mat(&f7, 1, &[1]);
        let sign_s = mat(&f7, 1, &[6]);
        let pair =
            RepresentationPair::build(f7, vec![r, s], vec![sign_r, sign_s], DEFAULT_CAP).unwrap();
        assert_eq!(pair.order(), 6);
        let report = pair.annihilation_holds();
        assert!(!report.holds);
        // The witness is a 3-cycle: sign = 1, and 1 + 1 + 1 = 3 != 0 in F_7.
        let witness = report.witness.unwrap();
        assert_eq!(witness.theta.entries, vec![1]);
    }

    #[test]
    fn kernel_containment_for_faithful_pair() {
        let pair = sl2_f3_pair_with_theta_eq_rho();
        let report = pair.kernel_containment(DEFAULT_CAP).unwrap();
        assert!(report.holds);
        assert!(report.witness.is_none());
    }

    #[test]
    fn kernel_violation_fails_annihilation_precondition() {
        // rho = sign of S_3 (kernel = the 3-cycles), theta = standard 2-dim:
        // theta is nontrivial on ker rho, and indeed annihilation already fails.
        let f7 = f(7);
        let r = mat(&f7, 2, &[0, 6, 1, 6]);
        let s = mat(&f7, 2, &[0, 1, 1, 0]);
        let sign_r = mat(&f7, 1, &[1]);
        let sign_s = mat(&f7, 1, &[6]);
        let pair =
            RepresentationPair::build(f7, vec![sign_r, sign_s], vec![r, s], DEFAULT_CAP).unwrap();
        let err = pair.kernel_containment(DEFAULT_CAP).unwrap_err();
        match err {
            PairError::PreconditionFailed { failed } => {
                assert!(failed.iter().any(|f| f.starts_with("annihilation")));
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn klein_four_union_of_kernels() {
        let f7 = f(7);
        // rho = the three nontrivial characters of V_4, theta = trivial.
        let ra = SquareMatrix::diagonal(f7.clone(), &[6, 1, 6]).unwrap();
        let rb = SquareMatrix::diagonal(f7.clone(), &[1, 6, 6]).unwrap();
        let one = mat(&f7, 1, &[1]);
        let pair =
            RepresentationPair::build(f7, vec![ra, rb], vec![one.clone(), one], DEFAULT_CAP)
                .unwrap();
        assert_eq!(pair.order(), 4);
        let report = pair.union_of_kernels().unwrap();
        assert!(report.holds);
        // theta (trivial) is not a summand of rho: no rho generator has a 1 in
        // every needed slot... concretely, each nontrivial character shows up.
        assert!(pair.pairs().iter().any(|(rho, _)| rho.get(0, 0) != 1));
    }

    #[test]
    fn union_of_kernels_precondition_failures() {
        let f7 = f(7);
        // Single nontrivial character vs trivial theta: annihilation fails.
        let chi = mat(&f7, 1, &[6]);
        let one = mat(&f7, 1, &[1]);
        let pair = RepresentationPair::build(f7.clone(), vec![chi], vec![one], DEFAULT_CAP).unwrap();
        let err = pair.union_of_kernels().unwrap_err();
        assert!(matches!(err, PairError::PreconditionFailed { .. }));

        // Non-diagonal rho is rejected.
        let p = SquareMatrix::cyclic_shift(f7.clone(), 3).unwrap();
        let one = mat(&f7, 1, &[1]);
        let pair = RepresentationPair::build(f7, vec![p], vec![one], DEFAULT_CAP).unwrap();
        let err = pair.union_of_kernels().unwrap_err();
        match err {
            PairError::PreconditionFailed { failed } => {
                assert!(failed.iter().any(|f| f.starts_with("rho-diagonal")));
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn det_agreement_from_theta_char_polys() {
        let pair = sl2_f3_pair_with_theta_eq_rho();
        let family: Vec<Polynomial> = pair.pairs().iter().map(|(_, t)| t.char_poly()).collect();
        let report = pair.det_agreement(&family, DEFAULT_CAP).unwrap();
        assert!(report.holds);
        assert_eq!(report.elements_checked, 24);
    }

    #[test]
    fn det_agreement_from_rho_family() {
        // rho = theta = SL_2(F_3): the rho-side family is literally the theta
        // char polys, but exercised through the dedicated accessor.
        let pair = sl2_f3_pair_with_theta_eq_rho();
        let family = pair.rho_char_poly_family();
        let report = pair.det_agreement(&family, DEFAULT_CAP).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn det_agreement_rejects_non_multiplicative_family() {
        let f7 = f(7);
        // C_3 = <diag(2, 4)> over F_7, theta = rho.
        let d = SquareMatrix::diagonal(f7.clone(), &[2, 4]).unwrap();
        let pair =
            RepresentationPair::build(f7.clone(), vec![d.clone()], vec![d], DEFAULT_CAP).unwrap();
        assert_eq!(pair.order(), 3);
        let mut family: Vec<Polynomial> = pair.pairs().iter().map(|(_, t)| t.char_poly()).collect();
        // Replace the identity's polynomial by (X-1)(X-2): still monic, still
        // annihilates I? No — (I - I)(I - 2I) = 0, yes. But a_n becomes 2 at
        // the identity, breaking multiplicativity a_n(e*e) = a_n(e)^2.
        let idx = pair
            .pairs()
            .iter()
            .position(|(rho, _)| rho.is_identity())
            .unwrap();
        family[idx] = Polynomial::x_minus(f7.clone(), 1).mul(&Polynomial::x_minus(f7, 2));
        let err = pair.det_agreement(&family, DEFAULT_CAP).unwrap_err();
        match err {
            PairError::PreconditionFailed { failed } => {
                assert!(
                    failed.iter().any(|f| f.starts_with("a_n-multiplicative")
                        || f.starts_with("family-annihilation")),
                    "failed: {failed:?}"
                );
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn generator_count_mismatch_is_rejected() {
        let f3 = f(3);
        let a = mat(&f3, 2, &[1, 1, 0, 1]);
        let err = RepresentationPair::build(f3, vec![a], vec![], DEFAULT_CAP).unwrap_err();
        assert!(matches!(err, PairError::GeneratorCountMismatch { .. }));
    }
}
