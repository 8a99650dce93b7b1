//! Index-3 monomial inductions and the regular-criteria check.
//!
//! `build_monomial_induction` realizes the induction of a character `psi` of
//! the diagonal torus: generators are `D = diag(zeta^{e_0}, zeta^{e_1},
//! zeta^{e_2})` for `zeta` the smallest primitive element of `F_q^x`, together
//! with the cyclic shift `P`. Conjugating `D` by `P` cycles the exponents, so
//! the closure's diagonal part realizes `psi` and its two shift-conjugates;
//! when the exponents are all congruent mod `q - 1` the character is fixed by
//! the shift and the induction is reducible — the constructor flags this
//! instead of failing, since the reducible object is still a legitimate group.
//!
//! `verify_regular_lemma` checks the two sufficient criteria for a group to be
//! generated by its regular elements: *induced* (every element outside the
//! diagonal subgroup is regular — their characteristic polynomials have the
//! shape `X^3 - a` — and those elements generate), and *unipotent* (a regular
//! unipotent element is present and the group is regular-generated).

use super::field::FiniteField;
use super::group::{GeneratedGroup, GroupError};
use super::matrix::SquareMatrix;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("monomial induction needs q >= 3, got q = {0}")]
    FieldTooSmall(u64),
    #[error("the group acts reducibly; the regular-criteria check requires irreducibility")]
    Reducible,
    #[error("induced mode requires dimension 3, got {0}")]
    NeedsDimensionThree(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The generators of an index-3 monomial induction, plus the data they were built from.
#[derive(Debug, Clone)]
pub struct MonomialInduction {
    field: FiniteField,
    zeta: u32,
    exponents: [u64; 3],
    diagonal: SquareMatrix,
    shift: SquareMatrix,
    shift_invariant: bool,
}

impl MonomialInduction {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The primitive element used as the character's base value.
    pub fn zeta(&self) -> u32 {
        self.zeta
    }

    pub fn exponents(&self) -> [u64; 3] {
        self.exponents
    }

    pub fn diagonal_generator(&self) -> &SquareMatrix {
        &self.diagonal
    }

    pub fn shift_generator(&self) -> &SquareMatrix {
        &self.shift
    }

    /// True when `psi` is fixed by the shift (exponents all congruent mod
    /// `q - 1`), which forces the induction to be reducible.
    pub fn shift_invariant(&self) -> bool {
        self.shift_invariant
    }

    pub fn generators(&self) -> Vec<SquareMatrix> {
        vec![self.diagonal.clone(), self.shift.clone()]
    }

    pub fn close(&self, cap: usize) -> Result<GeneratedGroup, GroupError> {
        GeneratedGroup::generate(self.field.clone(), 3, &self.generators(), cap)
    }
}

/// Build the monomial generators for exponents `(e_0, e_1, e_2)`.
pub fn build_monomial_induction(
    field: FiniteField,
    exponents: [u64; 3],
) -> Result<MonomialInduction, MonomialError> {
    let q = field.size();
    if q < 3 {
        return Err(MonomialError::FieldTooSmall(q));
    }
    let zeta = field.smallest_primitive_element();
    let diag_entries: Vec<u32> = exponents.iter().map(|&e| field.pow(zeta, e)).collect();
    let diagonal = SquareMatrix::diagonal(field.clone(), &diag_entries)
        .expect("3x3 diagonal is always constructible");
    let shift = SquareMatrix::cyclic_shift(field.clone(), 3)
        .expect("3x3 shift is always constructible");
    let unit = q - 1;
    let reduced: Vec<u64> = exponents.iter().map(|&e| e % unit).collect();
    let shift_invariant = reduced[0] == reduced[1] && reduced[1] == reduced[2];
    Ok(MonomialInduction {
        field,
        zeta,
        exponents,
        diagonal,
        shift,
        shift_invariant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaMode {
    Induced,
    Unipotent,
}

impl std::str::FromStr for LemmaMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "induced" => Ok(LemmaMode::Induced),
            "unipotent" => Ok(LemmaMode::Unipotent),
            other => Err(format!("unknown mode {other:?}; expected induced|unipotent")),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct LemmaCheck {
    pub name: &'static str,
    pub passed: bool,
    /// A witness element (display form): the failing element, or for
    /// existence checks the element that was found.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct RegularLemmaReport {
    pub mode: LemmaMode,
    pub group_order: usize,
    pub checks: Vec<LemmaCheck>,
    pub passed: bool,
}

/// Run the regular-criteria check on an already-closed group.
pub fn verify_regular_lemma(
    group: &GeneratedGroup,
    mode: LemmaMode,
    cap: usize,
) -> Result<RegularLemmaReport, MonomialError> {
    if !group.is_irreducible() {
        return Err(MonomialError::Reducible);
    }
    let mut checks = Vec::new();
    match mode {
        LemmaMode::Induced => {
            if group.dim() != 3 {
                return Err(MonomialError::NeedsDimensionThree(group.dim()));
            }
            let off_diagonal: Vec<&SquareMatrix> = group
                .elements()
                .iter()
                .filter(|m| !m.is_diagonal())
                .collect();

            let irregular = off_diagonal.iter().find(|m| !m.is_regular());
            checks.push(LemmaCheck {
                name: "off-diagonal-regular",
                passed: irregular.is_none(),
                witness: irregular.map(|m| m.to_string()),
            });

            // Off-diagonal monomial elements are 3-cycles with weights, so
            // their characteristic polynomials must look like X^3 - a.
            let bad_shape = off_diagonal.iter().find(|m| {
                let cp = m.char_poly();
                cp.coeff(1) != 0 || cp.coeff(2) != 0
            });
            checks.push(LemmaCheck {
                name: "char-poly-form",
                passed: bad_shape.is_none(),
                witness: bad_shape.map(|m| format!("{m} has char poly {}", m.char_poly())),
            });

            let off_gens: Vec<SquareMatrix> =
                off_diagonal.iter().map(|m| (*m).clone()).collect();
            let generated =
                GeneratedGroup::generate(group.field().clone(), group.dim(), &off_gens, cap)?;
            checks.push(LemmaCheck {
                name: "off-diagonal-generate",
                passed: generated.order() == group.order(),
                witness: if generated.order() == group.order() {
                    None
                } else {
                    Some(format!(
                        "off-diagonal elements generate only {} of {} elements",
                        generated.order(),
                        group.order()
                    ))
                },
            });

            let regular_generated = group.is_regular_generated(cap)?;
            checks.push(LemmaCheck {
                name: "regular-generated",
                passed: regular_generated,
                witness: None,
            });
        }
        LemmaMode::Unipotent => {
            let witness = group
                .elements()
                .iter()
                .find(|m| m.is_unipotent() && m.is_regular() && !m.is_identity());
            checks.push(LemmaCheck {
                name: "regular-unipotent-present",
                passed: witness.is_some(),
                witness: witness.map(|m| m.to_string()),
            });

            let regular_generated = group.is_regular_generated(cap)?;
            checks.push(LemmaCheck {
                name: "regular-generated",
                passed: regular_generated,
                witness: None,
            });
        }
    }
    let passed = checks.iter().all(|c| c.passed);
    Ok(RegularLemmaReport {
        mode,
        group_order: group.order(),
        checks,
        passed,
    })
}
