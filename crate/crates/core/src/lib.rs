//! Exact-arithmetic laboratory for mod-p representation combinatorics.
//!
//! The crate has two halves that meet in the middle:
//!
//! * **Exponent combinatorics** ([`tame`], [`breuil`], [`reps`], [`feasibility`]):
//!   arithmetic of tame inertia exponents in `Z/(p^d - 1)`, rank-one Breuil-module
//!   data with tame descent and its generic-fiber exponent, semisimple residual
//!   representations built from induced summands, and an exhaustive decision engine
//!   that enumerates every representation compatible with an inertial type and
//!   checks a non-regularity prediction against it.
//!
//! * **Finite matrix groups** ([`matgroup`]): small finite fields `F_q` with exact
//!   linear algebra up to 6x6 (characteristic and minimal polynomials, regular
//!   elements), multiplicative closures of generated groups, and checkers for a
//!   family of annihilation / kernel / monomial-induction lemmas together with the
//!   q-restricted weight-congruence filter that powers them.
//!
//! Everything is exact integer or finite-field arithmetic; there are no floats and
//! no randomness in any library path, so all outputs are deterministic.

pub mod arith;
pub mod breuil;
pub mod feasibility;
pub mod matgroup;
pub mod reps;
pub mod tame;

pub use breuil::{Niveau1Profile, ProfileError, RankOneData, RankOneViolation};
pub use feasibility::{
    exhaustive_verify, exhaustive_verify_all_types, attainable_exponents, Counterexample,
    HypothesisCheck, HypothesisChecklist, InertialType, TheoremInstance, VerificationReport,
    Verdict, VerifyError, VerifyOptions,
};
pub use reps::{InducedSummand, RepError, ResidualRep};
pub use tame::{DigitVector, ExponentClass, ParamError, TameParams};
