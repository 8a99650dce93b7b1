//! Exact linear algebra over small finite fields and the group-theoretic
//! decision procedures built on it.
//!
//! The pieces, bottom to top:
//!
//! * [`field`]: `F_q` with `q = l^m <= 2^20`, elements packed into `u32` codes,
//!   lookup tables for tiny fields;
//! * [`poly`]: dense univariate polynomials over `F_q` (division, gcd/lcm,
//!   evaluation at field elements and at matrices);
//! * [`matrix`]: square matrices up to `6x6` with exact determinant, inverse,
//!   characteristic polynomial (Berkowitz, division-free) and minimal polynomial
//!   (cyclic-subspace LCM), hence the *regular* predicate `min = char`;
//! * [`group`]: breadth-first multiplicative closures with a hard cap, regular
//!   subgroups, and irreducibility by the spinning algorithm;
//! * [`pair`]: paired closures `(rho(g), theta(g))` for testing annihilation of
//!   characteristic polynomials, kernel containment, the union-of-kernels
//!   property for character sums, and determinant agreement;
//! * [`monomial`]: index-3 monomial inductions `<diag(zeta^{e_i}), shift>` and
//!   the two modes of the regular-criteria check;
//! * [`intertwiner`]: explicit `rho(g) T = T theta(g)` solving via Kronecker
//!   products, returning an invertible intertwiner when one exists;
//! * [`weights`]: the q-restricted dominant weight filter driven by the
//!   congruence `q^{n-1} x_1 + ... + x_n = q^beta mod (q^n - 1)/(q - 1)`;
//! * [`genfile`]: the JSON generator-file format shared with the CLI.

pub mod field;
pub mod genfile;
pub mod group;
pub mod intertwiner;
pub mod matrix;
pub mod monomial;
pub mod pair;
pub mod poly;
pub mod weights;

pub use field::{FieldDescription, FieldError, FiniteField};
pub use genfile::{load_generator_file, parse_generator_file, GenFileError};
pub use group::{GeneratedGroup, GroupError, DEFAULT_CAP};
pub use intertwiner::find_intertwiner;
pub use matrix::{MatrixError, SquareMatrix};
pub use monomial::{
    build_monomial_induction, verify_regular_lemma, LemmaCheck, LemmaMode, MonomialError,
    MonomialInduction, RegularLemmaReport,
};
pub use pair::{
    AnnihilationReport, DetAgreementReport, KernelReport, MatrixWitness, PairError,
    RepresentationPair, UnionOfKernelsReport,
};
pub use poly::Polynomial;
pub use weights::{admissible_weights, factor_prime_power, WeightError};
