//! Arithmetic of tame inertia exponents.
//!
//! A tame character of niveau `d` over a residue field of characteristic `p` is a
//! power `omega_d^kappa` of the fundamental character of niveau `d`; its exponent
//! `kappa` is only defined modulo `e = p^d - 1`. This module fixes the integer
//! conventions used everywhere else in the crate:
//!
//! * exponents are stored as canonical representatives in `[0, e)`;
//! * the base-`p` digit expansion `kappa = a_0 + p a_1 + ... + p^{d-1} a_{d-1}`
//!   has digits in `[0, p-1]` and is never the all-`(p-1)` vector (the zero class
//!   is the all-zero vector);
//! * the arithmetic Frobenius acts on exponents by multiplication by `p`, which on
//!   digits is a right cyclic rotation;
//! * `omega_d^s = omega_1` for `s = (p^d - 1)/(p - 1)`, so the niveau-1 norm of an
//!   exponent is its residue mod `p - 1`.

use crate::arith::{checked_pow, is_prime, modulo};
use serde::Serialize;
use thiserror::Error;

/// Largest prime accepted for tame parameters. Keeps `p^d - 1` comfortably inside
/// `i64` and keeps exhaustive enumerations desk-sized.
pub const MAX_PRIME: i64 = 97;
/// Largest niveau accepted for tame parameters.
pub const MAX_NIVEAU: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("p must be an odd prime with 3 <= p <= {MAX_PRIME}, got {0}")]
    BadPrime(i64),
    #[error("niveau d must satisfy 1 <= d <= {MAX_NIVEAU}, got {0}")]
    BadNiveau(u32),
}

/// The ambient data `(p, d)` for exponents of niveau-`d` tame characters, together
/// with the derived constants `e = p^d - 1` and `s = 1 + p + ... + p^{d-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TameParams {
    prime: i64,
    niveau: u32,
    #[serde(skip)]
    modulus: i64,
    #[serde(skip)]
    niveau_one_scale: i64,
}

impl TameParams {
    pub fn new(prime: i64, niveau: u32) -> Result<Self, ParamError> {
        if prime < 3 || prime > MAX_PRIME || !is_prime(prime) {
            return Err(ParamError::BadPrime(prime));
        }
        if niveau == 0 || niveau > MAX_NIVEAU {
            return Err(ParamError::BadNiveau(niveau));
        }
        let modulus = checked_pow(prime, niveau) - 1;
        Ok(TameParams {
            prime,
            niveau,
            modulus,
            niveau_one_scale: modulus / (prime - 1),
        })
    }

    /// The residue characteristic `p`.
    pub fn prime(&self) -> i64 {
        self.prime
    }

    /// The niveau `d` (degree of the unramified extension the character lives over).
    pub fn niveau(&self) -> u32 {
        self.niveau
    }

    /// `e = p^d - 1`, the order of `omega_d`; exponents live in `Z/e`.
    pub fn exponent_modulus(&self) -> i64 {
        self.modulus
    }

    /// `s = (p^d - 1)/(p - 1) = 1 + p + ... + p^{d-1}`; satisfies `omega_d^s = omega_1`.
    pub fn niveau_one_scale(&self) -> i64 {
        self.niveau_one_scale
    }

    /// Canonical representative of `value` in `[0, e)`.
    pub fn reduce(&self, value: i64) -> i64 {
        modulo(value, self.modulus)
    }
}

/// A base-`p` digit expansion of an exponent class: little-endian, digits in
/// `[0, p-1]`, never the all-`(p-1)` vector. The digit multiset read mod `p` is
/// the "exponent multiset" contribution of the corresponding induced character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitVector {
    digits: Vec<i64>,
}

impl DigitVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.digits
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigitError {
    #[error("expected {expected} digits, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("digit at position {index} is {got}, outside 0..={max}")]
    OutOfRange { index: usize, got: i64, max: i64 },
    #[error("the all-(p-1) digit vector is not a canonical expansion (it represents the zero class)")]
    AllMax,
}

/// An exponent class `kappa mod (p^d - 1)`, stored canonically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentClass {
    params: TameParams,
    value: i64,
}

impl ExponentClass {
    /// Reduce an arbitrary integer into its canonical class.
    pub fn new(params: TameParams, value: i64) -> Self {
        ExponentClass {
            params,
            value: params.reduce(value),
        }
    }

    /// Rebuild an exponent from a digit vector (the inverse of [`Self::digits`]).
    pub fn from_digits(params: TameParams, digits: &[i64]) -> Result<Self, DigitError> {
        let d = params.niveau() as usize;
        let p = params.prime();
        if digits.len() != d {
            return Err(DigitError::WrongLength {
                expected: d,
                got: digits.len(),
            });
        }
        for (index, &a) in digits.iter().enumerate() {
            if !(0..=p - 1).contains(&a) {
                return Err(DigitError::OutOfRange {
                    index,
                    got: a,
                    max: p - 1,
                });
            }
        }
        if digits.iter().all(|&a| a == p - 1) {
            return Err(DigitError::AllMax);
        }
        let mut value = 0i64;
        for &a in digits.iter().rev() {
            value = value * p + a;
        }
        Ok(ExponentClass { params, value })
    }

    pub fn params(&self) -> TameParams {
        self.params
    }

    /// The canonical representative in `[0, p^d - 2]`.
    pub fn value(&self) -> i64 {
        self.value
    }

    /// Base-`p` digits `(a_0, ..., a_{d-1})` with `kappa = sum a_i p^i`.
    ///
    /// Because the canonical representative is `< p^d - 1`, the plain positional
    /// expansion can never be the all-`(p-1)` vector, so the convention that the
    /// zero class is all-zero holds automatically.
    pub fn digits(&self) -> DigitVector {
        let p = self.params.prime();
        let d = self.params.niveau() as usize;
        let mut rest = self.value;
        let mut digits = Vec::with_capacity(d);
        for _ in 0..d {
            digits.push(rest % p);
            rest /= p;
        }
        debug_assert_eq!(rest, 0);
        debug_assert!(!digits.iter().all(|&a| a == p - 1));
        DigitVector { digits }
    }

    /// The Frobenius twist `p * kappa mod e`; on digits this is a right cyclic
    /// rotation (the last digit moves to the front).
    pub fn frobenius_twist(&self) -> Self {
        ExponentClass::new(self.params, self.value * self.params.prime())
    }

    /// `p^j * kappa mod e`.
    pub fn frobenius_iterate(&self, j: u32) -> Self {
        let mut out = *self;
        for _ in 0..(j % self.params.niveau()) {
            out = out.frobenius_twist();
        }
        out
    }

    /// All Frobenius twists `kappa, p*kappa, ..., p^{d-1}*kappa` (values, in twist order).
    pub fn orbit(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.params.niveau() as usize);
        let mut current = *self;
        for _ in 0..self.params.niveau() {
            out.push(current.value);
            current = current.frobenius_twist();
        }
        out
    }

    /// The canonical representative of the Frobenius orbit: the twist with the
    /// smallest canonical value. Two summands induce isomorphic representations
    /// exactly when their orbit representatives agree.
    pub fn orbit_min(&self) -> Self {
        let min = self.orbit().into_iter().min().expect("orbit is non-empty");
        ExponentClass::new(self.params, min)
    }

    /// Whether `omega_d^kappa` does not factor through a lower niveau: for every
    /// proper divisor `d'` of `d`, `p^{d'} * kappa != kappa mod e`. Primitivity is
    /// exactly the condition for the induced representation of dimension `d` to be
    /// irreducible. Every exponent is primitive at niveau 1.
    pub fn is_primitive(&self) -> bool {
        let d = self.params.niveau();
        for dp in 1..d {
            if d % dp == 0 && self.frobenius_iterate(dp).value == self.value {
                return false;
            }
        }
        true
    }

    /// The exponent `m` with `omega_d^{kappa s} = omega_1^m`, i.e. `kappa mod (p-1)`.
    /// This is the determinant-on-inertia contribution of the induced summand.
    pub fn norm_to_niveau1(&self) -> i64 {
        modulo(self.value, self.params.prime() - 1)
    }

    /// Twist by the niveau-1 character `omega_1^t`: `kappa + s * t mod e`. This is
    /// the effect on exponents of tensoring the induced representation by
    /// `omega_1^t`, because `omega_1` restricted to the niveau-`d` level is
    /// `omega_d^s`.
    pub fn twist_by_niveau_one(&self, t: i64) -> Self {
        let t_reduced = modulo(t, self.params.prime() - 1);
        ExponentClass::new(
            self.params,
            self.value + self.params.niveau_one_scale() * t_reduced,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(p: i64, d: u32) -> TameParams {
        TameParams::new(p, d).expect("valid test params")
    }

    #[test]
    fn derived_constants() {
        let t = params(5, 2);
        assert_eq!(t.exponent_modulus(), 24);
        assert_eq!(t.niveau_one_scale(), 6);
        let t = params(7, 3);
        assert_eq!(t.exponent_modulus(), 342);
        assert_eq!(t.niveau_one_scale(), 57);
        let t = params(3, 1);
        assert_eq!(t.exponent_modulus(), 2);
        assert_eq!(t.niveau_one_scale(), 1);
    }

    #[test]
    fn parameter_guards() {
        assert_eq!(TameParams::new(2, 2).unwrap_err(), ParamError::BadPrime(2));
        assert_eq!(TameParams::new(9, 1).unwrap_err(), ParamError::BadPrime(9));
        assert_eq!(TameParams::new(101, 1).unwrap_err(), ParamError::BadPrime(101));
        assert_eq!(TameParams::new(5, 0).unwrap_err(), ParamError::BadNiveau(0));
        assert_eq!(TameParams::new(5, 7).unwrap_err(), ParamError::BadNiveau(7));
        assert!(TameParams::new(97, 6).is_ok());
    }

    #[test]
    fn digit_expansion_examples() {
        let t = params(5, 2);
        assert_eq!(ExponentClass::new(t, 23).digits().as_slice(), &[3, 4]);
        assert_eq!(ExponentClass::new(t, 16).digits().as_slice(), &[1, 3]);
        assert_eq!(ExponentClass::new(t, 0).digits().as_slice(), &[0, 0]);
        // Reduction of an out-of-range representative.
        assert_eq!(ExponentClass::new(t, 28).value(), 4);
        assert_eq!(ExponentClass::new(t, -6).value(), 18);
    }

    #[test]
    fn digits_round_trip_exhaustive() {
        for (p, d) in [(5, 2), (3, 3), (7, 2)] {
            let t = params(p, d);
            for kappa in 0..t.exponent_modulus() {
                let class = ExponentClass::new(t, kappa);
                let digits = class.digits();
                let back = ExponentClass::from_digits(t, digits.as_slice())
                    .expect("canonical digits must round-trip");
                assert_eq!(back.value(), kappa);
            }
        }
    }

    #[test]
    fn from_digits_rejects_all_max() {
        let t = params(5, 2);
        assert_eq!(
            ExponentClass::from_digits(t, &[4, 4]),
            Err(DigitError::AllMax)
        );
        assert_eq!(
            ExponentClass::from_digits(t, &[5, 0]),
            Err(DigitError::OutOfRange { index: 0, got: 5, max: 4 })
        );
        assert_eq!(
            ExponentClass::from_digits(t, &[1]),
            Err(DigitError::WrongLength { expected: 2, got: 1 })
        );
    }

    #[test]
    fn frobenius_twist_examples() {
        let t = params(5, 2);
        assert_eq!(ExponentClass::new(t, 16).frobenius_twist().value(), 8);
        // digits(16) = [1,3]; right rotation gives [3,1] = 3 + 1*5 = 8.
        assert_eq!(ExponentClass::new(t, 8).digits().as_slice(), &[3, 1]);
    }

    #[test]
    fn frobenius_rotates_digits_exhaustive() {
        for (p, d) in [(5, 2), (7, 3), (3, 4)] {
            let t = params(p, d);
            for kappa in 0..t.exponent_modulus() {
                let class = ExponentClass::new(t, kappa);
                let mut rotated = class.digits().into_vec();
                rotated.rotate_right(1);
                assert_eq!(
                    class.frobenius_twist().digits().into_vec(),
                    rotated,
                    "digit rotation mismatch at p={p} d={d} kappa={kappa}"
                );
            }
        }
    }

    #[test]
    fn frobenius_has_order_dividing_d() {
        for (p, d) in [(5, 2), (7, 3), (3, 6)] {
            let t = params(p, d);
            for kappa in 0..t.exponent_modulus() {
                let class = ExponentClass::new(t, kappa);
                assert_eq!(class.frobenius_iterate(d).value(), kappa);
            }
        }
    }

    #[test]
    fn primitivity_examples() {
        let t = params(5, 2);
        assert!(ExponentClass::new(t, 1).is_primitive());
        // 6 = s * 1 is fixed by Frobenius, so it comes from niveau 1.
        assert!(!ExponentClass::new(t, 6).is_primitive());
        // 0 = s * 0 likewise comes from niveau 1.
        assert!(!ExponentClass::new(t, 0).is_primitive());
        // Niveau 1: everything is primitive (no proper divisors).
        let t1 = params(5, 1);
        for kappa in 0..t1.exponent_modulus() {
            assert!(ExponentClass::new(t1, kappa).is_primitive());
        }
    }

    #[test]
    fn primitivity_matches_orbit_size() {
        for (p, d) in [(5, 2), (3, 4), (7, 2), (3, 6)] {
            let t = params(p, d);
            for kappa in 0..t.exponent_modulus() {
                let class = ExponentClass::new(t, kappa);
                let orbit = class.orbit();
                let mut distinct = orbit.clone();
                distinct.sort_unstable();
                distinct.dedup();
                assert_eq!(
                    class.is_primitive(),
                    distinct.len() == d as usize,
                    "p={p} d={d} kappa={kappa}: primitivity must equal full orbit"
                );
            }
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(ExponentClass::new(params(5, 2), 16).norm_to_niveau1(), 0);
        assert_eq!(ExponentClass::new(params(7, 3), 57).norm_to_niveau1(), 3);
    }

    #[test]
    fn norm_is_frobenius_invariant() {
        for (p, d) in [(5, 2), (7, 3)] {
            let t = params(p, d);
            for kappa in 0..t.exponent_modulus() {
                let class = ExponentClass::new(t, kappa);
                assert_eq!(
                    class.norm_to_niveau1(),
                    class.frobenius_twist().norm_to_niveau1()
                );
            }
        }
    }

    #[test]
    fn orbit_min_example() {
        let t = params(5, 2);
        assert_eq!(ExponentClass::new(t, 16).orbit_min().value(), 8);
        assert_eq!(ExponentClass::new(t, 8).orbit_min().value(), 8);
    }

    #[test]
    fn niveau_one_twist_is_translation_by_s() {
        let t = params(5, 2);
        assert_eq!(ExponentClass::new(t, 16).twist_by_niveau_one(2).value(), 4);
        // t is only defined mod p-1: omega_1 has order p-1.
        assert_eq!(
            ExponentClass::new(t, 16).twist_by_niveau_one(6).value(),
            ExponentClass::new(t, 16).twist_by_niveau_one(2).value()
        );
    }

    proptest! {
        #[test]
        fn reduce_always_canonical(p in prop::sample::select(vec![3i64, 5, 7, 11, 13]),
                                   d in 1u32..=3,
                                   raw in -100_000i64..100_000) {
            let t = params(p, d);
            let class = ExponentClass::new(t, raw);
            prop_assert!(class.value() >= 0 && class.value() < t.exponent_modulus());
            prop_assert_eq!(class.digits().len(), d as usize);
        }

        #[test]
        fn twist_commutes_with_frobenius(p in prop::sample::select(vec![3i64, 5, 7]),
                                         d in 1u32..=3,
                                         kappa in 0i64..300,
                                         t_shift in 0i64..12) {
            let t = params(p, d);
            let class = ExponentClass::new(t, kappa);
            // Frobenius fixes s (p*s = s mod e), so twisting commutes with it.
            prop_assert_eq!(
                class.twist_by_niveau_one(t_shift).frobenius_twist().value(),
                class.frobenius_twist().twist_by_niveau_one(t_shift).value()
            );
        }
    }
}
