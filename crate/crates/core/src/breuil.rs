//! Rank-one Breuil modules with tame descent data, and their generic fibers.
//!
//! A rank-one module of weight at most `r` over the niveau-`d` parameters `(p, d)`
//! is described by two `d`-tuples of integers:
//!
//! * *filtration exponents* `r_0, ..., r_{d-1}` with `0 <= r_i <= e*r`, recording
//!   that the `i`-th filtration piece is generated by `u^{r_i}` times the basis
//!   vector;
//! * *descent exponents* `k_0, ..., k_{d-1}` with `0 <= k_i < e`, recording that
//!   descent acts on the `i`-th basis vector through `omega_d^{k_i}`.
//!
//! Compatibility of the descent action with Frobenius forces the *descent chain*
//! `k_i = p (k_{i-1} + r_{i-1}) mod e` (indices cyclic mod `d`). For valid data
//! the generic fiber is the rank-one tame character with exponent
//!
//! ```text
//! kappa_0 = k_0 + p * (r_0 p^{d-1} + r_1 p^{d-2} + ... + r_{d-1}) / e   (mod e)
//! ```
//!
//! where the division is exact: multiplying the chain relation around the cycle
//! shows `p * sum_i r_i p^{d-1-i} = 0 mod e`, and `p` is invertible mod `e`.
//!
//! The *niveau-1 profile* parametrisation writes `k_i = s x_i` with `x_i` in
//! `[0, p-2]` and splits each filtration exponent as `r_i = s (x_{i+1} - x_i) +
//! e y_i` with `y_i` in `[0, r]`. Profiles always satisfy the descent chain; the
//! only constraint is that each filtration exponent stays inside `[0, e*r]`. For
//! profiles there is a closed form for the generic fiber,
//!
//! ```text
//! kappa_0 = (x_0 + y_0) + sum_{i=1}^{d-1} p^{d-i} (x_i + y_i)   (mod e),
//! ```
//!
//! and [`Niveau1Profile::kappa`] computes it *independently* of
//! [`RankOneData::generic_fiber_exponent`]; keeping the two routes separate is the
//! point — their agreement is a checked theorem, not a definition.

use crate::arith::{checked_pow, modulo};
use crate::tame::{ExponentClass, TameParams};
use thiserror::Error;

/// Validation report for rank-one data. `validate` stops at the first violated
/// constraint, checked in order: weight range, tuple lengths, filtration ranges,
/// descent ranges, then the descent chain at indices `0, 1, ..., d-1`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankOneViolation {
    #[error("weight r = {got} outside 0..={max}")]
    WeightOutOfRange { got: i64, max: i64 },
    #[error("expected {expected} filtration exponents, got {got}")]
    FiltrationLength { expected: usize, got: usize },
    #[error("expected {expected} descent exponents, got {got}")]
    DescentLength { expected: usize, got: usize },
    #[error("filtration exponent r_{index} = {got} outside 0..={max}")]
    FiltrationOutOfRange { index: usize, got: i64, max: i64 },
    #[error("descent exponent k_{index} = {got} outside 0..={max}")]
    DescentOutOfRange { index: usize, got: i64, max: i64 },
    #[error("descent chain broken at index {index}: p*(k_{prev} + r_{prev}) = {expected} mod e, but k_{index} = {got}")]
    ChainBroken {
        index: usize,
        prev: usize,
        expected: i64,
        got: i64,
    },
}

/// Validated rank-one Breuil-module data over `(p, d)` with weight bound `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneData {
    params: TameParams,
    weight: i64,
    filtration_exponents: Vec<i64>,
    descent_exponents: Vec<i64>,
}

impl RankOneData {
    /// Validate and construct. See [`RankOneViolation`] for the order in which
    /// constraints are reported.
    pub fn new(
        params: TameParams,
        weight: i64,
        filtration_exponents: Vec<i64>,
        descent_exponents: Vec<i64>,
    ) -> Result<Self, RankOneViolation> {
        Self::validate(params, weight, &filtration_exponents, &descent_exponents)?;
        Ok(RankOneData {
            params,
            weight,
            filtration_exponents,
            descent_exponents,
        })
    }

    /// Check all structural constraints without building the value.
    pub fn validate(
        params: TameParams,
        weight: i64,
        filtration_exponents: &[i64],
        descent_exponents: &[i64],
    ) -> Result<(), RankOneViolation> {
        let d = params.niveau() as usize;
        let e = params.exponent_modulus();
        let p = params.prime();
        if !(0..=p - 2).contains(&weight) {
            return Err(RankOneViolation::WeightOutOfRange {
                got: weight,
                max: p - 2,
            });
        }
        if filtration_exponents.len() != d {
            return Err(RankOneViolation::FiltrationLength {
                expected: d,
                got: filtration_exponents.len(),
            });
        }
        if descent_exponents.len() != d {
            return Err(RankOneViolation::DescentLength {
                expected: d,
                got: descent_exponents.len(),
            });
        }
        let filtration_max = e * weight;
        for (index, &r_i) in filtration_exponents.iter().enumerate() {
            if !(0..=filtration_max).contains(&r_i) {
                return Err(RankOneViolation::FiltrationOutOfRange {
                    index,
                    got: r_i,
                    max: filtration_max,
                });
            }
        }
        for (index, &k_i) in descent_exponents.iter().enumerate() {
            if !(0..e).contains(&k_i) {
                return Err(RankOneViolation::DescentOutOfRange {
                    index,
                    got: k_i,
                    max: e - 1,
                });
            }
        }
        for index in 0..d {
            let prev = (index + d - 1) % d;
            let expected = modulo(
                p * (descent_exponents[prev] + filtration_exponents[prev]),
                e,
            );
            if descent_exponents[index] != expected {
                return Err(RankOneViolation::ChainBroken {
                    index,
                    prev,
                    expected,
                    got: descent_exponents[index],
                });
            }
        }
        Ok(())
    }

    pub fn params(&self) -> TameParams {
        self.params
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn filtration_exponents(&self) -> &[i64] {
        &self.filtration_exponents
    }

    pub fn descent_exponents(&self) -> &[i64] {
        &self.descent_exponents
    }

    /// The exponent `kappa_0` of the generic-fiber tame character:
    /// `k_0 + p * (sum_i r_i p^{d-1-i}) / e mod e`.
    ///
    /// The division must be exact for valid data; a failure here is a bug in
    /// validation, never a user error, hence the hard assertion.
    pub fn generic_fiber_exponent(&self) -> ExponentClass {
        let p = self.params.prime() as i128;
        let d = self.params.niveau();
        let e = self.params.exponent_modulus() as i128;
        let mut weighted_sum: i128 = 0;
        for (i, &r_i) in self.filtration_exponents.iter().enumerate() {
            let power = checked_pow(self.params.prime(), d - 1 - i as u32) as i128;
            weighted_sum += r_i as i128 * power;
        }
        assert!(
            weighted_sum % e == 0,
            "internal invariant: sum r_i p^(d-1-i) = {weighted_sum} must be divisible by e = {e} for chain-valid data"
        );
        let quotient = weighted_sum / e;
        let kappa = (self.descent_exponents[0] as i128 + p * quotient).rem_euclid(e);
        ExponentClass::new(self.params, kappa as i64)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error("weight r = {got} outside 0..={max}")]
    WeightOutOfRange { got: i64, max: i64 },
    #[error("expected {expected} x-entries, got {got}")]
    XLength { expected: usize, got: usize },
    #[error("expected {expected} y-entries, got {got}")]
    YLength { expected: usize, got: usize },
    #[error("x_{index} = {got} outside 0..={max}")]
    XOutOfRange { index: usize, got: i64, max: i64 },
    #[error("y_{index} = {got} outside 0..={max}")]
    YOutOfRange { index: usize, got: i64, max: i64 },
    #[error("infeasible step: filtration exponent r_{index} = s*(x_{next} - x_{index}) + e*y_{index} = {value} outside 0..={max}")]
    InfeasibleStep {
        index: usize,
        next: usize,
        value: i64,
        max: i64,
    },
    #[error("allowed_x must be non-empty")]
    EmptyAllowedSet,
    #[error("allowed_x value {got} outside 0..={max}")]
    AllowedOutOfRange { got: i64, max: i64 },
}

/// A niveau-1 profile `(x_0..x_{d-1}, y_0..y_{d-1})` for weight bound `r`:
/// `x_i` in `[0, p-2]` and `y_i` in `[0, r]`. The profile is *feasible* when each
/// derived filtration exponent `s (x_{i+1} - x_i) + e y_i` lies in `[0, e*r]`;
/// feasibility is checked when converting to [`RankOneData`], not at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Niveau1Profile {
    params: TameParams,
    weight: i64,
    x: Vec<i64>,
    y: Vec<i64>,
}

impl Niveau1Profile {
    pub fn new(
        params: TameParams,
        weight: i64,
        x: Vec<i64>,
        y: Vec<i64>,
    ) -> Result<Self, ProfileError> {
        let d = params.niveau() as usize;
        let p = params.prime();
        if !(0..=p - 2).contains(&weight) {
            return Err(ProfileError::WeightOutOfRange {
                got: weight,
                max: p - 2,
            });
        }
        if x.len() != d {
            return Err(ProfileError::XLength {
                expected: d,
                got: x.len(),
            });
        }
        if y.len() != d {
            return Err(ProfileError::YLength {
                expected: d,
                got: y.len(),
            });
        }
        for (index, &xi) in x.iter().enumerate() {
            if !(0..=p - 2).contains(&xi) {
                return Err(ProfileError::XOutOfRange {
                    index,
                    got: xi,
                    max: p - 2,
                });
            }
        }
        for (index, &yi) in y.iter().enumerate() {
            if !(0..=weight).contains(&yi) {
                return Err(ProfileError::YOutOfRange {
                    index,
                    got: yi,
                    max: weight,
                });
            }
        }
        Ok(Niveau1Profile { params, weight, x, y })
    }

    pub fn params(&self) -> TameParams {
        self.params
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn x(&self) -> &[i64] {
        &self.x
    }

    pub fn y(&self) -> &[i64] {
        &self.y
    }

    /// The derived filtration exponent `r_i = s (x_{i+1} - x_i) + e y_i`
    /// (cyclic indices), before any range check.
    pub fn filtration_step(&self, index: usize) -> i64 {
        let d = self.params.niveau() as usize;
        let next = (index + 1) % d;
        self.params.niveau_one_scale() * (self.x[next] - self.x[index])
            + self.params.exponent_modulus() * self.y[index]
    }

    /// Whether every derived filtration exponent lies in `[0, e*r]`.
    pub fn is_feasible(&self) -> bool {
        let max = self.params.exponent_modulus() * self.weight;
        (0..self.x.len()).all(|i| (0..=max).contains(&self.filtration_step(i)))
    }

    /// Expand the profile into rank-one data: `k_i = s x_i`, `r_i` as in
    /// [`Self::filtration_step`]. Fails with [`ProfileError::InfeasibleStep`] when
    /// a derived filtration exponent leaves `[0, e*r]`; the descent chain holds by
    /// construction for every profile.
    pub fn to_rank_one(&self) -> Result<RankOneData, ProfileError> {
        let d = self.params.niveau() as usize;
        let max = self.params.exponent_modulus() * self.weight;
        let mut filtration = Vec::with_capacity(d);
        for i in 0..d {
            let r_i = self.filtration_step(i);
            if !(0..=max).contains(&r_i) {
                return Err(ProfileError::InfeasibleStep {
                    index: i,
                    next: (i + 1) % d,
                    value: r_i,
                    max,
                });
            }
            filtration.push(r_i);
        }
        let descent: Vec<i64> = self
            .x
            .iter()
            .map(|&xi| self.params.niveau_one_scale() * xi)
            .collect();
        let data = RankOneData::new(self.params, self.weight, filtration, descent)
            .expect("internal invariant: profiles satisfy the descent chain by construction");
        Ok(data)
    }

    /// Closed form for the generic-fiber exponent of the expanded module:
    /// `(x_0 + y_0) + sum_{i=1}^{d-1} p^{d-i} (x_i + y_i) mod e`.
    ///
    /// Deliberately computed without going through [`RankOneData`]; agreement with
    /// `to_rank_one().generic_fiber_exponent()` is verified by tests, not assumed.
    pub fn kappa(&self) -> ExponentClass {
        let p = self.params.prime();
        let d = self.params.niveau();
        let mut acc: i64 = self.x[0] + self.y[0];
        for i in 1..d as usize {
            let power = checked_pow(p, d - i as u32);
            acc += power * (self.x[i] + self.y[i]);
        }
        ExponentClass::new(self.params, acc)
    }
}

/// Lazy enumeration of all feasible profiles for `(params, weight)` whose `x`
/// entries are drawn from `allowed_x`, in lexicographic order on `(x, y)` (with
/// `allowed_x` sorted ascending and duplicates removed).
pub fn enumerate_profiles(
    params: TameParams,
    weight: i64,
    allowed_x: &[i64],
) -> Result<ProfileIter, ProfileError> {
    let p = params.prime();
    if !(0..=p - 2).contains(&weight) {
        return Err(ProfileError::WeightOutOfRange {
            got: weight,
            max: p - 2,
        });
    }
    if allowed_x.is_empty() {
        return Err(ProfileError::EmptyAllowedSet);
    }
    let mut allowed: Vec<i64> = allowed_x.to_vec();
    for &x in &allowed {
        if !(0..=p - 2).contains(&x) {
            return Err(ProfileError::AllowedOutOfRange { got: x, max: p - 2 });
        }
    }
    allowed.sort_unstable();
    allowed.dedup();
    let d = params.niveau() as usize;
    Ok(ProfileIter {
        params,
        weight,
        allowed,
        x_index: vec![0; d],
        y_value: vec![0; d],
        exhausted: false,
    })
}

/// Iterator state for [`enumerate_profiles`]: a mixed-radix odometer over
/// `(x indices, y values)` with the `y` block least significant, which yields
/// exactly lexicographic order on `(x, y)`.
pub struct ProfileIter {
    params: TameParams,
    weight: i64,
    allowed: Vec<i64>,
    x_index: Vec<usize>,
    y_value: Vec<i64>,
    exhausted: bool,
}

impl ProfileIter {
    fn advance(&mut self) {
        // Increment y (least significant, rightmost fastest), then x.
        for i in (0..self.y_value.len()).rev() {
            if self.y_value[i] < self.weight {
                self.y_value[i] += 1;
                return;
            }
            self.y_value[i] = 0;
        }
        for i in (0..self.x_index.len()).rev() {
            if self.x_index[i] + 1 < self.allowed.len() {
                self.x_index[i] += 1;
                return;
            }
            self.x_index[i] = 0;
        }
        self.exhausted = true;
    }
}

impl Iterator for ProfileIter {
    type Item = Niveau1Profile;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.exhausted {
            let x: Vec<i64> = self.x_index.iter().map(|&i| self.allowed[i]).collect();
            let y = self.y_value.clone();
            self.advance();
            let profile = Niveau1Profile::new(self.params, self.weight, x, y)
                .expect("internal invariant: odometer stays in range");
            if profile.is_feasible() {
                return Some(profile);
            }
        }
        None
    }
}
