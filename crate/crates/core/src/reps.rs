//! Semisimple mod-p residual representations assembled from induced summands.
//!
//! An [`InducedSummand`] of niveau `d` is the irreducible `d`-dimensional
//! representation induced from the tame character `omega_d^kappa`; irreducibility
//! is exactly primitivity of `kappa`, which the constructor enforces. A
//! [`ResidualRep`] is a finite multiset of summands over a common prime; its
//! *exponent multiset* is the union of the base-`p` digit multisets of its
//! summands, read as residues mod `p`.
//!
//! The central predicate is `r`-regularity: the `n(r+2)` residues `a_i + k`
//! (`a_i` the exponents, `0 <= k <= r+1`) must be pairwise distinct mod `p`.
//! Pigeonhole makes this automatically false as soon as `n(r+2) > p`.

use crate::tame::{ExponentClass, ParamError, TameParams};
use crate::arith::modulo;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("exponent {kappa} is not primitive at niveau {niveau}: the induced representation would be reducible")]
    NotPrimitive { kappa: i64, niveau: u32 },
    #[error("a representation needs at least one summand")]
    Empty,
    #[error("summand primes disagree: {first} vs {second}")]
    PrimeMismatch { first: i64, second: i64 },
    #[error(transparent)]
    BadParams(#[from] ParamError),
    #[error("cannot parse summand {index}: {detail} (expected \"d:kappa\")")]
    Parse { index: usize, detail: String },
}

/// The irreducible representation induced from `omega_d^kappa` (with `kappa`
/// primitive), recorded by its exponent class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedSummand {
    kappa: ExponentClass,
}

impl InducedSummand {
    pub fn new(kappa: ExponentClass) -> Result<Self, RepError> {
        if !kappa.is_primitive() {
            return Err(RepError::NotPrimitive {
                kappa: kappa.value(),
                niveau: kappa.params().niveau(),
            });
        }
        Ok(InducedSummand { kappa })
    }

    /// Convenience constructor from raw `(p, d, kappa)`.
    pub fn from_parts(prime: i64, niveau: u32, kappa: i64) -> Result<Self, RepError> {
        let params = TameParams::new(prime, niveau)?;
        InducedSummand::new(ExponentClass::new(params, kappa))
    }

    pub fn kappa(&self) -> ExponentClass {
        self.kappa
    }

    pub fn params(&self) -> TameParams {
        self.kappa.params()
    }

    /// The dimension of the summand equals its niveau.
    pub fn niveau(&self) -> u32 {
        self.kappa.params().niveau()
    }

    /// The digit multiset of `kappa` as residues mod `p` (digit order, unsorted).
    pub fn exponents(&self) -> Vec<i64> {
        self.kappa.digits().into_vec()
    }

    /// Determinant-on-inertia contribution: `kappa mod (p-1)`.
    pub fn det_exponent(&self) -> i64 {
        self.kappa.norm_to_niveau1()
    }

    /// Replace `kappa` by the smallest exponent in its Frobenius orbit. The
    /// result induces an isomorphic representation.
    pub fn orbit_canonical(&self) -> Self {
        InducedSummand {
            kappa: self.kappa.orbit_min(),
        }
    }

    /// Tensor with `omega_1^t`: `kappa + s t`. Twisting preserves primitivity
    /// (Frobenius fixes `s`, so `p^{d'} kappa' - kappa' = p^{d'} kappa - kappa`).
    pub fn twist(&self, t: i64) -> Self {
        let twisted = self.kappa.twist_by_niveau_one(t);
        assert!(
            twisted.is_primitive(),
            "internal invariant: twisting must preserve primitivity"
        );
        InducedSummand { kappa: twisted }
    }
}

/// A non-empty multiset of induced summands over a common prime, kept sorted by
/// `(niveau, kappa)` so that equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidualRep {
    prime: i64,
    summands: Vec<InducedSummand>,
}

/// Serialized form of one summand in reports and CLI payloads.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SummandRecord {
    pub d: u32,
    pub kappa: i64,
    pub digits: Vec<i64>,
}

impl ResidualRep {
    pub fn new(summands: Vec<InducedSummand>) -> Result<Self, RepError> {
        let first = summands.first().ok_or(RepError::Empty)?;
        let prime = first.params().prime();
        for s in &summands {
            if s.params().prime() != prime {
                return Err(RepError::PrimeMismatch {
                    first: prime,
                    second: s.params().prime(),
                });
            }
        }
        let mut summands = summands;
        summands.sort_by_key(|s| (s.niveau(), s.kappa().value()));
        Ok(ResidualRep { prime, summands })
    }

    /// Parse the compact grammar `d:kappa(,d:kappa)*` over the given prime.
    pub fn parse(prime: i64, text: &str) -> Result<Self, RepError> {
        let mut summands = Vec::new();
        for (index, piece) in text.split(',').enumerate() {
            let piece = piece.trim();
            let (d_text, kappa_text) = piece.split_once(':').ok_or_else(|| RepError::Parse {
                index,
                detail: format!("missing ':' in {piece:?}"),
            })?;
            let niveau: u32 = d_text.trim().parse().map_err(|_| RepError::Parse {
                index,
                detail: format!("bad niveau {:?}", d_text.trim()),
            })?;
            let kappa: i64 = kappa_text.trim().parse().map_err(|_| RepError::Parse {
                index,
                detail: format!("bad exponent {:?}", kappa_text.trim()),
            })?;
            summands.push(InducedSummand::from_parts(prime, niveau, kappa)?);
        }
        ResidualRep::new(summands)
    }

    pub fn prime(&self) -> i64 {
        self.prime
    }

    pub fn summands(&self) -> &[InducedSummand] {
        &self.summands
    }

    /// Total dimension `n = sum of niveaus`.
    pub fn dimension(&self) -> i64 {
        self.summands.iter().map(|s| s.niveau() as i64).sum()
    }

    /// The exponent multiset (all summand digits), sorted ascending.
    pub fn exponents(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .summands
            .iter()
            .flat_map(|s| s.exponents())
            .collect();
        out.sort_unstable();
        out
    }

    /// `r`-regularity: the `n(r+2)` residues `a + k mod p` (`a` an exponent,
    /// `0 <= k <= r+1`) are pairwise distinct. `r` may be any non-negative
    /// integer; by pigeonhole the answer is `false` whenever `n(r+2) > p`.
    pub fn is_r_regular(&self, r: i64) -> bool {
        assert!(r >= 0, "r-regularity is defined for r >= 0");
        let mut seen = HashSet::new();
        for a in self.exponents() {
            for k in 0..=r + 1 {
                if !seen.insert(modulo(a + k, self.prime)) {
                    return false;
                }
            }
        }
        true
    }

    /// Sum of the summand determinant exponents mod `p-1`: the exponent `m` with
    /// `det(rep)|_inertia = omega_1^m`.
    pub fn det_inertia_exponent(&self) -> i64 {
        modulo(
            self.summands.iter().map(|s| s.det_exponent()).sum(),
            self.prime - 1,
        )
    }

    /// Whether some summand has niveau `> 1` ("a big subquotient").
    pub fn has_big_subquotient(&self) -> bool {
        self.summands.iter().any(|s| s.niveau() > 1)
    }

    /// Canonicalize every summand to its Frobenius-orbit representative. Two reps
    /// are isomorphic iff their canonical forms are equal.
    pub fn orbit_canonical(&self) -> Self {
        let summands = self.summands.iter().map(|s| s.orbit_canonical()).collect();
        ResidualRep::new(summands).expect("internal invariant: canonicalization preserves validity")
    }

    /// Tensor the whole representation by `omega_1^t` (summand-wise twist).
    ///
    /// The determinant exponent always shifts by `n t mod (p-1)`. The *exponent
    /// multiset* shifts by `t mod p` only in the absence of base-`p` carrying:
    /// see [`Self::twist_is_carry_free`].
    pub fn twist(&self, t: i64) -> Self {
        let summands = self.summands.iter().map(|s| s.twist(t)).collect();
        ResidualRep::new(summands).expect("internal invariant: twisting preserves validity")
    }

    /// Whether twisting by `omega_1^t` shifts every digit without carrying: for
    /// every summand, the digit-wise shifted vector `(a_i + t)` is still a valid
    /// digit vector (all entries `<= p-1` and not all equal to `p-1`). Under this
    /// condition the exponent multiset of `twist(t)` is exactly the multiset
    /// `{a + t mod p}` and `r`-regularity is preserved; when it fails, carries
    /// genuinely change the multiset (e.g. `p=5`, summand `(d=2, kappa=16)`,
    /// `t=2`: digits go `(1,3) -> (4,0)`, not `(3,0)`).
    pub fn twist_is_carry_free(&self, t: i64) -> bool {
        let p = self.prime;
        let t = modulo(t, p - 1);
        self.summands.iter().all(|s| {
            let digits = s.exponents();
            digits.iter().all(|&a| a + t <= p - 1)
                && !digits.iter().all(|&a| a + t == p - 1)
        })
    }

    /// Serialized summand records (for reports and CLI output).
    pub fn summand_records(&self) -> Vec<SummandRecord> {
        self.summands
            .iter()
            .map(|s| SummandRecord {
                d: s.niveau(),
                kappa: s.kappa().value(),
                digits: s.exponents(),
            })
            .collect()
    }
}

impl fmt::Display for ResidualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| format!("{}:{}", s.niveau(), s.kappa().value()))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}
