//! The q-restricted weight congruence filter.
//!
//! A normalized q-restricted dominant weight is a tuple
//! `a_1 >= a_2 >= ... >= a_n = 0` whose successive differences lie in
//! `[0, q-1]`. The filter keeps exactly the weights such that **every**
//! permutation `(x_1, ..., x_n)` of the tuple satisfies
//!
//! ```text
//! q^{n-1} x_1 + q^{n-2} x_2 + ... + x_n  =  q^beta   (mod (q^n - 1)/(q - 1))
//! ```
//!
//! for some `beta` in `[0, n-1]`. The expected outcome at small `q` is that
//! only the standard-representation weight `(1, 0, ..., 0)` survives.

use std::collections::BTreeSet;
use thiserror::Error;

/// Refuse weight scans with more than this many candidate tuples.
pub const WEIGHT_SEARCH_CAP: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("characteristic {l} of q must be at least n = {n}")]
    CharacteristicTooSmall { l: u64, n: usize },
    #[error("n = {0} outside the supported range 3..=6")]
    BadN(usize),
    #[error("{candidates} candidate weights exceed the search cap {cap}", cap = WEIGHT_SEARCH_CAP)]
    SearchTooLarge { candidates: u64 },
}

/// Factor `q` as `l^m` with `l` prime, if possible.
pub fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut l = 2u64;
    while l * l <= q {
        if q % l == 0 {
            let mut rest = q;
            let mut m = 0u32;
            while rest % l == 0 {
                rest /= l;
                m += 1;
            }
            return if rest == 1 { Some((l, m)) } else { None };
        }
        l += 1;
    }
    Some((q, 1)) // q itself is prime
}

fn for_each_permutation<T: Copy>(items: &mut Vec<T>, f: &mut impl FnMut(&[T]) -> bool) -> bool {
    // Heap's algorithm, iterative; `f` returns false to abort early.
    let n = items.len();
    let mut c = vec![0usize; n];
    if !f(items) {
        return false;
    }
    let mut i = 0usize;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            if !f(items) {
                return false;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    true
}

/// All normalized q-restricted weights passing the congruence filter, sorted.
pub fn admissible_weights(q: u64, n: usize) -> Result<BTreeSet<Vec<u64>>, WeightError> {
    if !(3..=6).contains(&n) {
        return Err(WeightError::BadN(n));
    }
    let (l, _) = factor_prime_power(q).ok_or(WeightError::NotPrimePower(q))?;
    if (l as usize) < n {
        return Err(WeightError::CharacteristicTooSmall { l, n });
    }
    let candidates = q.checked_pow(n as u32 - 1).unwrap_or(u64::MAX);
    if candidates > WEIGHT_SEARCH_CAP {
        return Err(WeightError::SearchTooLarge { candidates });
    }

    let modulus: u128 = ((q as u128).pow(n as u32) - 1) / (q as u128 - 1);
    let unit_powers: Vec<u128> = (0..n as u32).map(|b| (q as u128).pow(b) % modulus).collect();
    let place_values: Vec<u128> = (0..n as u32).rev().map(|e| (q as u128).pow(e)).collect();

    let mut out = BTreeSet::new();
    let mut diffs = vec![0u64; n - 1];
    loop {
        // Weight from differences: a_n = 0, a_i = a_{i+1} + d_i.
        let mut weight = vec![0u64; n];
        for i in (0..n - 1).rev() {
            weight[i] = weight[i + 1] + diffs[i];
        }

        let mut perm = weight.clone();
        let all_pass = for_each_permutation(&mut perm, &mut |x| {
            let mut sum: u128 = 0;
            for (xi, pv) in x.iter().zip(&place_values) {
                sum = (sum + *xi as u128 * (pv % modulus)) % modulus;
            }
            unit_powers.contains(&sum)
        });
        if all_pass {
            out.insert(weight);
        }

        // Odometer over the differences.
        let mut pos = 0usize;
        loop {
            if pos == n - 1 {
                return Ok(out);
            }
            if diffs[pos] + 1 < q {
                diffs[pos] += 1;
                break;
            }
            diffs[pos] = 0;
            pos += 1;
        }
    }
}
