//! Tiny integer helpers shared across modules.

/// Trial-division primality test. Sufficient for the small parameters this crate
/// accepts (primes are capped at 97 for tame parameters and 2^20 for field sizes).
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

/// Euclidean remainder: the representative of `value` in `[0, modulus)`.
pub fn modulo(value: i64, modulus: i64) -> i64 {
    debug_assert!(modulus > 0);
    value.rem_euclid(modulus)
}

/// `base^exp` with overflow checks; panics on overflow (callers keep inputs small).
pub fn checked_pow(base: i64, exp: u32) -> i64 {
    base.checked_pow(exp).expect("integer overflow in checked_pow")
}
