//! Small finite fields `F_q`, `q = l^m <= 2^20`, with exact arithmetic.
//!
//! An element is a packed code `c_0 + c_1*l + ... + c_{m-1}*l^{m-1}` in
//! `0..q`, where `(c_0, ..., c_{m-1})` are the coefficients of its polynomial
//! representative modulo a monic irreducible modulus of degree `m` (stored
//! low-to-high). Packing makes elements `u32`-sized, canonical, and hashable,
//! so matrices and group elements deduplicate bit-exactly.
//!
//! Fields with `q <= 256` precompute full multiplication and inverse tables;
//! larger fields multiply by polynomial reduction on demand. The default
//! modulus for a given `(l, m)` is the irreducible polynomial with the
//! smallest packed code, found by trial factorization (cheap for `q <= 2^20`).

use crate::arith::is_prime;
use serde::Serialize;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;
/// Fields up to this size get full multiplication/inverse lookup tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("degree must be >= 1, got {0}")]
    BadDegree(u32),
    #[error("field size {q} exceeds the supported maximum {max}", max = MAX_FIELD_SIZE)]
    TooLarge { q: u64 },
    #[error("modulus must be monic of degree {expected}, got coefficient list {got:?}")]
    BadModulusShape { expected: u32, got: Vec<u32> },
    #[error("modulus coefficient {0} is not reduced modulo the characteristic {1}")]
    BadModulusCoefficient(u32, u64),
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("element code {code} out of range for field of size {q}")]
    ElementOutOfRange { code: u32, q: u64 },
}

#[derive(Debug)]
struct FieldInner {
    characteristic: u64,
    degree: u32,
    /// Monic, length `degree + 1`, coefficients low-to-high in `[0, l)`.
    modulus: Vec<u32>,
    q: u64,
    mul_table: Option<Vec<u32>>,
    inv_table: Option<Vec<u32>>,
}

/// A finite field handle; cheap to clone (shared immutable innards).
#[derive(Clone)]
pub struct FiniteField(Arc<FieldInner>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteField(l={}, m={}, q={})",
            self.0.characteristic, self.0.degree, self.0.q
        )
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.characteristic == other.0.characteristic
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl std::hash::Hash for FiniteField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.characteristic.hash(state);
        self.0.degree.hash(state);
        self.0.modulus.hash(state);
    }
}

/// Serialized form: the field's defining data, not its tables.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct FieldDescription {
    pub characteristic: u64,
    pub degree: u32,
    pub modulus: Vec<u32>,
    pub size: u64,
}

impl FiniteField {
    /// The prime field `F_l`.
    pub fn prime_field(l: u64) -> Result<FiniteField, FieldError> {
        FiniteField::with_default_modulus(l, 1)
    }

    /// `F_{l^m}` with the lexicographically smallest irreducible modulus.
    pub fn with_default_modulus(l: u64, m: u32) -> Result<FiniteField, FieldError> {
        Self::check_shape(l, m)?;
        let modulus = default_modulus(l, m);
        FiniteField::new(l, m, modulus)
    }

    /// `F_{l^m}` with an explicit monic irreducible modulus (low-to-high,
    /// length `m + 1`).
    pub fn new(l: u64, m: u32, modulus: Vec<u32>) -> Result<FiniteField, FieldError> {
        let q = Self::check_shape(l, m)?;
        if modulus.len() != m as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(FieldError::BadModulusShape {
                expected: m,
                got: modulus,
            });
        }
        for &c in &modulus {
            if c as u64 >= l {
                return Err(FieldError::BadModulusCoefficient(c, l));
            }
        }
        if !is_irreducible_over_prime_field(l, &modulus) {
            return Err(FieldError::ReducibleModulus);
        }

        let mut inner = FieldInner {
            characteristic: l,
            degree: m,
            modulus,
            q,
            mul_table: None,
            inv_table: None,
        };
        if q <= TABLE_LIMIT {
            let qs = q as usize;
            let mut mul = vec![0u32; qs * qs];
            for a in 0..qs {
                for b in 0..=a {
                    let prod = mul_slow(&inner, a as u32, b as u32);
                    mul[a * qs + b] = prod;
                    mul[b * qs + a] = prod;
                }
            }
            let mut inv = vec![0u32; qs];
            for a in 1..qs {
                inv[a] = pow_slow(&inner, a as u32, q - 2);
            }
            inner.mul_table = Some(mul);
            inner.inv_table = Some(inv);
        }
        Ok(FiniteField(Arc::new(inner)))
    }

    fn check_shape(l: u64, m: u32) -> Result<u64, FieldError> {
        if l < 2 || !is_prime(l as i64) {
            return Err(FieldError::NotPrime(l));
        }
        if m == 0 {
            return Err(FieldError::BadDegree(m));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q.saturating_mul(l);
            if q > MAX_FIELD_SIZE {
                return Err(FieldError::TooLarge { q });
            }
        }
        Ok(q)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn size(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            characteristic: self.0.characteristic,
            degree: self.0.degree,
            modulus: self.0.modulus.clone(),
            size: self.0.q,
        }
    }

    /// Validate an element code.
    pub fn check_element(&self, code: u32) -> Result<u32, FieldError> {
        if (code as u64) < self.0.q {
            Ok(code)
        } else {
            Err(FieldError::ElementOutOfRange {
                code,
                q: self.0.q,
            })
        }
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// The image of an integer under `Z -> F_l` included into `F_q`.
    pub fn from_int(&self, value: i64) -> u32 {
        value.rem_euclid(self.0.characteristic as i64) as u32
    }

    /// Pack a coefficient vector (low-to-high, length <= m, entries < l).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<u32, FieldError> {
        if coeffs.len() > self.0.degree as usize {
            return Err(FieldError::ElementOutOfRange {
                code: u32::MAX,
                q: self.0.q,
            });
        }
        let l = self.0.characteristic;
        let mut code: u64 = 0;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= l {
                return Err(FieldError::BadModulusCoefficient(c as u32, l));
            }
            code += c * l.pow(i as u32);
        }
        Ok(code as u32)
    }

    /// Unpack a code into its coefficient vector (length m, low-to-high).
    pub fn to_coeffs(&self, code: u32) -> Vec<u32> {
        let l = self.0.characteristic;
        let mut rest = code as u64;
        let mut out = Vec::with_capacity(self.0.degree as usize);
        for _ in 0..self.0.degree {
            out.push((rest % l) as u32);
            rest /= l;
        }
        out
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.0.q && (b as u64) < self.0.q);
        let l = self.0.characteristic;
        if self.0.degree == 1 {
            return ((a as u64 + b as u64) % l) as u32;
        }
        // Per-digit addition without carries across digits.
        let mut out: u64 = 0;
        let mut pa = a as u64;
        let mut pb = b as u64;
        let mut place: u64 = 1;
        for _ in 0..self.0.degree {
            let s = (pa % l + pb % l) % l;
            out += s * place;
            place *= l;
            pa /= l;
            pb /= l;
        }
        out as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!((a as u64) < self.0.q);
        let l = self.0.characteristic;
        if self.0.degree == 1 {
            return if a == 0 { 0 } else { (l - a as u64) as u32 };
        }
        let mut out: u64 = 0;
        let mut pa = a as u64;
        let mut place: u64 = 1;
        for _ in 0..self.0.degree {
            let d = pa % l;
            out += if d == 0 { 0 } else { l - d } * place;
            place *= l;
            pa /= l;
        }
        out as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.0.q && (b as u64) < self.0.q);
        if let Some(table) = &self.0.mul_table {
            return table[a as usize * self.0.q as usize + b as usize];
        }
        mul_slow(&self.0, a, b)
    }

    /// Multiplicative inverse; panics on zero (callers must guard).
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.0.q);
        if let Some(table) = &self.0.inv_table {
            return table[a as usize];
        }
        pow_slow(&self.0, a, self.0.q - 2)
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if self.0.mul_table.is_some() {
            let mut acc = 1u32;
            let mut base = a;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul(acc, base);
                }
                base = self.mul(base, base);
                e >>= 1;
            }
            acc
        } else {
            pow_slow(&self.0, a, e)
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> u64 {
        assert!(a != 0, "order of zero is undefined");
        let mut order = 1u64;
        let mut acc = a;
        while acc != 1 {
            acc = self.mul(acc, a);
            order += 1;
        }
        order
    }

    /// The generator of `F_q^x` with the smallest packed code.
    pub fn smallest_primitive_element(&self) -> u32 {
        let target = self.0.q - 1;
        for code in 2..self.0.q as u32 {
            if self.element_order(code) == target {
                return code;
            }
        }
        // q = 2 or q = 3: the group is generated by 1 resp. 2; the loop above
        // covers q >= 4, and q = 3 returns at code 2, so only q = 2 lands here.
        1
    }

    /// All element codes, ascending.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q as u32
    }
}

/// Schoolbook multiply-and-reduce used to build tables and for large fields.
fn mul_slow(inner: &FieldInner, a: u32, b: u32) -> u32 {
    let l = inner.characteristic;
    let m = inner.degree as usize;
    if m == 1 {
        return ((a as u64 * b as u64) % l) as u32;
    }
    // Unpack digits.
    let unpack = |x: u32| {
        let mut rest = x as u64;
        let mut v = vec![0u64; m];
        for digit in v.iter_mut() {
            *digit = rest % l;
            rest /= l;
        }
        v
    };
    let da = unpack(a);
    let db = unpack(b);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % l;
        }
    }
    // Reduce modulo the monic modulus: X^m = -(c_0 + c_1 X + ... + c_{m-1} X^{m-1}).
    for k in (m..2 * m - 1).rev() {
        let coeff = prod[k];
        if coeff == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &c) in inner.modulus.iter().take(m).enumerate() {
            if c == 0 {
                continue;
            }
            let idx = k - m + i;
            let sub = (coeff * c as u64) % l;
            prod[idx] = (prod[idx] + l - sub) % l;
        }
    }
    let mut code: u64 = 0;
    let mut place: u64 = 1;
    for &digit in prod.iter().take(m) {
        code += digit * place;
        place *= l;
    }
    code as u32
}

fn pow_slow(inner: &FieldInner, a: u32, mut e: u64) -> u32 {
    let mut acc = 1u32;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_slow(inner, acc, base);
        }
        base = mul_slow(inner, base, base);
        e >>= 1;
    }
    acc
}

/// Remainder of `a` modulo monic `b` over `F_l`.
fn poly_rem_mod_l(l: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    let mut rem: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate().take(db) {
                let idx = shift + i;
                rem[idx] = (rem[idx] + l - (lead * c as u64) % l) % l;
            }
        }
        rem.pop();
        while rem.len() > db && *rem.last().unwrap() == 0 {
            if rem.len() == 1 {
                break;
            }
            rem.pop();
        }
    }
    rem.into_iter().map(|c| c as u32).collect()
}

fn is_zero_poly(p: &[u32]) -> bool {
    p.iter().all(|&c| c == 0)
}

/// Trial-division irreducibility over `F_l` for a monic polynomial given
/// low-to-high. Tries every monic divisor of degree `1..=deg/2`.
fn is_irreducible_over_prime_field(l: u64, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for dd in 1..=deg / 2 {
        // Enumerate the l^dd monic divisors of degree dd by packed tail code.
        let count = l.pow(dd as u32);
        for tail in 0..count {
            let mut divisor = Vec::with_capacity(dd + 1);
            let mut rest = tail;
            for _ in 0..dd {
                divisor.push((rest % l) as u32);
                rest /= l;
            }
            divisor.push(1);
            if is_zero_poly(&poly_rem_mod_l(l, poly, &divisor)) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree `m` over `F_l` with the smallest packed
/// tail code (tail = coefficients below the leading 1, low-to-high).
fn default_modulus(l: u64, m: u32) -> Vec<u32> {
    let count = l.pow(m);
    for tail in 0..count {
        let mut poly = Vec::with_capacity(m as usize + 1);
        let mut rest = tail;
        for _ in 0..m {
            poly.push((rest % l) as u32);
            rest /= l;
        }
        poly.push(1);
        if is_irreducible_over_prime_field(l, &poly) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_l")
}
