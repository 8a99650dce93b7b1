//! Dense univariate polynomials over a [`FiniteField`], low-to-high
//! coefficients, always normalized (no trailing zeros; the zero polynomial has
//! an empty coefficient list).

use super::field::FiniteField;
use super::matrix::SquareMatrix;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FiniteField,
    /// Low-to-high, normalized.
    coeffs: Vec<u32>,
}

impl Polynomial {
    pub fn new(field: FiniteField, mut coeffs: Vec<u32>) -> Polynomial {
        for &c in &coeffs {
            field
                .check_element(c)
                .expect("polynomial coefficient out of range");
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: FiniteField) -> Polynomial {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FiniteField) -> Polynomial {
        Polynomial::constant(field, 1)
    }

    pub fn constant(field: FiniteField, c: u32) -> Polynomial {
        Polynomial::new(field, vec![c])
    }

    /// The monomial `X`.
    pub fn x(field: FiniteField) -> Polynomial {
        Polynomial::new(field, vec![0, 1])
    }

    /// `X - c`.
    pub fn x_minus(field: FiniteField, c: u32) -> Polynomial {
        let neg = field.neg(c);
        Polynomial::new(field, vec![neg, 1])
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn assert_same_field(&self, other: &Polynomial) {
        assert!(
            self.field == other.field,
            "polynomial arithmetic across distinct fields"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(f.add(self.coeff(i), other.coeff(i)));
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.field;
        Polynomial::new(
            self.field.clone(),
            self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        )
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = &self.field;
        Polynomial::new(
            self.field.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divmod(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        self.assert_same_field(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = self.field.clone();
        let dd = divisor.degree().unwrap();
        let lead_inv = self.field.inv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            if lead != 0 {
                let factor = self.field.mul(lead, lead_inv);
                quot[shift] = factor;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = shift + i;
                    let sub = self.field.mul(factor, c);
                    rem[idx] = self.field.sub(rem[idx], sub);
                }
            }
            debug_assert_eq!(*rem.last().unwrap(), 0);
            rem.pop();
        }
        (Polynomial::new(f.clone(), quot), Polynomial::new(f, rem))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        self.divmod(divisor).1
    }

    /// Monic normalization (unit multiple); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading_coeff()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field.clone());
        }
        let g = self.gcd(other);
        let (q, r) = self.divmod(&g);
        debug_assert!(r.is_zero());
        q.mul(other).monic()
    }

    /// Does `self` divide `other` exactly?
    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).is_zero()
    }

    /// Horner evaluation at a field element.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Horner evaluation at a square matrix over the same field.
    pub fn eval_matrix(&self, m: &SquareMatrix) -> SquareMatrix {
        assert!(
            self.field == *m.field(),
            "matrix evaluation across distinct fields"
        );
        let n = m.dim();
        let mut acc = SquareMatrix::zero(self.field.clone(), n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if c != 0 {
                let scaled_identity = SquareMatrix::scalar(self.field.clone(), n, c);
                acc = acc.add(&scaled_identity);
            }
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, c) => write!(f, "{c}*X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, c) => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}
