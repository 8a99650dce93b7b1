//! Exact square-matrix arithmetic over a [`FiniteField`], dimensions 1..=6.
//!
//! Characteristic polynomials come from the Berkowitz algorithm (division-free,
//! so it works verbatim over any commutative coefficient ring and needs no
//! pivoting logic); minimal polynomials from the least common multiple of the
//! annihilators of the standard basis vectors' Krylov subspaces. A matrix is
//! *regular* when the two coincide, equivalently when the minimal polynomial
//! has full degree, equivalently when a cyclic vector exists; the test suite
//! cross-checks all three characterizations.

use super::field::{FieldError, FiniteField};
use super::poly::Polynomial;
use std::fmt;
use thiserror::Error;

/// Inclusive dimension bounds for matrices.
pub const MIN_DIM: usize = 1;
pub const MAX_DIM: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension {0} outside supported range {MIN_DIM}..={MAX_DIM}")]
    BadDimension(usize),
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    WrongEntryCount { n: usize, expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Row-major `n x n` matrix of packed field-element codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    field: FiniteField,
    n: usize,
    entries: Vec<u32>,
}

impl SquareMatrix {
    pub fn new(field: FiniteField, n: usize, entries: Vec<u32>) -> Result<SquareMatrix, MatrixError> {
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(MatrixError::BadDimension(n));
        }
        if entries.len() != n * n {
            return Err(MatrixError::WrongEntryCount {
                n,
                expected: n * n,
                got: entries.len(),
            });
        }
        for &e in &entries {
            field.check_element(e)?;
        }
        Ok(SquareMatrix { field, n, entries })
    }

    pub fn zero(field: FiniteField, n: usize) -> SquareMatrix {
        SquareMatrix::new(field, n, vec![0; n * n]).expect("zero matrix is always valid")
    }

    pub fn identity(field: FiniteField, n: usize) -> SquareMatrix {
        SquareMatrix::scalar(field, n, 1)
    }

    /// `c * I`.
    pub fn scalar(field: FiniteField, n: usize, c: u32) -> SquareMatrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = c;
        }
        SquareMatrix::new(field, n, entries).expect("scalar matrix is always valid")
    }

    pub fn diagonal(field: FiniteField, diag: &[u32]) -> Result<SquareMatrix, MatrixError> {
        let n = diag.len();
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(MatrixError::BadDimension(n));
        }
        let mut entries = vec![0; n * n];
        for (i, &c) in diag.iter().enumerate() {
            entries[i * n + i] = c;
        }
        SquareMatrix::new(field, n, entries)
    }

    /// Permutation matrix sending `e_j` to `e_{perm[j]}`.
    pub fn from_permutation(field: FiniteField, perm: &[usize]) -> Result<SquareMatrix, MatrixError> {
        let n = perm.len();
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(MatrixError::BadDimension(n));
        }
        let mut seen = vec![false; n];
        let mut entries = vec![0; n * n];
        for (j, &i) in perm.iter().enumerate() {
            assert!(i < n && !seen[i], "not a permutation: {perm:?}");
            seen[i] = true;
            entries[i * n + j] = 1;
        }
        SquareMatrix::new(field, n, entries)
    }

    /// The cyclic shift `e_0 -> e_1 -> ... -> e_{n-1} -> e_0`.
    pub fn cyclic_shift(field: FiniteField, n: usize) -> Result<SquareMatrix, MatrixError> {
        let perm: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
        SquareMatrix::from_permutation(field, &perm)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.n + col]
    }

    fn assert_compatible(&self, other: &SquareMatrix) {
        assert!(
            self.field == other.field && self.n == other.n,
            "matrix arithmetic across incompatible shapes"
        );
    }

    pub fn add(&self, other: &SquareMatrix) -> SquareMatrix {
        self.assert_compatible(other);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        SquareMatrix {
            field: self.field.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn sub(&self, other: &SquareMatrix) -> SquareMatrix {
        self.assert_compatible(other);
        let f = &self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        SquareMatrix {
            field: self.field.clone(),
            n: self.n,
            entries,
        }
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        self.assert_compatible(other);
        let f = &self.field;
        let n = self.n;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    entries[idx] = f.add(entries[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        SquareMatrix {
            field: self.field.clone(),
            n,
            entries,
        }
    }

    pub fn scale(&self, c: u32) -> SquareMatrix {
        let f = &self.field;
        SquareMatrix {
            field: self.field.clone(),
            n: self.n,
            entries: self.entries.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn transpose(&self) -> SquareMatrix {
        let n = self.n;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        SquareMatrix {
            field: self.field.clone(),
            n,
            entries,
        }
    }

    pub fn pow(&self, mut e: u64) -> SquareMatrix {
        let mut acc = SquareMatrix::identity(self.field.clone(), self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.n);
        let f = &self.field;
        (0..self.n)
            .map(|i| {
                let mut acc = 0u32;
                for (j, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self.get(i, j), x));
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> u32 {
        let f = &self.field;
        let mut acc = 0u32;
        for i in 0..self.n {
            acc = f.add(acc, self.get(i, i));
        }
        acc
    }

    pub fn det(&self) -> u32 {
        let f = &self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| m[r * n + col] != 0);
            let pr = match pivot_row {
                None => return 0,
                Some(pr) => pr,
            };
            if pr != col {
                for c in 0..n {
                    m.swap(pr * n + c, col * n + c);
                }
                det = f.neg(det);
            }
            let pivot = m[col * n + col];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot);
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], inv);
                if factor != 0 {
                    for c in col..n {
                        let sub = f.mul(factor, m[col * n + c]);
                        m[r * n + c] = f.sub(m[r * n + c], sub);
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != 0
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<SquareMatrix> {
        let f = &self.field;
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = SquareMatrix::identity(self.field.clone(), n).entries;
        for col in 0..n {
            let pr = (col..n).find(|&r| m[r * n + col] != 0)?;
            if pr != col {
                for c in 0..n {
                    m.swap(pr * n + c, col * n + c);
                    inv.swap(pr * n + c, col * n + c);
                }
            }
            let pivot_inv = f.inv(m[col * n + col]);
            for c in 0..n {
                m[col * n + c] = f.mul(m[col * n + c], pivot_inv);
                inv[col * n + c] = f.mul(inv[col * n + c], pivot_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * n + col];
                if factor != 0 {
                    for c in 0..n {
                        let sm = f.mul(factor, m[col * n + c]);
                        m[r * n + c] = f.sub(m[r * n + c], sm);
                        let si = f.mul(factor, inv[col * n + c]);
                        inv[r * n + c] = f.sub(inv[r * n + c], si);
                    }
                }
            }
        }
        Some(SquareMatrix {
            field: self.field.clone(),
            n,
            entries: inv,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == SquareMatrix::identity(self.field.clone(), self.n)
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if i != j && self.get(i, j) != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_scalar(&self) -> bool {
        self.is_diagonal() && (1..self.n).all(|i| self.get(i, i) == self.get(0, 0))
    }

    /// `det(X I - M)`, monic of degree `n`, by the Berkowitz algorithm.
    pub fn char_poly(&self) -> Polynomial {
        let f = &self.field;
        let n = self.n;
        // Coefficients (descending powers) of the char poly of the leading
        // k x k principal submatrix; start with the empty matrix (poly = 1).
        let mut c: Vec<u32> = vec![1];
        for k in 0..n {
            // Toeplitz column for the step from k x k to (k+1) x (k+1):
            // t[0] = 1, t[1] = -A[k][k], t[j] = -(R B^{j-2} C) for j >= 2,
            // where R = A[k][0..k], C = A[0..k][k], B = leading k x k block.
            let mut t = vec![0u32; k + 2];
            t[0] = 1;
            t[1] = f.neg(self.get(k, k));
            if k > 0 {
                let mut w: Vec<u32> = (0..k).map(|i| self.get(i, k)).collect();
                for j in 2..k + 2 {
                    let mut dot = 0u32;
                    for i in 0..k {
                        dot = f.add(dot, f.mul(self.get(k, i), w[i]));
                    }
                    t[j] = f.neg(dot);
                    if j < k + 1 {
                        let mut nw = vec![0u32; k];
                        for (row, slot) in nw.iter_mut().enumerate() {
                            let mut acc = 0u32;
                            for col in 0..k {
                                acc = f.add(acc, f.mul(self.get(row, col), w[col]));
                            }
                            *slot = acc;
                        }
                        w = nw;
                    }
                }
            }
            // Convolve t with c, truncated to the first k+2 coefficients.
            let mut nc = vec![0u32; k + 2];
            for (i, &ti) in t.iter().enumerate() {
                if ti == 0 {
                    continue;
                }
                for (j, &cj) in c.iter().enumerate() {
                    if i + j < k + 2 {
                        nc[i + j] = f.add(nc[i + j], f.mul(ti, cj));
                    }
                }
            }
            c = nc;
        }
        c.reverse();
        Polynomial::new(self.field.clone(), c)
    }

    /// The monic annihilator of the cyclic subspace generated by `seed`.
    fn krylov_annihilator(&self, seed: &[u32]) -> Polynomial {
        let f = self.field.clone();
        let n = self.n;
        // Echelon rows with combination bookkeeping: each stored row is a
        // reduced Krylov vector plus the polynomial (in powers of M) that
        // produced it from the seed.
        let mut rows: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
        let mut current = seed.to_vec();
        let mut power = 0usize;
        loop {
            let mut combo = vec![0u32; n + 1];
            combo[power] = 1;
            let mut vec_red = current.clone();
            for (rv, rc) in &rows {
                let pivot_col = rv.iter().position(|&c| c != 0).expect("stored rows are nonzero");
                let c = vec_red[pivot_col];
                if c != 0 {
                    let factor = f.mul(c, f.inv(rv[pivot_col]));
                    for t in 0..n {
                        vec_red[t] = f.sub(vec_red[t], f.mul(factor, rv[t]));
                    }
                    for t in 0..n + 1 {
                        combo[t] = f.sub(combo[t], f.mul(factor, rc[t]));
                    }
                }
            }
            if vec_red.iter().all(|&c| c == 0) {
                // M^power seed is a combination of lower powers; the stored
                // combo polynomial annihilates the seed and is monic in X^power.
                return Polynomial::new(f, combo).monic();
            }
            rows.push((vec_red, combo));
            current = self.apply(&current);
            power += 1;
            assert!(power <= n, "Krylov sequence must terminate within n steps");
        }
    }

    /// Least-degree monic annihilator: the LCM of the annihilators of the
    /// standard basis vectors.
    pub fn min_poly(&self) -> Polynomial {
        let n = self.n;
        let mut result = Polynomial::one(self.field.clone());
        for i in 0..n {
            let mut seed = vec![0u32; n];
            seed[i] = 1;
            result = result.lcm(&self.krylov_annihilator(&seed));
            if result.degree() == Some(n) {
                break;
            }
        }
        result
    }

    /// Regular: minimal polynomial equals characteristic polynomial.
    pub fn is_regular(&self) -> bool {
        self.min_poly().degree() == Some(self.n)
    }

    /// Unipotent: characteristic polynomial is `(X - 1)^n`.
    pub fn is_unipotent(&self) -> bool {
        let f = self.field.clone();
        let mut target = Polynomial::one(f.clone());
        let lin = Polynomial::x_minus(f, 1);
        for _ in 0..self.n {
            target = target.mul(&lin);
        }
        self.char_poly() == target
    }
}

impl fmt::Display for SquareMatrix {
    /// Rows joined by `;`, e.g. `[1, 0; 0, 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        write!(f, "[")?;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a rectangular row list (in place); returns the
/// pivot column of each nonzero row, in order.
pub(crate) fn rref(field: &FiniteField, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row_cursor = 0usize;
    for col in 0..ncols {
        let pivot_row = (row_cursor..rows.len()).find(|&r| rows[r][col] != 0);
        let pr = match pivot_row {
            None => continue,
            Some(pr) => pr,
        };
        rows.swap(row_cursor, pr);
        let inv = field.inv(rows[row_cursor][col]);
        for c in 0..ncols {
            rows[row_cursor][c] = field.mul(rows[row_cursor][c], inv);
        }
        for r in 0..rows.len() {
            if r == row_cursor {
                continue;
            }
            let factor = rows[r][col];
            if factor != 0 {
                for c in 0..ncols {
                    let sub = field.mul(factor, rows[row_cursor][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        pivots.push(col);
        row_cursor += 1;
        if row_cursor == rows.len() {
            break;
        }
    }
    rows.truncate(row_cursor);
    pivots
}

/// Canonical basis of the right nullspace of the linear system given by
/// `rows` (each of length `ncols`): solutions `v` with `rows * v = 0`.
pub(crate) fn nullspace_basis(
    field: &FiniteField,
    rows: &[Vec<u32>],
    ncols: usize,
) -> Vec<Vec<u32>> {
    let mut work: Vec<Vec<u32>> = rows.to_vec();
    let pivots = rref(field, &mut work, ncols);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row_idx, &pc) in pivots.iter().enumerate() {
            // pivot variable = -sum(free coefficients)
            v[pc] = field.neg(work[row_idx][free]);
        }
        basis.push(v);
    }
    basis
}
