//! Multiplicative closures of matrix generators, with a hard element cap.
//!
//! Closure is breadth-first from the identity, right-multiplying by generators
//! in their given order, so element indexing is deterministic for fixed input.
//! A finite set closed under products automatically contains inverses, so the
//! result is a genuine group. Every decision procedure in this module family
//! needs the *full* element list, which is why exceeding the cap is a hard
//! error rather than a truncation.

use super::field::FiniteField;
use super::matrix::{rref, MatrixError, SquareMatrix};
use std::collections::HashMap;
use thiserror::Error;

/// Default closure cap (elements).
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the element cap {cap} (partial size {partial})")]
    CapExceeded { cap: usize, partial: usize },
    #[error("generator {index} is singular (non-invertible)")]
    SingularGenerator { index: usize },
    #[error("generator {index} has dimension {got}, expected {expected}")]
    MixedDimensions {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("generator {index} lives in a different field")]
    MixedFields { index: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A fully enumerated matrix group with its generating set.
#[derive(Debug, Clone)]
pub struct GeneratedGroup {
    field: FiniteField,
    n: usize,
    elements: Vec<SquareMatrix>,
    index: HashMap<Vec<u32>, usize>,
    generators: Vec<SquareMatrix>,
}

impl GeneratedGroup {
    /// Closure of `generators` inside `GL_n(F_q)`. An empty generator list
    /// yields the trivial group (shape taken from `field`/`n`).
    pub fn generate(
        field: FiniteField,
        n: usize,
        generators: &[SquareMatrix],
        cap: usize,
    ) -> Result<GeneratedGroup, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if *g.field() != field {
                return Err(GroupError::MixedFields { index });
            }
            if g.dim() != n {
                return Err(GroupError::MixedDimensions {
                    index,
                    got: g.dim(),
                    expected: n,
                });
            }
            if !g.is_invertible() {
                return Err(GroupError::SingularGenerator { index });
            }
        }

        let identity = SquareMatrix::identity(field.clone(), n);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.entries().to_vec(), 0usize);
        let mut cursor = 0usize;
        while cursor < elements.len() {
            let current = elements[cursor].clone();
            for g in generators {
                let next = current.mul(g);
                let key = next.entries().to_vec();
                if !index.contains_key(&key) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            partial: elements.len(),
                        });
                    }
                    index.insert(key, elements.len());
                    elements.push(next);
                }
            }
            cursor += 1;
        }

        Ok(GeneratedGroup {
            field,
            n,
            elements,
            index,
            generators: generators.to_vec(),
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SquareMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[SquareMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &SquareMatrix) -> bool {
        self.index.contains_key(m.entries())
    }

    pub fn position(&self, m: &SquareMatrix) -> Option<usize> {
        self.index.get(m.entries()).copied()
    }

    /// Indices of the regular elements, in discovery order.
    pub fn regular_indices(&self) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, m)| m.is_regular())
            .map(|(i, _)| i)
            .collect()
    }

    /// The subgroup generated by the regular elements (trivial if none).
    pub fn regular_subgroup(&self, cap: usize) -> Result<GeneratedGroup, GroupError> {
        let regulars: Vec<SquareMatrix> = self
            .regular_indices()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect();
        GeneratedGroup::generate(self.field.clone(), self.n, &regulars, cap)
    }

    /// Is the group generated by its subset of regular elements?
    ///
    /// Requires at least one regular element: the identity-only group in
    /// dimension >= 2 has none (the identity's minimal polynomial has degree
    /// 1 < n) and is therefore *not* regular-generated under this definition.
    pub fn is_regular_generated(&self, cap: usize) -> Result<bool, GroupError> {
        let sub = self.regular_subgroup(cap)?;
        let has_regular = sub.order() > 1 || self.elements[0].is_regular();
        Ok(has_regular && sub.order() == self.order())
    }

    /// Irreducibility of the tautological representation on `F_q^n`, by the
    /// spinning algorithm: for every projective line, close its span under the
    /// generators; any stabilization below dimension `n` exhibits a proper
    /// invariant subspace.
    pub fn is_irreducible(&self) -> bool {
        self.invariant_subspace().is_none()
    }

    /// A proper nonzero invariant subspace (as an echelon basis), if any.
    pub fn invariant_subspace(&self) -> Option<Vec<Vec<u32>>> {
        let n = self.n;
        if n == 1 {
            return None;
        }
        let q = self.field.size();
        // Projective points: first nonzero coordinate = 1, enumerated by the
        // position of that coordinate and the free tail.
        for lead in 0..n {
            let tail_len = n - lead - 1;
            let count = q.pow(tail_len as u32);
            for tail_code in 0..count {
                let mut v = vec![0u32; n];
                v[lead] = 1;
                let mut rest = tail_code;
                for slot in v.iter_mut().skip(lead + 1) {
                    *slot = (rest % q) as u32;
                    rest /= q;
                }
                if let Some(basis) = self.spin(v) {
                    return Some(basis);
                }
            }
        }
        None
    }

    /// Close `span(seed)` under the generators; `Some(basis)` iff the closure
    /// stabilizes at a proper subspace.
    fn spin(&self, seed: Vec<u32>) -> Option<Vec<Vec<u32>>> {
        let n = self.n;
        let mut basis: Vec<Vec<u32>> = vec![seed];
        rref(&self.field, &mut basis, n);
        let mut frontier = basis.clone();
        while !frontier.is_empty() {
            let mut new_vectors = Vec::new();
            for v in &frontier {
                for g in &self.generators {
                    let w = g.apply(v);
                    // Reduce against the current basis; nonzero remainder grows it.
                    let mut candidate = basis.clone();
                    candidate.push(w.clone());
                    let before = basis.len();
                    rref(&self.field, &mut candidate, n);
                    if candidate.len() > before {
                        basis = candidate;
                        new_vectors.push(w);
                        if basis.len() == n {
                            return None;
                        }
                    }
                }
            }
            frontier = new_vectors;
        }
        debug_assert!(!basis.is_empty() && basis.len() < n);
        Some(basis)
    }
}
