//! Explicit intertwiner search: an invertible `T` with
//! `rho(g) T = T theta(g)` for all generators `g`, if one exists.
//!
//! A `T` satisfying the relation on generators satisfies it on every word, so
//! it suffices to solve the linear system over the generators. The solution
//! space is computed exactly (one homogeneous equation per matrix entry per
//! generator); an invertible element of that space is then located by scanning
//! the projectivization — scalar multiples share invertibility, so normalizing
//! the first nonzero coordinate to 1 loses nothing and keeps the scan finite
//! and deterministic.

use super::matrix::{nullspace_basis, SquareMatrix};
use super::pair::PairError;

/// Refuse projective scans bigger than this many candidate combinations.
pub const SEARCH_CAP: u64 = 1_000_000;

/// Find an invertible intertwiner, `Ok(None)` when none exists (including the
/// contractual dimension-mismatch case).
pub fn find_intertwiner(
    rho_gens: &[SquareMatrix],
    theta_gens: &[SquareMatrix],
) -> Result<Option<SquareMatrix>, PairError> {
    if rho_gens.len() != theta_gens.len() {
        return Err(PairError::GeneratorCountMismatch {
            rho: rho_gens.len(),
            theta: theta_gens.len(),
        });
    }
    if rho_gens.is_empty() {
        return Err(PairError::GeneratorCountMismatch { rho: 0, theta: 0 });
    }
    let field = rho_gens[0].field().clone();
    let n = rho_gens[0].dim();
    let m = theta_gens[0].dim();
    for (side, gens, expected) in [("rho", rho_gens, n), ("theta", theta_gens, m)] {
        for (index, g) in gens.iter().enumerate() {
            if *g.field() != field {
                return Err(PairError::MixedFields { side, index });
            }
            if g.dim() != expected {
                return Err(PairError::MixedDimensions {
                    side,
                    index,
                    got: g.dim(),
                    expected,
                });
            }
        }
    }
    // Representations of different dimensions are never isomorphic: by
    // contract this is `None`, not an error.
    if n != m {
        return Ok(None);
    }

    // One homogeneous equation per generator per entry (i, j) of
    // rho(g) T - T theta(g); unknowns T[k][l] at index k*n + l.
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(rho_gens.len() * n * n);
    for (a, b) in rho_gens.iter().zip(theta_gens) {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0u32; n * n];
                for k in 0..n {
                    // + A[i][k] * T[k][j]
                    let idx = k * n + j;
                    row[idx] = field.add(row[idx], a.get(i, k));
                    // - T[i][k] * B[k][j]
                    let idx = i * n + k;
                    row[idx] = field.sub(row[idx], b.get(k, j));
                }
                rows.push(row);
            }
        }
    }
    let basis = nullspace_basis(&field, &rows, n * n);
    if basis.is_empty() {
        return Ok(None);
    }

    let q = field.size();
    let k = basis.len();
    // Projective points of the solution space: (q^k - 1)/(q - 1).
    let mut combos: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..k {
        combos += power;
        power = power.saturating_mul(q);
        if combos > SEARCH_CAP {
            return Err(PairError::SearchSpaceTooLarge {
                combinations: combos,
                cap: SEARCH_CAP,
            });
        }
    }

    // Scan: leading coefficient fixed to 1, tail in odometer order.
    for lead in 0..k {
        let tail_len = k - lead - 1;
        let total = q.pow(tail_len as u32);
        for tail_code in 0..total {
            let mut vec_t = basis[lead].clone();
            let mut rest = tail_code;
            for t in &basis[lead + 1..] {
                let c = (rest % q) as u32;
                rest /= q;
                if c != 0 {
                    for (slot, &x) in vec_t.iter_mut().zip(t) {
                        *slot = field.add(*slot, field.mul(c, x));
                    }
                }
            }
            let candidate = SquareMatrix::new(field.clone(), n, vec_t)?;
            if candidate.is_invertible() {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}
