//! JSON generator files: the on-disk interchange format for matrix groups.
//!
//! ```json
//! {
//!   "field": {"char": 7, "degree": 1},
//!   "n": 3,
//!   "generators": [
//!     [1, 0, 0,  0, 6, 0,  0, 0, 6],
//!     [0, 0, 1,  1, 0, 0,  0, 1, 0]
//!   ]
//! }
//! ```
//!
//! `degree` defaults to 1 and `modulus` (low-to-high, monic) to the smallest
//! irreducible one. Each generator is a row-major list of `n*n` entries; an
//! entry is either an integer (image of `Z` in the prime subfield — negative
//! values allowed) or a coefficient list `[c0, c1, ...]` in the field's
//! polynomial basis, for extension-field elements.

use super::field::{FieldError, FiniteField};
use super::matrix::{MatrixError, SquareMatrix};
use serde::Deserialize;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("generator {index}: {source}")]
    Generator { index: usize, source: MatrixError },
    #[error("generator {index}, entry {entry}: {detail}")]
    BadEntry {
        index: usize,
        entry: usize,
        detail: String,
    },
    #[error("file defines no generators")]
    Empty,
}

#[derive(Debug, Deserialize)]
struct FieldSection {
    #[serde(rename = "char")]
    characteristic: u64,
    #[serde(default = "default_degree")]
    degree: u32,
    #[serde(default)]
    modulus: Option<Vec<u32>>,
}

fn default_degree() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Scalar(i64),
    Coeffs(Vec<u64>),
}

#[derive(Debug, Deserialize)]
struct GeneratorFile {
    field: FieldSection,
    n: usize,
    generators: Vec<Vec<Entry>>,
}

/// Parse a generator file from JSON text.
pub fn parse_generator_file(json: &str) -> Result<(FiniteField, Vec<SquareMatrix>), GenFileError> {
    let file: GeneratorFile = serde_json::from_str(json)?;
    let field = match file.field.modulus {
        Some(modulus) => FiniteField::new(file.field.characteristic, file.field.degree, modulus)?,
        None => FiniteField::with_default_modulus(file.field.characteristic, file.field.degree)?,
    };
    if file.generators.is_empty() {
        return Err(GenFileError::Empty);
    }
    let mut matrices = Vec::with_capacity(file.generators.len());
    for (index, raw) in file.generators.iter().enumerate() {
        let mut entries = Vec::with_capacity(raw.len());
        for (entry, value) in raw.iter().enumerate() {
            let code = match value {
                Entry::Scalar(v) => field.from_int(*v),
                Entry::Coeffs(coeffs) => {
                    field
                        .from_coeffs(coeffs)
                        .map_err(|e| GenFileError::BadEntry {
                            index,
                            entry,
                            detail: e.to_string(),
                        })?
                }
            };
            entries.push(code);
        }
        let matrix = SquareMatrix::new(field.clone(), file.n, entries)
            .map_err(|source| GenFileError::Generator { index, source })?;
        matrices.push(matrix);
    }
    Ok((field, matrices))
}

/// Read and parse a generator file from disk.
pub fn load_generator_file(
    path: impl AsRef<Path>,
) -> Result<(FiniteField, Vec<SquareMatrix>), GenFileError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| GenFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_generator_file(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_prime_field_file() {
        let json = r#"{
            "field": {"char": 7},
            "n": 3,
            "generators": [
                [1, 0, 0,  0, -1, 0,  0, 0, -1],
                [0, 0, 1,  1, 0, 0,  0, 1, 0]
            ]
        }"#;
        let (field, gens) = parse_generator_file(json).unwrap();
        assert_eq!(field.size(), 7);
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].get(1, 1), 6); // -1 reduced
        assert_eq!(gens[1].get(0, 2), 1);
    }

    #[test]
    fn parse_extension_field_file() {
        // F_4 with alpha = [0,1]: diag(alpha, alpha^2, alpha).
        let json = r#"{
            "field": {"char": 2, "degree": 2},
            "n": 3,
            "generators": [
                [[0,1], 0, 0,  0, [1,1], 0,  0, 0, [0,1]]
            ]
        }"#;
        let (field, gens) = parse_generator_file(json).unwrap();
        assert_eq!(field.size(), 4);
        assert_eq!(gens[0].get(0, 0), 2);
        assert_eq!(gens[0].get(1, 1), 3);
    }

    #[test]
    fn explicit_modulus_is_honored() {
        // F_9 with modulus X^2 + X + 2 (also irreducible over F_3).
        let json = r#"{
            "field": {"char": 3, "degree": 2, "modulus": [2, 1, 1]},
            "n": 1,
            "generators": [[[0,1]]]
        }"#;
        let (field, gens) = parse_generator_file(json).unwrap();
        assert_eq!(field.modulus(), &[2, 1, 1]);
        // X^2 = -X - 2 = 2X + 1: code 1 + 2*3 = 7.
        assert_eq!(field.mul(gens[0].get(0, 0), gens[0].get(0, 0)), 7);
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            parse_generator_file("{"),
            Err(GenFileError::Json(_))
        ));
        let no_gens = r#"{"field": {"char": 5}, "n": 2, "generators": []}"#;
        assert!(matches!(
            parse_generator_file(no_gens),
            Err(GenFileError::Empty)
        ));
        let wrong_count = r#"{"field": {"char": 5}, "n": 2, "generators": [[1, 0, 0]]}"#;
        assert!(matches!(
            parse_generator_file(wrong_count),
            Err(GenFileError::Generator { index: 0, .. })
        ));
        let bad_coeff = r#"{"field": {"char": 5}, "n": 1, "generators": [[[7]]]}"#;
        assert!(matches!(
            parse_generator_file(bad_coeff),
            Err(GenFileError::BadEntry { .. })
        ));
        let reducible = r#"{"field": {"char": 2, "degree": 2, "modulus": [1, 0, 1]}, "n": 1, "generators": [[1]]}"#;
        assert!(matches!(
            parse_generator_file(reducible),
            Err(GenFileError::Field(FieldError::ReducibleModulus))
        ));
    }
}
