//! Python bindings (`modp_lab_py`) for the exact-arithmetic laboratory.
//!
//! The module exposes the two workhorse types (`TameParams`, `ResidualRep`)
//! plus function wrappers around the enumeration, verification, and
//! matrix-group entry points. Report-shaped results come back as plain dicts
//! with the same camelCase keys the CLI prints, so payloads are directly
//! comparable across the two frontends. All errors raise `ValueError`.

use modp_lab::breuil::enumerate_profiles as core_enumerate_profiles;
use modp_lab::matgroup::{
    admissible_weights as core_admissible_weights, build_monomial_induction, factor_prime_power,
    verify_regular_lemma, FiniteField, LemmaMode, RepresentationPair, SquareMatrix, DEFAULT_CAP,
};
use modp_lab::{
    attainable_exponents as core_attainable_exponents, exhaustive_verify,
    exhaustive_verify_all_types, InertialType, ResidualRep, TameParams, VerifyOptions,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value as JsonValue;
use std::str::FromStr;

fn value_err(err: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// Convert a serde_json tree into native Python objects.
fn json_to_py(py: Python<'_>, value: &JsonValue) -> PyResult<Py<PyAny>> {
    match value {
        JsonValue::Null => Ok(py.None()),
        JsonValue::Bool(b) => b.into_py_any(py),
        JsonValue::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        JsonValue::String(s) => s.into_py_any(py),
        JsonValue::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        JsonValue::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn serialize_to_py(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let doc = serde_json::to_value(value).map_err(value_err)?;
    json_to_py(py, &doc)
}

/// One matrix entry: either an integer (image of `Z` in the prime subfield)
/// or a coefficient list in the field's polynomial basis.
#[derive(FromPyObject)]
enum EntrySpec {
    Scalar(i64),
    Coeffs(Vec<u64>),
}

fn field_from_q(q: u64) -> PyResult<FiniteField> {
    let (l, m) = factor_prime_power(q)
        .ok_or_else(|| PyValueError::new_err(format!("q = {q} is not a prime power")))?;
    FiniteField::with_default_modulus(l, m).map_err(value_err)
}

fn matrix_from_entries(field: &FiniteField, entries: &[EntrySpec]) -> PyResult<SquareMatrix> {
    let len = entries.len();
    let n = (1..=6usize)
        .find(|n| n * n == len)
        .ok_or_else(|| PyValueError::new_err(format!("{len} entries is not n*n for n in 1..=6")))?;
    let codes = entries
        .iter()
        .map(|entry| match entry {
            EntrySpec::Scalar(v) => Ok(field.from_int(*v)),
            EntrySpec::Coeffs(coeffs) => field.from_coeffs(coeffs).map_err(value_err),
        })
        .collect::<PyResult<Vec<u32>>>()?;
    SquareMatrix::new(field.clone(), n, codes).map_err(value_err)
}

fn matrices_from(field: &FiniteField, gens: Vec<Vec<EntrySpec>>) -> PyResult<Vec<SquareMatrix>> {
    gens.iter()
        .map(|entries| matrix_from_entries(field, entries))
        .collect()
}

/// Ambient data `(p, d)` for tame inertia exponents modulo `p^d - 1`.
#[pyclass(name = "TameParams", frozen)]
struct PyTameParams {
    inner: TameParams,
}

#[pymethods]
impl PyTameParams {
    #[new]
    #[pyo3(signature = (p, d = 1))]
    fn new(p: i64, d: u32) -> PyResult<Self> {
        Ok(PyTameParams {
            inner: TameParams::new(p, d).map_err(value_err)?,
        })
    }

    /// The odd prime `p`.
    #[getter]
    fn p(&self) -> i64 {
        self.inner.prime()
    }

    /// The niveau `d`.
    #[getter]
    fn d(&self) -> u32 {
        self.inner.niveau()
    }

    /// The exponent modulus `e = p^d - 1`.
    #[getter]
    fn e(&self) -> i64 {
        self.inner.exponent_modulus()
    }

    /// The niveau-one scale `s = 1 + p + ... + p^(d-1)`.
    #[getter]
    fn s(&self) -> i64 {
        self.inner.niveau_one_scale()
    }

    /// Reduce an integer into the canonical range `0..e`.
    fn reduce(&self, value: i64) -> i64 {
        self.inner.reduce(value)
    }

    fn __repr__(&self) -> String {
        format!("TameParams(p={}, d={})", self.inner.prime(), self.inner.niveau())
    }
}

/// A semisimple mod-p representation given as induced summands `d:kappa`.
#[pyclass(name = "ResidualRep", frozen)]
struct PyResidualRep {
    inner: ResidualRep,
}

#[pymethods]
impl PyResidualRep {
    /// Parse `"d:kappa,d:kappa,..."` over the prime `p`.
    #[staticmethod]
    fn parse(p: i64, text: &str) -> PyResult<Self> {
        Ok(PyResidualRep {
            inner: ResidualRep::parse(p, text).map_err(value_err)?,
        })
    }

    #[getter]
    fn prime(&self) -> i64 {
        self.inner.prime()
    }

    #[getter]
    fn dimension(&self) -> i64 {
        self.inner.dimension()
    }

    /// All niveau-1 inertia exponents, sorted.
    fn exponents(&self) -> Vec<i64> {
        self.inner.exponents()
    }

    fn is_r_regular(&self, r: i64) -> bool {
        self.inner.is_r_regular(r)
    }

    fn det_inertia_exponent(&self) -> i64 {
        self.inner.det_inertia_exponent()
    }

    fn has_big_subquotient(&self) -> bool {
        self.inner.has_big_subquotient()
    }

    /// Summand records as dicts `{d, kappa, digits}`.
    fn summands(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        serialize_to_py(py, &self.inner.summand_records())
    }

    /// Twist every summand by `t` niveau-one steps.
    fn twist(&self, t: i64) -> Self {
        PyResidualRep {
            inner: self.inner.twist(t),
        }
    }

    /// Canonical representative under per-summand Frobenius orbits.
    fn orbit_canonical(&self) -> Self {
        PyResidualRep {
            inner: self.inner.orbit_canonical(),
        }
    }

    fn __repr__(&self) -> String {
        format!("ResidualRep({}, \"{}\")", self.inner.prime(), self.inner)
    }
}

/// Enumerate feasible rank-one profiles; each item carries both exponent
/// routes (closed-form and via the assembled module), which always agree.
#[pyfunction]
#[pyo3(signature = (p, d, r, allowed = None))]
fn enumerate_profiles(
    py: Python<'_>,
    p: i64,
    d: u32,
    r: i64,
    allowed: Option<Vec<i64>>,
) -> PyResult<Py<PyAny>> {
    let params = TameParams::new(p, d).map_err(value_err)?;
    let allowed = allowed.unwrap_or_else(|| (0..=p - 2).collect());
    let mut records = Vec::new();
    for profile in core_enumerate_profiles(params, r, &allowed).map_err(value_err)? {
        let module = profile.to_rank_one().map_err(value_err)?;
        records.push(serde_json::json!({
            "x": profile.x(),
            "y": profile.y(),
            "kappaProfile": profile.kappa().value(),
            "kappaModule": module.generic_fiber_exponent().value(),
        }));
    }
    json_to_py(py, &JsonValue::Array(records))
}

/// Sorted exponents attainable as the generic-fiber exponent of some feasible
/// profile whose x-values are drawn from the inertial type.
#[pyfunction]
fn attainable_exponents(
    p: i64,
    d: u32,
    r: i64,
    type_exponents: Vec<i64>,
) -> PyResult<Vec<i64>> {
    let params = TameParams::new(p, d).map_err(value_err)?;
    let ty = InertialType::new(p, type_exponents).map_err(value_err)?;
    Ok(core_attainable_exponents(params, r, &ty)
        .map_err(value_err)?
        .into_iter()
        .collect())
}

/// Exhaustively screen candidate reps for one inertial type (when
/// `type_exponents` is given) or for every type of size `n`.
#[pyfunction]
#[pyo3(signature = (p, n, r, type_exponents = None, budget = None, orbit_dedup = true, skip_big_subquotient = false, workers = None))]
#[allow(clippy::too_many_arguments)]
fn verify_theorem(
    py: Python<'_>,
    p: i64,
    n: usize,
    r: i64,
    type_exponents: Option<Vec<i64>>,
    budget: Option<u64>,
    orbit_dedup: bool,
    skip_big_subquotient: bool,
    workers: Option<usize>,
) -> PyResult<Py<PyAny>> {
    let options = VerifyOptions {
        budget: budget.unwrap_or(VerifyOptions::default().budget),
        orbit_dedup,
        skip_big_subquotient,
        workers,
    };
    let report = match type_exponents {
        Some(exponents) => {
            if exponents.len() != n {
                return Err(PyValueError::new_err(format!(
                    "type has {} exponents but n is {}",
                    exponents.len(),
                    n
                )));
            }
            let ty = InertialType::new(p, exponents).map_err(value_err)?;
            exhaustive_verify(&ty, r, &options).map_err(value_err)?
        }
        None => exhaustive_verify_all_types(p, n, r, &options).map_err(value_err)?,
    };
    serialize_to_py(py, &report)
}

/// Weights passing the q-restricted determinant congruence, sorted.
#[pyfunction]
fn admissible_weights(q: u64, n: usize) -> PyResult<Vec<Vec<u64>>> {
    Ok(core_admissible_weights(q, n)
        .map_err(value_err)?
        .into_iter()
        .collect())
}

/// Whether the matrix is regular (minimal polynomial = characteristic
/// polynomial) over `F_q` with the default modulus.
#[pyfunction]
fn is_regular_matrix(q: u64, entries: Vec<EntrySpec>) -> PyResult<bool> {
    let field = field_from_q(q)?;
    Ok(matrix_from_entries(&field, &entries)?.is_regular())
}

/// Characteristic polynomial coefficients, low degree first (packed codes;
/// over a prime field these are ordinary residues).
#[pyfunction]
fn char_poly(q: u64, entries: Vec<EntrySpec>) -> PyResult<Vec<u32>> {
    let field = field_from_q(q)?;
    Ok(matrix_from_entries(&field, &entries)?
        .char_poly()
        .coeffs()
        .to_vec())
}

/// Build the standard monomial induction over `F_q`, close it, and run the
/// regular-criteria checklist.
#[pyfunction]
#[pyo3(signature = (q, exponents, mode = "induced"))]
fn monomial_verify(
    py: Python<'_>,
    q: u64,
    exponents: Vec<u64>,
    mode: &str,
) -> PyResult<Py<PyAny>> {
    let mode = LemmaMode::from_str(mode).map_err(PyValueError::new_err)?;
    let exponents: [u64; 3] = exponents.try_into().map_err(|list: Vec<u64>| {
        PyValueError::new_err(format!("exponents needs exactly 3 values, got {}", list.len()))
    })?;
    let field = field_from_q(q)?;
    let induction = build_monomial_induction(field, exponents).map_err(value_err)?;
    let group = induction.close(DEFAULT_CAP).map_err(value_err)?;
    let report = verify_regular_lemma(&group, mode, DEFAULT_CAP).map_err(value_err)?;
    let doc = serde_json::json!({
        "groupOrder": group.order(),
        "zeta": induction.zeta(),
        "shiftInvariant": induction.shift_invariant(),
        "report": serde_json::to_value(&report).map_err(value_err)?,
    });
    json_to_py(py, &doc)
}

/// Close the paired group of `(rho(g), theta(g))` and check char-poly
/// annihilation on every pair.
#[pyfunction]
fn annihilation_holds(
    py: Python<'_>,
    q: u64,
    rho_gens: Vec<Vec<EntrySpec>>,
    theta_gens: Vec<Vec<EntrySpec>>,
) -> PyResult<Py<PyAny>> {
    let field = field_from_q(q)?;
    let rho = matrices_from(&field, rho_gens)?;
    let theta = matrices_from(&field, theta_gens)?;
    let pair = RepresentationPair::build(field, rho, theta, DEFAULT_CAP).map_err(value_err)?;
    let report = pair.annihilation_holds();
    let doc = serde_json::json!({
        "pairCount": pair.order(),
        "report": serde_json::to_value(&report).map_err(value_err)?,
    });
    json_to_py(py, &doc)
}

#[pymodule]
fn modp_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTameParams>()?;
    m.add_class::<PyResidualRep>()?;
    m.add_function(wrap_pyfunction!(enumerate_profiles, m)?)?;
    m.add_function(wrap_pyfunction!(attainable_exponents, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_weights, m)?)?;
    m.add_function(wrap_pyfunction!(is_regular_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(char_poly, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_verify, m)?)?;
    m.add_function(wrap_pyfunction!(annihilation_holds, m)?)?;
    Ok(())
}
