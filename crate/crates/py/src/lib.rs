//! Python bindings for `ketsim`, importable as `pyketsim`.

use std::collections::BTreeMap;

use ketsim::{Error, LabelMode, OracleKind, OutcomeDistribution};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pyketsim, KetsimError, PyValueError);

fn err(e: Error) -> PyErr {
    KetsimError::new_err(e.to_string())
}

fn mode(decimal: bool) -> LabelMode {
    if decimal {
        LabelMode::Decimal
    } else {
        LabelMode::Binary
    }
}

fn kind_name(kind: OracleKind) -> &'static str {
    match kind {
        OracleKind::Constant => "constant",
        OracleKind::Balanced => "balanced",
        OracleKind::Unconstrained => "unconstrained",
    }
}

/// A normalized n-qubit statevector.
#[pyclass(
    name = "QuantumState",
    module = "pyketsim",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyQuantumState(ketsim::QuantumState);

#[pymethods]
impl PyQuantumState {
    /// Builds a state from `2**n` amplitudes; they must already have unit norm.
    #[new]
    fn new(amplitudes: Vec<num_complex::Complex64>) -> PyResult<Self> {
        ketsim::QuantumState::from_amplitudes(amplitudes)
            .map(Self)
            .map_err(err)
    }

    /// `|bits>`, e.g. `QuantumState.basis("101")`.
    #[staticmethod]
    fn basis(bits: &str) -> PyResult<Self> {
        ketsim::QuantumState::basis(bits).map(Self).map_err(err)
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    #[staticmethod]
    fn normalized(amplitudes: Vec<num_complex::Complex64>) -> PyResult<Self> {
        ketsim::QuantumState::normalize(amplitudes)
            .map(Self)
            .map_err(err)
    }

    /// Parses Dirac notation such as `"i*(1/sqrt(2))|01> + (1/sqrt(2))|11>"`.
    #[staticmethod]
    #[pyo3(signature = (text, qubits=None, normalize=false))]
    fn parse(text: &str, qubits: Option<usize>, normalize: bool) -> PyResult<Self> {
        let parsed = if normalize {
            ketsim::parse_state_normalized(text, qubits)
        } else {
            ketsim::parse_state(text, qubits)
        };
        parsed.map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn amplitudes(&self) -> Vec<num_complex::Complex64> {
        self.0.amps().to_vec()
    }

    /// `<self|ket>`.
    fn dot(&self, ket: &Self) -> PyResult<num_complex::Complex64> {
        self.0.dot(&ket.0).map_err(err)
    }

    fn tensor(&self, other: &Self) -> PyResult<Self> {
        self.0.tensor(&other.0).map(Self).map_err(err)
    }

    #[pyo3(signature = (other, tol=1e-12))]
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    #[pyo3(signature = (decimal=false, precision=10))]
    fn format(&self, decimal: bool, precision: usize) -> String {
        ketsim::format_state(&self.0, mode(decimal), precision)
    }

    fn __len__(&self) -> usize {
        self.0.dim()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuantumState({:?})", self.0.to_string())
    }
}

/// Sparse linear operator written as a sum of weighted ket-bras.
#[pyclass(name = "Operator", module = "pyketsim", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyOperator(ketsim::Operator);

#[pymethods]
impl PyOperator {
    /// `sum w |ket><bra|` from `(weight, ket_bits, bra_bits)` triples.
    #[new]
    fn new(terms: Vec<(num_complex::Complex64, String, String)>) -> PyResult<Self> {
        let borrowed: Vec<_> = terms
            .iter()
            .map(|(w, k, b)| (*w, k.as_str(), b.as_str()))
            .collect();
        ketsim::Operator::from_terms(&borrowed)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        ketsim::Operator::identity(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn pauli_x() -> Self {
        Self(ketsim::Operator::pauli_x())
    }

    #[staticmethod]
    fn hadamard() -> Self {
        Self(ketsim::Operator::hadamard())
    }

    #[staticmethod]
    fn cnot() -> Self {
        Self(ketsim::Operator::cnot())
    }

    #[staticmethod]
    fn hadamard_n(n: usize) -> PyResult<Self> {
        ketsim::Operator::hadamard_n(n).map(Self).map_err(err)
    }

    /// `|ket><bra|` for two states of equal width.
    #[staticmethod]
    fn outer(ket: &PyQuantumState, bra: &PyQuantumState) -> PyResult<Self> {
        ketsim::Operator::outer(&ket.0, &bra.0)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn nnz(&self) -> usize {
        self.0.nnz()
    }

    fn entry(&self, row: usize, col: usize) -> num_complex::Complex64 {
        self.0.entry(row, col)
    }

    /// Nonzero entries as `(row, col, value)`, row-major.
    fn entries(&self) -> Vec<(usize, usize, num_complex::Complex64)> {
        self.0.entries().collect()
    }

    /// Returns `(normalized_output, normalization_factor)`.
    fn apply(&self, state: &PyQuantumState) -> PyResult<(PyQuantumState, f64)> {
        let report = self.0.apply(&state.0).map_err(err)?;
        Ok((PyQuantumState(report.output), report.normalization_factor))
    }

    /// The operator-state product before normalization.
    fn apply_raw(&self, state: &PyQuantumState) -> PyResult<Vec<num_complex::Complex64>> {
        self.0.apply_raw(&state.0).map_err(err)
    }

    fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// `self * other`: `other` acts first.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn tensor(&self, other: &Self) -> PyResult<Self> {
        self.0.tensor(&other.0).map(Self).map_err(err)
    }

    #[pyo3(signature = (tol=1e-12))]
    fn is_unitary(&self, tol: f64) -> bool {
        self.0.is_unitary(tol)
    }

    #[pyo3(signature = (other, tol=1e-12))]
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    /// Dense matrix as a list of rows.
    fn to_dense(&self) -> PyResult<Vec<Vec<num_complex::Complex64>>> {
        let m = self.0.to_dense().map_err(err)?;
        Ok(m.rows().map(<[_]>::to_vec).collect())
    }

    fn __repr__(&self) -> String {
        format!("Operator(n={}, nnz={})", self.0.n(), self.0.nnz())
    }
}

/// Truth table of `f: {0,1}^n -> {0,1}` with a query counter.
#[pyclass(name = "BooleanOracle", module = "pyketsim", skip_from_py_object)]
#[derive(Clone)]
pub struct PyBooleanOracle(ketsim::BooleanOracle);

#[pymethods]
impl PyBooleanOracle {
    /// `spec` is `constant:0`, `constant:1`, `balanced:parity`,
    /// `balanced:bit:<i>`, `balanced:random:<seed>` or `table:<bits>`.
    #[new]
    fn new(n: usize, spec: &str) -> PyResult<Self> {
        let spec: ketsim::OracleSpec = spec.parse().map_err(err)?;
        ketsim::BooleanOracle::from_spec(n, &spec)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn from_table(table: Vec<bool>) -> PyResult<Self> {
        ketsim::BooleanOracle::from_table(table)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// `"constant"`, `"balanced"` or `"unconstrained"`.
    #[getter]
    fn kind(&self) -> &'static str {
        kind_name(self.0.kind())
    }

    #[getter]
    fn table(&self) -> Vec<bool> {
        self.0.table().to_vec()
    }

    #[getter]
    fn queries(&self) -> u64 {
        self.0.queries()
    }

    fn query(&mut self, x: usize) -> PyResult<bool> {
        if x >> self.0.n() != 0 {
            return Err(KetsimError::new_err(format!(
                "input {x} is outside 0..{}",
                1usize << self.0.n()
            )));
        }
        Ok(self.0.query(x))
    }

    fn reset_queries(&mut self) {
        self.0.reset_queries();
    }

    fn __repr__(&self) -> String {
        format!(
            "BooleanOracle(n={}, kind={:?})",
            self.0.n(),
            kind_name(self.0.kind())
        )
    }
}

fn dist_from_dict(probs: BTreeMap<String, f64>) -> PyResult<OutcomeDistribution> {
    let n = probs.keys().next().map_or(0, String::len);
    OutcomeDistribution::new(n, probs).map_err(err)
}

#[pymodule]
mod pyketsim {
    use super::*;

    #[pymodule_export]
    use super::{KetsimError, PyBooleanOracle, PyOperator, PyQuantumState};

    #[pymodule_export]
    const SAMPLER_RNG: &str = ketsim::measurement::SAMPLER_RNG;

    /// Parses Dirac notation into a `QuantumState`.
    #[pyfunction]
    #[pyo3(signature = (text, qubits=None, normalize=false))]
    fn parse_state(text: &str, qubits: Option<usize>, normalize: bool) -> PyResult<PyQuantumState> {
        PyQuantumState::parse(text, qubits, normalize)
    }

    #[pyfunction]
    #[pyo3(signature = (state, decimal=false, precision=10))]
    fn format_state(state: &PyQuantumState, decimal: bool, precision: usize) -> String {
        state.format(decimal, precision)
    }

    /// `{bitstring: probability}` over all qubits.
    #[pyfunction]
    fn probabilities(state: &PyQuantumState) -> BTreeMap<String, f64> {
        ketsim::probabilities(&state.0).probs
    }

    /// Marginal distribution of the first `n_first` qubits.
    #[pyfunction]
    fn prefix_distribution(
        state: &PyQuantumState,
        n_first: usize,
    ) -> PyResult<BTreeMap<String, f64>> {
        ketsim::prefix_distribution(&state.0, n_first)
            .map(|d| d.probs)
            .map_err(err)
    }

    /// Draws `shots` outcomes from `{bitstring: probability}`; returns
    /// `{"shots", "seed", "counts"}`.
    #[pyfunction]
    #[pyo3(signature = (distribution, shots, seed=0))]
    fn sample<'py>(
        py: Python<'py>,
        distribution: BTreeMap<String, f64>,
        shots: u64,
        seed: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let rec = ketsim::sample(&dist_from_dict(distribution)?, shots, seed).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("shots", rec.shots)?;
        out.set_item("seed", rec.seed)?;
        out.set_item("counts", rec.counts)?;
        Ok(out)
    }

    /// `{"is_product", "residual", "factors"}`; `factors` is `None` for
    /// entangled states.
    #[pyfunction]
    #[pyo3(signature = (state, tol=ketsim::DEFAULT_PRODUCT_TOLERANCE))]
    fn is_product_state<'py>(
        py: Python<'py>,
        state: &PyQuantumState,
        tol: f64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = ketsim::is_product_state(&state.0, tol);
        let out = PyDict::new(py);
        out.set_item("is_product", r.is_product)?;
        out.set_item("residual", r.residual)?;
        let factors = r
            .factors
            .map(|fs| fs.into_iter().map(PyQuantumState).collect::<Vec<_>>());
        out.set_item("factors", factors)?;
        Ok(out)
    }

    #[pyfunction]
    fn bitdot(k: usize, j: usize) -> u8 {
        ketsim::bitdot(k, j)
    }

    /// `U_f |x>|y> = |x>|y xor f(x)>`.
    #[pyfunction]
    fn oracle_operator(oracle: &PyBooleanOracle) -> PyResult<PyOperator> {
        ketsim::build_oracle_operator(&oracle.0)
            .map(PyOperator)
            .map_err(err)
    }

    /// Runs the quantum algorithm. Returns a dict with `verdict`, `p_zero`,
    /// `oracle_applications`, `gate_layers`, `normalization_factors`,
    /// `distribution` and `promise_holds`.
    #[pyfunction]
    fn deutsch_jozsa<'py>(
        py: Python<'py>,
        oracle: &PyBooleanOracle,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = ketsim::deutsch_jozsa(&oracle.0).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("verdict", r.verdict.to_string())?;
        out.set_item("p_zero", r.p_zero)?;
        out.set_item("oracle_applications", r.oracle_applications)?;
        out.set_item("gate_layers", r.gate_layers)?;
        out.set_item("normalization_factors", r.normalization_factors.to_vec())?;
        out.set_item("distribution", r.distribution.probs)?;
        out.set_item("promise_holds", r.promise_holds)?;
        Ok(out)
    }

    /// Returns `(verdict, queries)`; the oracle's counter advances.
    #[pyfunction]
    fn classify_classical_deterministic(
        mut oracle: PyRefMut<'_, PyBooleanOracle>,
    ) -> (String, u64) {
        let r = ketsim::classify_classical_deterministic(&mut oracle.0);
        (r.verdict.to_string(), r.queries)
    }

    /// Returns `(verdict, queries, error_bound)`; the oracle's counter advances.
    #[pyfunction]
    #[pyo3(signature = (oracle, k=10, seed=0))]
    fn classify_classical_probabilistic(
        mut oracle: PyRefMut<'_, PyBooleanOracle>,
        k: u32,
        seed: u64,
    ) -> PyResult<(String, u64, f64)> {
        let r = ketsim::classify_classical_probabilistic(&mut oracle.0, k, seed).map_err(err)?;
        Ok((r.verdict.to_string(), r.queries, r.error_bound))
    }
}
