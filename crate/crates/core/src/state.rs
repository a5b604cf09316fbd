use std::fmt;

use num_complex::Complex64;

use crate::basis::BasisState;
use crate::error::{Error, Result};

/// A complex probability weight.
pub type Amplitude = Complex64;

/// Allowed deviation of `sum |b_k|^2` from 1 for a constructed state.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Norms below this are treated as the zero vector.
pub const ZERO_NORM: f64 = 1e-12;

/// Largest register a dense [`QuantumState`] may hold (2^24 amplitudes).
pub const MAX_STATE_QUBITS: usize = 24;

/// A unit-norm superposition `sum_k b_k |k>` stored densely by basis index.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    n: usize,
    amps: Vec<Amplitude>,
}

impl QuantumState {
    /// The basis vector `|bits>`.
    pub fn basis(bits: &str) -> Result<Self> {
        Self::from_basis(BasisState::from_bits(bits)?)
    }

    pub fn from_basis(b: BasisState) -> Result<Self> {
        check_qubits(b.n())?;
        let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << b.n()];
        amps[b.index() as usize] = Amplitude::new(1.0, 0.0);
        Ok(Self { n: b.n(), amps })
    }

    /// `|0...0>` on `n` qubits.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::from_basis(BasisState::new(0, n)?)
    }

    /// Wraps an amplitude vector, failing unless it already has unit norm.
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Result<Self> {
        Self::from_amplitudes_within(amps, NORM_TOLERANCE)
    }

    /// Accepts `amps` if its squared norm is within `tol` of 1, then rescales
    /// it exactly onto the unit sphere.
    pub fn from_amplitudes_within(amps: Vec<Amplitude>, tol: f64) -> Result<Self> {
        let n = validate_layout(&amps)?;
        let norm_sqr = norm_sqr(&amps);
        if norm_sqr < ZERO_NORM * ZERO_NORM {
            return Err(Error::ZeroState);
        }
        if (norm_sqr - 1.0).abs() > tol {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let mut state = Self { n, amps };
        if norm_sqr != 1.0 {
            state.scale(1.0 / norm_sqr.sqrt());
        }
        Ok(state)
    }

    /// Divides `amps` by its Euclidean norm.
    pub fn normalize(amps: Vec<Amplitude>) -> Result<Self> {
        let n = validate_layout(&amps)?;
        let norm = norm_sqr(&amps).sqrt();
        if norm < ZERO_NORM {
            return Err(Error::ZeroState);
        }
        let mut state = Self { n, amps };
        state.scale(1.0 / norm);
        Ok(state)
    }

    /// Weighted sum of basis states. Duplicate kets are summed before the
    /// norm check.
    pub fn superpose(terms: &[(Amplitude, BasisState)]) -> Result<Self> {
        Self::from_amplitudes(accumulate(terms)?)
    }

    /// Like [`QuantumState::superpose`], but rescales instead of rejecting
    /// a non-unit norm.
    pub fn superpose_normalized(terms: &[(Amplitude, BasisState)]) -> Result<Self> {
        Self::normalize(accumulate(terms)?)
    }

    /// Convenience over [`QuantumState::superpose`] with bit-string labels.
    pub fn superpose_bits(terms: &[(Amplitude, &str)]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|&(w, bits)| Ok((w, BasisState::from_bits(bits)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::superpose(&terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn amplitude(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amps)
    }

    /// `<self|ket> = sum_k conj(self_k) ket_k`.
    pub fn dot(&self, ket: &QuantumState) -> Result<Amplitude> {
        same_width(self.n, ket.n)?;
        Ok(self
            .amps
            .iter()
            .zip(&ket.amps)
            .map(|(b, k)| b.conj() * k)
            .sum())
    }

    /// `|self> (x) |other>`: amplitude `i * 2^m + j` is `self_i * other_j`.
    pub fn tensor(&self, other: &QuantumState) -> Result<QuantumState> {
        check_qubits(self.n + other.n)?;
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Ok(QuantumState {
            n: self.n + other.n,
            amps,
        })
    }

    /// Largest entrywise modulus difference; `None` on a width mismatch.
    pub fn max_abs_diff(&self, other: &QuantumState) -> Option<f64> {
        (self.n == other.n).then(|| {
            self.amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
        })
    }

    pub fn approx_eq(&self, other: &QuantumState, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    /// Multiplies every amplitude by `phase`. Panics if `|phase| != 1`.
    pub fn with_global_phase(&self, phase: Amplitude) -> QuantumState {
        assert!(
            (phase.norm() - 1.0).abs() <= NORM_TOLERANCE,
            "global phase must have unit modulus"
        );
        QuantumState {
            n: self.n,
            amps: self.amps.iter().map(|a| a * phase).collect(),
        }
    }

    fn scale(&mut self, s: f64) {
        for a in &mut self.amps {
            *a *= s;
        }
    }
}

impl fmt::Display for QuantumState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = crate::parser::format_state(self, crate::parser::LabelMode::Binary, 10);
        f.write_str(&text)
    }
}

/// Free-function form of [`QuantumState::dot`].
pub fn dot(bra: &QuantumState, ket: &QuantumState) -> Result<Amplitude> {
    bra.dot(ket)
}

/// Free-function form of [`QuantumState::tensor`].
pub fn tensor_states(a: &QuantumState, b: &QuantumState) -> Result<QuantumState> {
    a.tensor(b)
}

pub(crate) fn check_qubits(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("qubit count must be at least 1".into()));
    }
    if n > MAX_STATE_QUBITS {
        return Err(Error::TooLarge {
            what: "dense state",
            qubits: n,
            limit: MAX_STATE_QUBITS,
        });
    }
    Ok(())
}

pub(crate) fn same_width(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn norm_sqr(amps: &[Amplitude]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

fn validate_layout(amps: &[Amplitude]) -> Result<usize> {
    let len = amps.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidInput(format!(
            "amplitude count {len} is not a power of two >= 2"
        )));
    }
    let n = len.trailing_zeros() as usize;
    check_qubits(n)?;
    if let Some(index) = amps.iter().position(|a| !a.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    Ok(n)
}

fn accumulate(terms: &[(Amplitude, BasisState)]) -> Result<Vec<Amplitude>> {
    let first = terms
        .first()
        .ok_or_else(|| Error::InvalidInput("superposition needs at least one term".into()))?;
    let n = first.1.n();
    check_qubits(n)?;
    let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << n];
    for (w, b) in terms {
        same_width(n, b.n())?;
        amps[b.index() as usize] += w;
    }
    if amps.iter().all(|a| a.norm() == 0.0) {
        return Err(Error::ZeroState);
    }
    Ok(amps)
}
