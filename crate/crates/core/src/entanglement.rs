//! Separability test: is an `n`-qubit state a tensor product of `n`
//! single-qubit states?
//!
//! Qubits are peeled off from the left. With the amplitudes viewed as a
//! `2 x 2^(m-1)` array `[r0; r1]`, the leading qubit factors out iff every
//! `2 x 2` minor `r0[j] r1[k] - r0[k] r1[j]` vanishes, i.e. the array has
//! rank one. It suffices to check the minors against the column of largest
//! weight: if that column is nonzero and every other column is parallel to
//! it, the array is rank one. For two qubits this is the familiar
//! `a1 b2 = a2 b1` condition.

use serde::Serialize;

use crate::state::{Amplitude, QuantumState};

pub const DEFAULT_PRODUCT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorizationResult {
    pub is_product: bool,
    /// Single-qubit factors, leftmost first. Each factor's first nonzero
    /// amplitude is real and nonnegative except the last, which carries the
    /// leftover global phase. `None` unless `is_product`.
    #[serde(skip)]
    pub factors: Option<Vec<QuantumState>>,
    /// Largest entrywise deviation between the tensor of the extracted
    /// factors and the input.
    pub residual: f64,
    /// Largest scaled minor seen over all cuts.
    #[serde(skip)]
    pub max_minor: f64,
}

pub fn is_product_state(state: &QuantumState, tol: f64) -> FactorizationResult {
    let mut factors = Vec::with_capacity(state.n());
    let mut v: Vec<Amplitude> = state.amps().to_vec();
    let mut max_minor = 0.0f64;

    while v.len() > 2 {
        let half = v.len() / 2;
        let (r0, r1) = v.split_at(half);
        let scale = v.iter().map(|a| a.norm()).fold(0.0, f64::max);

        let pivot = (0..half)
            .max_by(|&x, &y| {
                let wx = r0[x].norm_sqr() + r1[x].norm_sqr();
                let wy = r0[y].norm_sqr() + r1[y].norm_sqr();
                wx.total_cmp(&wy)
            })
            .expect("half is nonzero");
        let (a, b) = (r0[pivot], r1[pivot]);
        let minor = (0..half)
            .map(|k| (a * r1[k] - b * r0[k]).norm())
            .fold(0.0, f64::max);
        max_minor = max_minor.max(minor / (scale * scale));

        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        let (mut q0, mut q1) = (a / norm, b / norm);
        let lead = if q0.norm() > 1e-12 { q0 } else { q1 };
        let phase = lead / lead.norm();
        q0 /= phase;
        q1 /= phase;

        let mut rest: Vec<Amplitude> = (0..half)
            .map(|k| q0.conj() * r0[k] + q1.conj() * r1[k])
            .collect();
        let rest_norm = rest.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in &mut rest {
            *x /= rest_norm;
        }
        factors.push(vec![q0, q1]);
        v = rest;
    }
    factors.push(v);

    let factors: Vec<QuantumState> = factors
        .into_iter()
        .map(|f| QuantumState::normalize(f).expect("factors are nonzero single-qubit vectors"))
        .collect();
    let product = factors[1..]
        .iter()
        .try_fold(factors[0].clone(), |acc, f| acc.tensor(f))
        .expect("product width equals the input width");
    let residual = product
        .max_abs_diff(state)
        .expect("product width equals the input width");

    let is_product = max_minor <= tol && residual <= tol;
    FactorizationResult {
        is_product,
        factors: is_product.then_some(factors),
        residual,
        max_minor,
    }
}
