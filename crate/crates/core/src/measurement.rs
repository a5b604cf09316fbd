//! Classical readout of a state: exact outcome distributions, marginals over
//! the leading qubits, and seeded shot sampling.
//!
//! Post-measurement states are not modelled; sampling consumes a
//! distribution, not a state.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::basis::bit_string;
use crate::error::{Error, Result};
use crate::state::QuantumState;

/// Identifier of the generator behind [`sample`]. Counts are reproducible
/// for a given `(distribution, shots, seed)` under this algorithm.
pub const SAMPLER_RNG: &str = "chacha8";

/// Exact probabilities of each observable bit-string. Zero-probability
/// outcomes are omitted. Keys are ordered lexicographically, which for
/// equal-length bit-strings is basis-index order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeDistribution {
    pub n_measured: usize,
    pub probs: BTreeMap<String, f64>,
}

impl OutcomeDistribution {
    /// Validates keys and total probability (within 1e-12).
    pub fn new(n_measured: usize, probs: BTreeMap<String, f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidInput("distribution has no outcomes".into()));
        }
        for (k, p) in &probs {
            if k.len() != n_measured || !k.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(Error::InvalidInput(format!(
                    "outcome '{k}' is not a {n_measured}-bit string"
                )));
            }
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidInput(format!(
                    "probability {p} of '{k}' is outside [0, 1]"
                )));
            }
        }
        let total: f64 = probs.values().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!("probabilities sum to {total}")));
        }
        Ok(Self { n_measured, probs })
    }

    /// Probability of `outcome`, 0 when absent.
    pub fn prob(&self, outcome: &str) -> f64 {
        self.probs.get(outcome).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.probs.values().sum()
    }
}

/// Shot histogram. Serializes as `{"shots", "seed", "counts"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeasurementRecord {
    pub shots: u64,
    pub seed: u64,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip)]
    pub rng: &'static str,
}

/// `P(k) = |b_k|^2` for every nonzero amplitude.
pub fn probabilities(state: &QuantumState) -> OutcomeDistribution {
    prefix_distribution(state, state.n()).expect("full width is always in range")
}

/// Marginal distribution of the first `n_first` qubits.
pub fn prefix_distribution(state: &QuantumState, n_first: usize) -> Result<OutcomeDistribution> {
    if n_first == 0 || n_first > state.n() {
        return Err(Error::OutOfRange {
            what: "measured prefix width",
            value: n_first,
            min: 1,
            max: state.n(),
        });
    }
    let suffix = state.n() - n_first;
    let mut sums = vec![0.0f64; 1 << n_first];
    for (k, a) in state.amps().iter().enumerate() {
        sums[k >> suffix] += a.norm_sqr();
    }
    let probs = sums
        .into_iter()
        .enumerate()
        .filter(|&(_, p)| p > 0.0)
        .map(|(x, p)| (bit_string(x as u64, n_first), p))
        .collect();
    Ok(OutcomeDistribution {
        n_measured: n_first,
        probs,
    })
}

/// Draws `shots` outcomes by inverse CDF over `dist` in key order.
pub fn sample(dist: &OutcomeDistribution, shots: u64, seed: u64) -> Result<MeasurementRecord> {
    if shots == 0 {
        return Err(Error::InvalidInput("shots must be at least 1".into()));
    }
    let mut cdf = Vec::with_capacity(dist.probs.len());
    let mut acc = 0.0;
    for (k, p) in &dist.probs {
        acc += p;
        cdf.push((acc, k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = vec![0u64; cdf.len()];
    for _ in 0..shots {
        let u: f64 = rng.gen::<f64>() * acc;
        let slot = cdf.partition_point(|&(c, _)| c <= u).min(cdf.len() - 1);
        hits[slot] += 1;
    }
    let counts = cdf
        .iter()
        .zip(hits)
        .filter(|&(_, h)| h > 0)
        .map(|((_, k), h)| ((*k).clone(), h))
        .collect();
    Ok(MeasurementRecord {
        shots,
        seed,
        counts,
        rng: SAMPLER_RNG,
    })
}
