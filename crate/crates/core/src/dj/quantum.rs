use serde::Serialize;

use super::oracle::{BooleanOracle, OracleKind};
use super::Verdict;
use crate::error::{Error, Result};
use crate::measurement::{prefix_distribution, OutcomeDistribution};
use crate::operator::{bitdot, Operator, ProductOperator};
use crate::state::{Amplitude, QuantumState};

/// Widest oracle [`intermediate_state_checks`] will evaluate; its closed
/// form for the last step is a 4^n double sum.
pub const MAX_CHECKED_BITS: usize = 8;

/// Hadamard layers plus the oracle layer.
const GATE_LAYERS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DJResult {
    pub verdict: Verdict,
    /// Probability that the first `n` qubits read all zeros.
    pub p_zero: f64,
    pub oracle_applications: u32,
    pub gate_layers: u32,
    /// Normalization factor reported by each of the three layers.
    pub normalization_factors: [f64; 3],
    pub distribution: OutcomeDistribution,
    /// False when the oracle is neither constant nor balanced; the verdict
    /// is then meaningless and `p_zero` is reported as-is.
    pub promise_holds: bool,
}

/// Statevector after each of the three gate layers.
#[derive(Debug, Clone, PartialEq)]
pub struct DJTrace {
    pub after_hadamard: QuantumState,
    pub after_oracle: QuantumState,
    pub after_final_hadamard: QuantumState,
    pub normalization_factors: [f64; 3],
}

/// Deviations of the simulated statevector from the closed forms
/// after each layer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntermediateChecks {
    /// Against `2^-(n+1)/2 * (+1 for y = 0, -1 for y = 1)`.
    pub step1_deviation: f64,
    /// Against the same pattern times `(-1)^f(x)`.
    pub step2_deviation: f64,
    /// Whether every step-two amplitude has the sign `(-1)^f(x)` (negated
    /// for `y = 1`).
    pub step2_signs_match: bool,
    /// Against `c_j / sqrt(2) * (+1 for y = 0, -1 for y = 1)`.
    pub step3_deviation: f64,
    /// `c_j = 2^-n * sum_x (-1)^(f(x) + x.j)`, the amplitude of `|j>` on
    /// the first `n` qubits once the last qubit's `(|0> - |1>)/sqrt(2)` is
    /// factored out.
    pub prefix_amplitudes: Vec<f64>,
}

impl IntermediateChecks {
    pub fn max_deviation(&self) -> f64 {
        self.step1_deviation
            .max(self.step2_deviation)
            .max(self.step3_deviation)
    }
}

/// `U_f |x>|y> = |x>|y xor f(x)>` as `sum_{x,y} |x, y xor f(x)><x, y|`.
/// Reads the truth table without touching the query counter.
pub fn build_oracle_operator(f: &BooleanOracle) -> Result<Operator> {
    let one = Amplitude::new(1.0, 0.0);
    let entries = f.table().iter().enumerate().flat_map(|(x, &fx)| {
        (0..2usize).map(move |y| ((x << 1) | (y ^ usize::from(fx)), (x << 1) | y, one))
    });
    Operator::from_entries(f.n() + 1, entries)
}

/// Runs the three layers on `|0...0>|1>`: `H^(n+1)`, then `U_f`, then
/// `H^n (x) I`.
pub fn deutsch_jozsa_trace(f: &BooleanOracle) -> Result<DJTrace> {
    let n = f.n();
    let start = QuantumState::zeros(n)?.tensor(&QuantumState::basis("1")?)?;

    let first = ProductOperator::power(&Operator::hadamard(), n + 1)?.apply(&start)?;
    let oracle = build_oracle_operator(f)?.apply(&first.output)?;
    let mut last_layer = vec![Operator::hadamard(); n];
    last_layer.push(Operator::identity(1)?);
    let last = ProductOperator::new(last_layer)?.apply(&oracle.output)?;

    Ok(DJTrace {
        normalization_factors: [
            first.normalization_factor,
            oracle.normalization_factor,
            last.normalization_factor,
        ],
        after_hadamard: first.output,
        after_oracle: oracle.output,
        after_final_hadamard: last.output,
    })
}

/// The full algorithm: run the layers, then read the exact probability of
/// `0...0` on the first `n` qubits. `constant` iff that exceeds 1/2.
pub fn deutsch_jozsa(f: &BooleanOracle) -> Result<DJResult> {
    let n = f.n();
    let trace = deutsch_jozsa_trace(f)?;
    let distribution = prefix_distribution(&trace.after_final_hadamard, n)?;
    let p_zero = distribution.prob(&"0".repeat(n));
    Ok(DJResult {
        verdict: if p_zero > 0.5 {
            Verdict::Constant
        } else {
            Verdict::Balanced
        },
        p_zero,
        oracle_applications: 1,
        gate_layers: GATE_LAYERS,
        normalization_factors: trace.normalization_factors,
        distribution,
        promise_holds: f.kind() != OracleKind::Unconstrained,
    })
}

/// Compares each simulated layer against its closed form.
pub fn intermediate_state_checks(f: &BooleanOracle) -> Result<IntermediateChecks> {
    let n = f.n();
    if n > MAX_CHECKED_BITS {
        return Err(Error::OutOfRange {
            what: "checked oracle width",
            value: n,
            min: 1,
            max: MAX_CHECKED_BITS,
        });
    }
    let trace = deutsch_jozsa_trace(f)?;
    let size = 1usize << n;
    let scale = ((2 * size) as f64).sqrt().recip();
    let sign = |neg: bool| if neg { -1.0 } else { 1.0 };
    let deviation = |state: &QuantumState, expected: &dyn Fn(usize, usize) -> f64| {
        (0..size)
            .flat_map(|x| (0..2).map(move |y| (x, y)))
            .map(|(x, y)| {
                (state.amplitude((x << 1) | y) - Amplitude::new(expected(x, y), 0.0)).norm()
            })
            .fold(0.0, f64::max)
    };

    let step1_deviation = deviation(&trace.after_hadamard, &|_, y| scale * sign(y == 1));

    let table = f.table();
    let step2_deviation = deviation(&trace.after_oracle, &|x, y| {
        scale * sign(table[x]) * sign(y == 1)
    });
    let step2_signs_match = (0..size).all(|x| {
        let a0 = trace.after_oracle.amplitude(x << 1).re;
        let a1 = trace.after_oracle.amplitude((x << 1) | 1).re;
        (a0 > 0.0) != table[x] && (a1 < 0.0) != table[x]
    });

    let prefix_amplitudes: Vec<f64> = (0..size)
        .map(|j| {
            let total: f64 = (0..size)
                .map(|x| sign(table[x] ^ (bitdot(x, j) == 1)))
                .sum();
            total / size as f64
        })
        .collect();
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let step3_deviation = deviation(&trace.after_final_hadamard, &|j, y| {
        prefix_amplitudes[j] * r2 * sign(y == 1)
    });

    Ok(IntermediateChecks {
        step1_deviation,
        step2_deviation,
        step2_signs_match,
        step3_deviation,
        prefix_amplitudes,
    })
}
