//! Statevector simulation written in terms of basis states, ket-bra
//! operators and tensor products, plus a Deutsch-Jozsa driver with classical
//! baselines.
//!
//! Bit-strings are most-significant bit first throughout: `|100001>` is
//! basis index 33, and in `|x> (x) |y>` the bits of `x` come first.
//!
//! ```
//! use ketsim::{parse_state, probabilities, Operator};
//!
//! let zero = parse_state("|0>", None).unwrap();
//! let plus = Operator::hadamard().apply(&zero).unwrap().output;
//! let dist = probabilities(&plus);
//! assert!((dist.prob("1") - 0.5).abs() < 1e-12);
//! ```

pub mod basis;
pub mod dense;
pub mod dj;
pub mod entanglement;
pub mod error;
pub mod measurement;
pub mod operator;
pub mod parser;
pub mod state;

pub use basis::BasisState;
pub use dense::DenseMatrix;
pub use dj::{
    build_oracle_operator, classify_classical_deterministic, classify_classical_probabilistic,
    deutsch_jozsa, deutsch_jozsa_trace, intermediate_state_checks, BalancedSpec, BooleanOracle,
    DJResult, DJTrace, DeterministicOutcome, IntermediateChecks, OracleKind, OracleSpec,
    ProbabilisticOutcome, Verdict,
};
pub use entanglement::{is_product_state, FactorizationResult, DEFAULT_PRODUCT_TOLERANCE};
pub use error::{Error, Result};
pub use measurement::{
    prefix_distribution, probabilities, sample, MeasurementRecord, OutcomeDistribution,
};
pub use operator::{bitdot, ApplyReport, KetBraTerm, Operator, ProductOperator};
pub use parser::{format_state, parse_state, parse_state_normalized, LabelMode};
pub use state::{dot, tensor_states, Amplitude, QuantumState};
