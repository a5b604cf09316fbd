//! Deutsch-Jozsa: decide whether a promised-constant-or-balanced boolean
//! function is constant with one oracle application, next to the classical
//! deterministic and randomized baselines.

mod classical;
mod oracle;
mod quantum;

pub use classical::{
    classify_classical_deterministic, classify_classical_probabilistic, DeterministicOutcome,
    ProbabilisticOutcome,
};
pub use oracle::{BalancedSpec, BooleanOracle, OracleKind, OracleSpec, MAX_ORACLE_BITS};
pub use quantum::{
    build_oracle_operator, deutsch_jozsa, deutsch_jozsa_trace, intermediate_state_checks, DJResult,
    DJTrace, IntermediateChecks, MAX_CHECKED_BITS,
};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Constant,
    Balanced,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Constant => "constant",
            Verdict::Balanced => "balanced",
        })
    }
}
