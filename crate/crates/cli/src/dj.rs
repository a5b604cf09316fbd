use std::collections::BTreeMap;

use ketsim::dj::MAX_ORACLE_BITS;
use ketsim::{
    classify_classical_deterministic, classify_classical_probabilistic, deutsch_jozsa, sample,
    BooleanOracle, MeasurementRecord, OracleKind, OracleSpec, Verdict,
};
use serde::Serialize;

use crate::report::{emit_json, is_json, print_counts, print_distribution, sig, sig_map};
use crate::{DjArgs, Failure};

#[derive(Serialize)]
struct DjReport {
    n: usize,
    oracle: String,
    verdict: Verdict,
    p_zero: f64,
    oracle_applications: u32,
    gate_layers: u32,
    normalization_factors: [f64; 3],
    classical_deterministic_queries: u64,
    classical_probabilistic: ProbabilisticReport,
    distribution: BTreeMap<String, f64>,
    promise_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    histogram: Option<MeasurementRecord>,
}

#[derive(Serialize)]
struct ProbabilisticReport {
    k: u32,
    seed: u64,
    verdict: Verdict,
    queries: u64,
    error_bound: f64,
}

pub fn run(args: &DjArgs) -> Result<(), Failure> {
    if args.n == 0 || args.n > MAX_ORACLE_BITS {
        return Err(Failure::Usage(format!(
            "--n must be between 1 and {MAX_ORACLE_BITS}, got {}",
            args.n
        )));
    }
    let spec: OracleSpec = args.oracle.parse()?;
    let oracle = BooleanOracle::from_spec(args.n, &spec)?;
    if oracle.kind() == OracleKind::Unconstrained {
        return Err(Failure::PromiseViolation(format!(
            "oracle '{spec}' is neither constant nor balanced"
        )));
    }

    let quantum = deutsch_jozsa(&oracle)?;
    let deterministic = classify_classical_deterministic(&mut oracle.clone());
    let probabilistic = classify_classical_probabilistic(&mut oracle.clone(), args.k, args.seed)?;
    let histogram = if args.shots > 0 {
        Some(sample(&quantum.distribution, args.shots, args.seed)?)
    } else {
        None
    };

    let report = DjReport {
        n: args.n,
        oracle: spec.to_string(),
        verdict: quantum.verdict,
        p_zero: sig(quantum.p_zero),
        oracle_applications: quantum.oracle_applications,
        gate_layers: quantum.gate_layers,
        normalization_factors: quantum.normalization_factors.map(sig),
        classical_deterministic_queries: deterministic.queries,
        classical_probabilistic: ProbabilisticReport {
            k: args.k,
            seed: args.seed,
            verdict: probabilistic.verdict,
            queries: probabilistic.queries,
            error_bound: sig(probabilistic.error_bound),
        },
        distribution: sig_map(&quantum.distribution.probs),
        promise_holds: quantum.promise_holds,
        histogram,
    };

    if is_json(args.format) {
        return emit_json(&report);
    }
    let r = &report;
    println!("oracle: {} on {} bits", r.oracle, r.n);
    println!("verdict: {}", r.verdict);
    println!("p_zero: {}", r.p_zero);
    println!("oracle_applications: {}", r.oracle_applications);
    println!("gate_layers: {}", r.gate_layers);
    let [a1, a2, a3] = r.normalization_factors;
    println!("normalization_factors: {a1} {a2} {a3}");
    println!(
        "classical_deterministic_queries: {}",
        r.classical_deterministic_queries
    );
    let p = &r.classical_probabilistic;
    println!(
        "classical_probabilistic: verdict {} after {} of {} queries (seed {}, error bound {})",
        p.verdict, p.queries, p.k, p.seed, p.error_bound
    );
    print_distribution("distribution", &r.distribution);
    if let Some(h) = &r.histogram {
        print_counts(h.shots, h.seed, &h.counts);
    }
    Ok(())
}
