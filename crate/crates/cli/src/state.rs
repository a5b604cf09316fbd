use std::collections::BTreeMap;

use ketsim::parser::fixture_lines;
use ketsim::{
    format_state, is_product_state, parse_state, parse_state_normalized, prefix_distribution,
    sample, LabelMode, MeasurementRecord, QuantumState, DEFAULT_PRODUCT_TOLERANCE,
};
use serde::Serialize;

use crate::gates::parse_gate_list;
use crate::report::{emit_json, is_json, print_counts, print_distribution, sig, sig_map};
use crate::{Failure, StateArgs};

#[derive(Serialize)]
struct StateReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    input: String,
    qubits: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    applied: Vec<AppliedGate>,
    state: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    distribution: Option<BTreeMap<String, f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    histogram: Option<MeasurementRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    separable: Option<Separability>,
}

#[derive(Serialize)]
struct AppliedGate {
    gate: String,
    normalization_factor: f64,
}

#[derive(Serialize)]
struct Separability {
    is_product: bool,
    residual: f64,
}

pub fn run(args: &StateArgs) -> Result<(), Failure> {
    match (&args.expr, &args.file) {
        (Some(expr), _) => {
            let report = evaluate(args, expr, None)?;
            show(args, &report)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            for (line, expr) in fixture_lines(&text) {
                let report = evaluate(args, expr, Some(line)).map_err(|f| match f {
                    Failure::Usage(msg) => {
                        Failure::Usage(format!("{}:{line}: {msg}", path.display()))
                    }
                    other => other,
                })?;
                show(args, &report)?;
            }
            Ok(())
        }
        (None, None) => Err(Failure::Usage("give an expression or --file".into())),
    }
}

fn evaluate(args: &StateArgs, expr: &str, line: Option<usize>) -> Result<StateReport, Failure> {
    let mut state = if args.normalize {
        parse_state_normalized(expr, args.qubits)?
    } else {
        parse_state(expr, args.qubits)?
    };
    let n = state.n();

    let mut applied = Vec::new();
    if let Some(list) = &args.apply {
        for step in parse_gate_list(list, n)? {
            let out = step.op.apply(&state)?;
            applied.push(AppliedGate {
                gate: step.label,
                normalization_factor: sig(out.normalization_factor),
            });
            state = out.output;
        }
    }

    let measured = args.measure || args.prefix.is_some() || args.shots > 0;
    let dist = if measured {
        Some(prefix_distribution(&state, args.prefix.unwrap_or(n))?)
    } else {
        None
    };
    let histogram = match &dist {
        Some(d) if args.shots > 0 => Some(sample(d, args.shots, args.seed)?),
        _ => None,
    };
    let separable = args.separable.then(|| {
        let r = is_product_state(&state, DEFAULT_PRODUCT_TOLERANCE);
        Separability {
            is_product: r.is_product,
            residual: sig(r.residual),
        }
    });

    Ok(StateReport {
        line,
        input: expr.to_string(),
        qubits: n,
        applied,
        state: render(&state, args.precision),
        distribution: dist.map(|d| sig_map(&d.probs)),
        histogram,
        separable,
    })
}

fn render(state: &QuantumState, precision: usize) -> String {
    format_state(state, LabelMode::Binary, precision)
}

fn show(args: &StateArgs, r: &StateReport) -> Result<(), Failure> {
    if is_json(args.format) {
        return emit_json(r);
    }
    if let Some(line) = r.line {
        println!("# line {line}: {}", r.input);
    }
    for g in &r.applied {
        println!(
            "applied {} (normalization factor {})",
            g.gate, g.normalization_factor
        );
    }
    println!("state: {}", r.state);
    if let Some(d) = &r.distribution {
        print_distribution("distribution", d);
    }
    if let Some(h) = &r.histogram {
        print_counts(h.shots, h.seed, &h.counts);
    }
    if let Some(s) = &r.separable {
        println!("is_product: {}", s.is_product);
        println!("residual: {}", s.residual);
    }
    Ok(())
}
