use std::collections::BTreeMap;

use serde::Serialize;

use crate::{Failure, Format};

/// Rounds to 10 significant digits so text and JSON print the same numbers.
pub fn sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.9e}").parse().unwrap_or(x)
}

pub fn sig_map(m: &BTreeMap<String, f64>) -> BTreeMap<String, f64> {
    m.iter().map(|(k, v)| (k.clone(), sig(*v))).collect()
}

pub fn emit_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    println!("{text}");
    Ok(())
}

pub fn print_distribution(title: &str, probs: &BTreeMap<String, f64>) {
    println!("{title}:");
    for (k, p) in probs {
        println!("  {k}: {}", sig(*p));
    }
}

pub fn print_counts(shots: u64, seed: u64, counts: &BTreeMap<String, u64>) {
    println!("histogram ({shots} shots, seed {seed}):");
    for (k, c) in counts {
        println!("  {k}: {c}");
    }
}

pub fn is_json(format: Format) -> bool {
    format == Format::Json
}
