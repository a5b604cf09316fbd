#![allow(dead_code)]

use ketsim::{Amplitude, BalancedSpec, BooleanOracle, Operator, QuantumState};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Amplitude {
    Amplitude::new(re, im)
}

pub fn random_amplitude(rng: &mut ChaCha8Rng) -> Amplitude {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Dense random unit state; with `sparse`, roughly half the weights are zero.
pub fn random_state(rng: &mut ChaCha8Rng, n: usize, sparse: bool) -> QuantumState {
    loop {
        let amps: Vec<Amplitude> = (0..1usize << n)
            .map(|_| {
                if sparse && rng.gen_bool(0.5) {
                    c(0.0, 0.0)
                } else {
                    random_amplitude(rng)
                }
            })
            .collect();
        if let Ok(s) = QuantumState::normalize(amps) {
            return s;
        }
    }
}

pub fn random_operator(rng: &mut ChaCha8Rng, n: usize) -> Operator {
    let dim = 1usize << n;
    let count = rng.gen_range(0..=dim * dim / 2 + 1);
    let entries: Vec<_> = (0..count)
        .map(|_| {
            (
                rng.gen_range(0..dim),
                rng.gen_range(0..dim),
                random_amplitude(rng),
            )
        })
        .collect();
    Operator::from_entries(n, entries).unwrap()
}

pub fn random_oracle(rng: &mut ChaCha8Rng, max_n: usize) -> BooleanOracle {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..4) {
        0 => BooleanOracle::constant(n, rng.gen()).unwrap(),
        1 => BooleanOracle::balanced(n, BalancedSpec::Parity).unwrap(),
        2 => BooleanOracle::balanced(n, BalancedSpec::SingleBit(rng.gen_range(0..n))).unwrap(),
        _ => BooleanOracle::balanced(n, BalancedSpec::Random(rng.gen())).unwrap(),
    }
}

/// Tensor of `n` random single-qubit states, and the factors themselves.
pub fn random_product(rng: &mut ChaCha8Rng, n: usize) -> (QuantumState, Vec<QuantumState>) {
    let factors: Vec<QuantumState> = (0..n).map(|_| random_state(rng, 1, false)).collect();
    let state = factors[1..]
        .iter()
        .fold(factors[0].clone(), |acc, f| acc.tensor(f).unwrap());
    (state, factors)
}

/// All `C(2^n, 2^(n-1))` balanced truth tables plus the two constants.
pub fn all_promise_tables(n: usize) -> Vec<Vec<bool>> {
    let size = 1usize << n;
    let mut out = vec![vec![false; size], vec![true; size]];
    for mask in 0u64..(1u64 << size) {
        if mask.count_ones() as usize == size / 2 {
            out.push((0..size).map(|x| (mask >> x) & 1 == 1).collect());
        }
    }
    out
}
