use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::oracle::BooleanOracle;
use super::Verdict;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeterministicOutcome {
    pub verdict: Verdict,
    pub queries: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilisticOutcome {
    pub verdict: Verdict,
    pub queries: u64,
    /// `2^-k` for a `constant` verdict; 0 for `balanced`, which is never wrong.
    pub error_bound: f64,
}

/// Probes `0, 1, 2, ...` until two answers differ or `2^(n-1) + 1` agree.
pub fn classify_classical_deterministic(f: &mut BooleanOracle) -> DeterministicOutcome {
    let needed = (1u64 << (f.n() - 1)) + 1;
    let first = f.query(0);
    let mut queries = 1;
    while queries < needed {
        let v = f.query(queries as usize);
        queries += 1;
        if v != first {
            return DeterministicOutcome {
                verdict: Verdict::Balanced,
                queries,
            };
        }
    }
    DeterministicOutcome {
        verdict: Verdict::Constant,
        queries,
    }
}

/// Queries up to `k` distinct inputs drawn uniformly at random (without
/// repetition, capped at `2^n`) and stops at the first disagreement.
pub fn classify_classical_probabilistic(
    f: &mut BooleanOracle,
    k: u32,
    seed: u64,
) -> Result<ProbabilisticOutcome> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "sample count k must be at least 1".into(),
        ));
    }
    let size = 1usize << f.n();
    let draws = (k as usize).min(size);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(draws);
    let mut first = None;
    let mut queries = 0;
    while seen.len() < draws {
        let x = rng.gen_range(0..size);
        if !seen.insert(x) {
            continue;
        }
        let v = f.query(x);
        queries += 1;
        match first {
            None => first = Some(v),
            Some(f0) if f0 != v => {
                return Ok(ProbabilisticOutcome {
                    verdict: Verdict::Balanced,
                    queries,
                    error_bound: 0.0,
                })
            }
            Some(_) => {}
        }
    }
    Ok(ProbabilisticOutcome {
        verdict: Verdict::Constant,
        queries,
        error_bound: 0.5f64.powi(k as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dj::oracle::BalancedSpec;

    #[test]
    fn deterministic_traces() {
        let mut f = BooleanOracle::constant(4, true).unwrap();
        assert_eq!(
            classify_classical_deterministic(&mut f),
            DeterministicOutcome {
                verdict: Verdict::Constant,
                queries: 9
            }
        );
        assert_eq!(f.queries(), 9);

        // inputs 0..7 have leading bit 0, input 8 is the first 1
        let mut f = BooleanOracle::balanced(4, BalancedSpec::SingleBit(0)).unwrap();
        assert_eq!(
            classify_classical_deterministic(&mut f),
            DeterministicOutcome {
                verdict: Verdict::Balanced,
                queries: 9
            }
        );

        let mut f = BooleanOracle::balanced(4, BalancedSpec::Parity).unwrap();
        assert_eq!(
            classify_classical_deterministic(&mut f),
            DeterministicOutcome {
                verdict: Verdict::Balanced,
                queries: 2
            }
        );

        let mut f = BooleanOracle::constant(1, false).unwrap();
        assert_eq!(classify_classical_deterministic(&mut f).queries, 2);
    }

    #[test]
    fn probabilistic_cases() {
        for k in [1, 3, 10] {
            let mut f = BooleanOracle::constant(5, false).unwrap();
            let r = classify_classical_probabilistic(&mut f, k, 11).unwrap();
            assert_eq!(r.verdict, Verdict::Constant);
            assert_eq!(r.error_bound, 2f64.powi(-(k as i32)));
            assert_eq!(r.queries, k as u64);
            assert_eq!(f.queries(), k as u64);
        }

        let mut f = BooleanOracle::balanced(4, BalancedSpec::Parity).unwrap();
        let r = classify_classical_probabilistic(&mut f, 1, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Constant);
        assert_eq!(r.error_bound, 0.5);

        assert!(classify_classical_probabilistic(&mut f, 0, 5).is_err());

        // more samples than inputs: every input is read once, so the verdict is exact
        let mut f = BooleanOracle::balanced(2, BalancedSpec::Parity).unwrap();
        let r = classify_classical_probabilistic(&mut f, 50, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Balanced);
        assert!(r.queries <= 4);
    }

    #[test]
    fn probabilistic_rarely_fails_with_many_samples() {
        let mut misses = 0;
        for seed in 0..1000 {
            let mut f = BooleanOracle::balanced(4, BalancedSpec::Parity).unwrap();
            if classify_classical_probabilistic(&mut f, 64, seed)
                .unwrap()
                .verdict
                == Verdict::Constant
            {
                misses += 1;
            }
        }
        assert!(misses <= 1);
    }
}
