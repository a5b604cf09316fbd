use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Widest oracle input accepted (a 4096-entry truth table).
pub const MAX_ORACLE_BITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleKind {
    Constant,
    Balanced,
    /// Neither constant nor balanced; breaks the promise.
    Unconstrained,
}

/// Recipe for a balanced function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BalancedSpec {
    /// `f(x)` = XOR of all bits of `x`.
    Parity,
    /// `f(x)` = bit `i` of `x`, counting from the most significant bit.
    SingleBit(usize),
    /// A seeded shuffle picks which half of the inputs map to 1.
    Random(u64),
}

/// Textual oracle description used on the command line:
/// `constant:0`, `constant:1`, `balanced:parity`, `balanced:bit:<i>`,
/// `balanced:random:<seed>`, or `table:<bits>` with one character per input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleSpec {
    Constant(bool),
    Balanced(BalancedSpec),
    Table(Vec<bool>),
}

impl FromStr for OracleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unrecognized oracle spec '{s}'"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        Ok(match parts.as_slice() {
            ["constant", "0"] => OracleSpec::Constant(false),
            ["constant", "1"] => OracleSpec::Constant(true),
            ["balanced", "parity"] => OracleSpec::Balanced(BalancedSpec::Parity),
            ["balanced", "bit", i] => {
                OracleSpec::Balanced(BalancedSpec::SingleBit(i.parse().map_err(|_| bad())?))
            }
            ["balanced", "random", seed] => {
                OracleSpec::Balanced(BalancedSpec::Random(seed.parse().map_err(|_| bad())?))
            }
            ["table", bits] if !bits.is_empty() => OracleSpec::Table(
                bits.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(bad()),
                    })
                    .collect::<Result<_>>()?,
            ),
            _ => return Err(bad()),
        })
    }
}

impl fmt::Display for OracleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleSpec::Constant(v) => write!(f, "constant:{}", u8::from(*v)),
            OracleSpec::Balanced(BalancedSpec::Parity) => f.write_str("balanced:parity"),
            OracleSpec::Balanced(BalancedSpec::SingleBit(i)) => write!(f, "balanced:bit:{i}"),
            OracleSpec::Balanced(BalancedSpec::Random(s)) => write!(f, "balanced:random:{s}"),
            OracleSpec::Table(t) => {
                f.write_str("table:")?;
                t.iter()
                    .try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
            }
        }
    }
}

/// Truth table of `f: {0,1}^n -> {0,1}` with a classical query counter.
///
/// [`BooleanOracle::query`] is the only counted read. The quantum oracle
/// build reads [`BooleanOracle::table`] directly; its cost is counted as
/// operator applications instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanOracle {
    n: usize,
    table: Vec<bool>,
    kind: OracleKind,
    queries: u64,
}

impl BooleanOracle {
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_bits(n)?;
        Ok(Self {
            n,
            table: vec![value; 1 << n],
            kind: OracleKind::Constant,
            queries: 0,
        })
    }

    pub fn balanced(n: usize, spec: BalancedSpec) -> Result<Self> {
        check_bits(n)?;
        let size = 1usize << n;
        let table = match spec {
            BalancedSpec::Parity => (0..size).map(|x| x.count_ones() % 2 == 1).collect(),
            BalancedSpec::SingleBit(i) => {
                if i >= n {
                    return Err(Error::InvalidInput(format!(
                        "bit index {i} is out of range for {n}-bit inputs"
                    )));
                }
                (0..size).map(|x| (x >> (n - 1 - i)) & 1 == 1).collect()
            }
            BalancedSpec::Random(seed) => {
                let mut order: Vec<usize> = (0..size).collect();
                order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                let mut table = vec![false; size];
                for &x in &order[..size / 2] {
                    table[x] = true;
                }
                table
            }
        };
        Ok(Self {
            n,
            table,
            kind: OracleKind::Balanced,
            queries: 0,
        })
    }

    /// Wraps an arbitrary truth table; the kind is inferred from its contents.
    pub fn from_table(table: Vec<bool>) -> Result<Self> {
        let size = table.len();
        if size < 2 || !size.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "truth table length {size} is not a power of two >= 2"
            )));
        }
        let n = size.trailing_zeros() as usize;
        check_bits(n)?;
        let ones = table.iter().filter(|&&b| b).count();
        let kind = if ones == 0 || ones == size {
            OracleKind::Constant
        } else if ones == size / 2 {
            OracleKind::Balanced
        } else {
            OracleKind::Unconstrained
        };
        Ok(Self {
            n,
            table,
            kind,
            queries: 0,
        })
    }

    pub fn from_spec(n: usize, spec: &OracleSpec) -> Result<Self> {
        match spec {
            OracleSpec::Constant(v) => Self::constant(n, *v),
            OracleSpec::Balanced(b) => Self::balanced(n, *b),
            OracleSpec::Table(t) => {
                if t.len() != 1usize.checked_shl(n as u32).unwrap_or(0) {
                    return Err(Error::InvalidInput(format!(
                        "table has {} entries but {n}-bit inputs need {}",
                        t.len(),
                        1u64 << n.min(63)
                    )));
                }
                Self::from_table(t.clone())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> OracleKind {
        self.kind
    }

    /// Uncounted view of the truth table.
    pub fn table(&self) -> &[bool] {
        &self.table
    }

    /// Counted classical evaluation of `f(x)`.
    pub fn query(&mut self, x: usize) -> bool {
        self.queries += 1;
        self.table[x]
    }

    pub fn queries(&self) -> u64 {
        self.queries
    }

    pub fn reset_queries(&mut self) {
        self.queries = 0;
    }
}

fn check_bits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORACLE_BITS {
        return Err(Error::OutOfRange {
            what: "oracle input width",
            value: n,
            min: 1,
            max: MAX_ORACLE_BITS,
        });
    }
    Ok(())
}
