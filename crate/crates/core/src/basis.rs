use std::fmt;

use crate::error::{Error, Result};

/// Largest register a [`BasisState`] can label. Indices are stored in a `u64`.
pub const MAX_BASIS_QUBITS: usize = 63;

/// A computational basis state `|x>` labelled by an `n`-bit string.
///
/// Bits are most-significant first, so `"100001"` has index 33.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    n: usize,
    index: u64,
}

impl BasisState {
    pub fn new(index: u64, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BASIS_QUBITS {
            return Err(Error::OutOfRange {
                what: "qubit count",
                value: n,
                min: 1,
                max: MAX_BASIS_QUBITS,
            });
        }
        if index >> n != 0 {
            return Err(Error::InvalidInput(format!(
                "index {index} does not fit in {n} bits"
            )));
        }
        Ok(Self { n, index })
    }

    pub fn from_bits(bits: &str) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidInput("empty bit-string".into()));
        }
        if bits.len() > MAX_BASIS_QUBITS {
            return Err(Error::OutOfRange {
                what: "qubit count",
                value: bits.len(),
                min: 1,
                max: MAX_BASIS_QUBITS,
            });
        }
        let mut index = 0u64;
        for (pos, c) in bits.chars().enumerate() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => {
                    return Err(Error::InvalidInput(format!(
                        "non-binary character '{c}' at position {pos} in '{bits}'"
                    )))
                }
            };
            index = (index << 1) | bit;
        }
        Ok(Self {
            n: bits.len(),
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn bits(&self) -> String {
        bit_string(self.index, self.n)
    }

    /// `|x> (x) |y> = |xy>`.
    pub fn concat(&self, other: &BasisState) -> Result<BasisState> {
        BasisState::new((self.index << other.n) | other.index, self.n + other.n)
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}>", self.bits())
    }
}

/// Zero-padded, most-significant-first binary rendering of `index`.
pub fn bit_string(index: u64, width: usize) -> String {
    format!("{index:0width$b}")
}
