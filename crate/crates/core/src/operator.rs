//! Gates as weighted sums of ket-bra terms `sum_ij a_ij |i><j|`.
//!
//! The sparse term map is the source of truth; [`Operator::to_dense`] is a
//! derived view for small registers. Application follows two steps: the raw
//! matrix-vector product over nonzero entries, then division by its norm
//! (the normalization factor, which is 1 for unitary gates).

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::basis::{BasisState, MAX_BASIS_QUBITS};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::state::{same_width, Amplitude, QuantumState, ZERO_NORM};

/// Summed weights with modulus below this are dropped.
pub const DROP_THRESHOLD: f64 = 1e-15;

/// Largest register [`Operator::to_dense`] will materialize (4^13 entries).
pub const MAX_DENSE_QUBITS: usize = 13;

/// Largest `n` for [`Operator::hadamard_n`], which stores all 4^n entries.
pub const MAX_HADAMARD_QUBITS: usize = 10;

const ONE: Amplitude = Amplitude::new(1.0, 0.0);

/// One weighted `|ket><bra|` term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KetBraTerm {
    pub weight: Amplitude,
    pub ket: BasisState,
    pub bra: BasisState,
}

/// Result of applying an operator to a state.
#[derive(Debug, Clone, PartialEq)]
pub struct ApplyReport {
    pub output: QuantumState,
    /// Norm of the raw product before rescaling.
    pub normalization_factor: f64,
}

/// A linear operator on `n` qubits stored as its nonzero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    n: usize,
    terms: BTreeMap<(usize, usize), Amplitude>,
}

impl Operator {
    /// The zero operator.
    pub fn zero(n: usize) -> Result<Self> {
        check_width(n)?;
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    /// Builds from `(row, column, weight)` triples. Duplicates are summed.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Amplitude)>,
    {
        check_width(n)?;
        let dim = 1usize << n;
        let mut terms = BTreeMap::new();
        for (i, j, w) in entries {
            if i >= dim || j >= dim {
                return Err(Error::InvalidInput(format!(
                    "entry ({i}, {j}) is outside a {n}-qubit operator"
                )));
            }
            if !w.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "entry ({i}, {j}) is not finite"
                )));
            }
            *terms.entry((i, j)).or_insert(Amplitude::new(0.0, 0.0)) += w;
        }
        terms.retain(|_, w| w.norm() >= DROP_THRESHOLD);
        Ok(Self { n, terms })
    }

    /// Builds `sum w |ket><bra|` from bit-string labels.
    pub fn from_terms(terms: &[(Amplitude, &str, &str)]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|&(weight, ket, bra)| {
                Ok(KetBraTerm {
                    weight,
                    ket: BasisState::from_bits(ket)?,
                    bra: BasisState::from_bits(bra)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_ket_bras(&parsed)
    }

    pub fn from_ket_bras(terms: &[KetBraTerm]) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::InvalidInput("operator needs at least one term".into()))?;
        let n = first.ket.n();
        for t in terms {
            same_width(n, t.ket.n())?;
            same_width(n, t.bra.n())?;
        }
        Self::from_entries(
            n,
            terms
                .iter()
                .map(|t| (t.ket.index() as usize, t.bra.index() as usize, t.weight)),
        )
    }

    /// `|ket><bra|`: entry `(i, j)` is `ket_i * conj(bra_j)`.
    pub fn outer(ket: &QuantumState, bra: &QuantumState) -> Result<Self> {
        same_width(ket.n(), bra.n())?;
        let entries = ket.amps().iter().enumerate().flat_map(|(i, a)| {
            bra.amps()
                .iter()
                .enumerate()
                .map(move |(j, b)| (i, j, a * b.conj()))
        });
        Self::from_entries(ket.n(), entries)
    }

    /// `I = sum_x |x><x|`.
    pub fn identity(n: usize) -> Result<Self> {
        check_width(n)?;
        if n > crate::state::MAX_STATE_QUBITS {
            return Err(Error::TooLarge {
                what: "identity operator",
                qubits: n,
                limit: crate::state::MAX_STATE_QUBITS,
            });
        }
        Self::from_entries(n, (0..1usize << n).map(|x| (x, x, ONE)))
    }

    /// `X = |0><1| + |1><0|`.
    pub fn pauli_x() -> Self {
        Self::from_entries(1, [(0, 1, ONE), (1, 0, ONE)]).expect("fixed gate")
    }

    /// `H = (|0><0| + |1><0| + |0><1| - |1><1|) / sqrt(2)`.
    pub fn hadamard() -> Self {
        let h = Amplitude::new(FRAC_1_SQRT_2, 0.0);
        Self::from_entries(1, [(0, 0, h), (1, 0, h), (0, 1, h), (1, 1, -h)]).expect("fixed gate")
    }

    /// `CNOT = |00><00| + |01><01| + |11><10| + |10><11|`.
    pub fn cnot() -> Self {
        Self::from_entries(2, [(0, 0, ONE), (1, 1, ONE), (3, 2, ONE), (2, 3, ONE)])
            .expect("fixed gate")
    }

    /// The `n`-qubit Hadamard from its closed form: entry `(j, k)` is
    /// `(-1)^(k.j) / sqrt(2^n)`.
    pub fn hadamard_n(n: usize) -> Result<Self> {
        check_width(n)?;
        if n > MAX_HADAMARD_QUBITS {
            return Err(Error::TooLarge {
                what: "dense Hadamard operator",
                qubits: n,
                limit: MAX_HADAMARD_QUBITS,
            });
        }
        let dim = 1usize << n;
        let scale = (dim as f64).sqrt().recip();
        let entries = (0..dim).flat_map(move |j| {
            (0..dim).map(move |k| {
                let sign = if bitdot(k, j) == 1 { -scale } else { scale };
                (j, k, Amplitude::new(sign, 0.0))
            })
        });
        Self::from_entries(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Amplitude {
        self.terms
            .get(&(i, j))
            .copied()
            .unwrap_or(Amplitude::new(0.0, 0.0))
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Amplitude)> + '_ {
        self.terms.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn terms(&self) -> impl Iterator<Item = KetBraTerm> + '_ {
        let n = self.n;
        self.entries().map(move |(i, j, weight)| KetBraTerm {
            weight,
            ket: BasisState::new(i as u64, n).expect("entries fit the register"),
            bra: BasisState::new(j as u64, n).expect("entries fit the register"),
        })
    }

    /// Step one of application: `raw_i = sum_k a_ik b_k`, skipping zero
    /// state weights. No normalization.
    pub fn apply_raw(&self, state: &QuantumState) -> Result<Vec<Amplitude>> {
        same_width(self.n, state.n())?;
        let b = state.amps();
        let mut raw = vec![Amplitude::new(0.0, 0.0); b.len()];
        for (&(i, k), a) in &self.terms {
            let bk = b[k];
            if bk.re != 0.0 || bk.im != 0.0 {
                raw[i] += a * bk;
            }
        }
        Ok(raw)
    }

    /// Both steps: raw product, then division by its norm.
    pub fn apply(&self, state: &QuantumState) -> Result<ApplyReport> {
        normalize_raw(self.apply_raw(state)?)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Operator {
        Operator {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), w)| ((j, i), w.conj()))
                .collect(),
        }
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &Operator) -> Result<Operator> {
        same_width(self.n, other.n)?;
        // rows of `self` arrive in order; accumulate one output row at a time
        let mut row = RowAccumulator::new(self.n);
        let mut out = Vec::new();
        let mut current = None;
        for (&(i, k), a) in &self.terms {
            if current != Some(i) {
                if let Some(prev) = current {
                    row.drain_into(prev, &mut out);
                }
                current = Some(i);
            }
            for (&(_, j), b) in other.terms.range((k, 0)..(k + 1, 0)) {
                row.add(j, a * b);
            }
        }
        if let Some(prev) = current {
            row.drain_into(prev, &mut out);
        }
        Ok(Operator {
            n: self.n,
            terms: out.into_iter().collect(),
        })
    }

    /// `self (x) other`: weights multiply, kets and bras concatenate.
    pub fn tensor(&self, other: &Operator) -> Result<Operator> {
        let n = self.n + other.n;
        check_width(n)?;
        let shift = other.n;
        let entries = self.entries().flat_map(|(i, j, a)| {
            other
                .entries()
                .map(move |(k, l, b)| ((i << shift) | k, (j << shift) | l, a * b))
        });
        Operator::from_entries(n, entries.collect::<Vec<_>>())
    }

    /// `O O^dagger` and `O^dagger O` both within `tol` of the identity,
    /// entrywise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        let adj = self.adjoint();
        let near_identity = |p: Result<Operator>| {
            p.ok()
                .and_then(|p| p.max_abs_diff(&identity_unchecked(self.n)))
                .is_some_and(|d| d <= tol)
        };
        near_identity(self.compose(&adj)) && near_identity(adj.compose(self))
    }

    /// Largest entrywise difference, equivalent to comparing dense forms.
    pub fn max_abs_diff(&self, other: &Operator) -> Option<f64> {
        if self.n != other.n {
            return None;
        }
        let mut worst = 0.0f64;
        for (key, a) in &self.terms {
            let b = other.terms.get(key).copied().unwrap_or_default();
            worst = worst.max((a - b).norm());
        }
        for (key, b) in &other.terms {
            if !self.terms.contains_key(key) {
                worst = worst.max(b.norm());
            }
        }
        Some(worst)
    }

    pub fn approx_eq(&self, other: &Operator, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    pub fn to_dense(&self) -> Result<DenseMatrix> {
        if self.n > MAX_DENSE_QUBITS {
            return Err(Error::TooLarge {
                what: "dense matrix",
                qubits: self.n,
                limit: MAX_DENSE_QUBITS,
            });
        }
        let mut m = DenseMatrix::zeros(self.dim());
        for (&(i, j), &w) in &self.terms {
            m[(i, j)] = w;
        }
        Ok(m)
    }
}

/// Parity of the bitwise AND: `k_0 j_0 xor k_1 j_1 xor ...`.
pub fn bitdot(k: usize, j: usize) -> u8 {
    ((k & j).count_ones() & 1) as u8
}

/// A tensor product `A (x) B (x) ...` kept in factored form.
///
/// Applying it acts with each factor on its own block of qubits, which
/// avoids materializing the 4^n entries of wide layers such as `H^(x)n`.
/// [`ProductOperator::expand`] gives the equivalent [`Operator`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProductOperator {
    factors: Vec<Operator>,
    n: usize,
}

impl ProductOperator {
    pub fn new(factors: Vec<Operator>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "product needs at least one factor".into(),
            ));
        }
        let n = factors.iter().map(Operator::n).sum();
        check_width(n)?;
        Ok(Self { factors, n })
    }

    /// `op (x) op (x) ... ` with `copies` factors.
    pub fn power(op: &Operator, copies: usize) -> Result<Self> {
        Self::new(vec![op.clone(); copies])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Operator] {
        &self.factors
    }

    /// Folds the factors with [`Operator::tensor`].
    pub fn expand(&self) -> Result<Operator> {
        let (first, rest) = self.factors.split_first().expect("nonempty");
        rest.iter().try_fold(first.clone(), |acc, f| acc.tensor(f))
    }

    pub fn apply_raw(&self, state: &QuantumState) -> Result<Vec<Amplitude>> {
        same_width(self.n, state.n())?;
        let mut raw = state.amps().to_vec();
        let mut block = Vec::new();
        let mut offset = 0;
        for f in &self.factors {
            let m = f.n();
            let low_bits = self.n - offset - m;
            let width = 1usize << m;
            block.resize(width, Amplitude::new(0.0, 0.0));
            for high in 0..1usize << offset {
                for low in 0..1usize << low_bits {
                    let at = |j: usize| (high << (m + low_bits)) | (j << low_bits) | low;
                    block.fill(Amplitude::new(0.0, 0.0));
                    for (i, j, a) in f.entries() {
                        let v = raw[at(j)];
                        if v.re != 0.0 || v.im != 0.0 {
                            block[i] += a * v;
                        }
                    }
                    for (j, v) in block.iter().enumerate() {
                        raw[at(j)] = *v;
                    }
                }
            }
            offset += m;
        }
        Ok(raw)
    }

    pub fn apply(&self, state: &QuantumState) -> Result<ApplyReport> {
        normalize_raw(self.apply_raw(state)?)
    }
}

fn normalize_raw(raw: Vec<Amplitude>) -> Result<ApplyReport> {
    let factor = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if factor < ZERO_NORM {
        return Err(Error::Annihilated { factor });
    }
    let scaled = raw.into_iter().map(|a| a / factor).collect();
    Ok(ApplyReport {
        output: QuantumState::normalize(scaled)?,
        normalization_factor: factor,
    })
}

/// Scratch space for one output row of a product. Dense for registers up to
/// 16 qubits, a sorted map beyond.
enum RowAccumulator {
    Dense {
        values: Vec<Amplitude>,
        touched: Vec<usize>,
    },
    Sparse(BTreeMap<usize, Amplitude>),
}

impl RowAccumulator {
    fn new(n: usize) -> Self {
        if n <= 16 {
            RowAccumulator::Dense {
                values: vec![Amplitude::new(0.0, 0.0); 1 << n],
                touched: Vec::new(),
            }
        } else {
            RowAccumulator::Sparse(BTreeMap::new())
        }
    }

    fn add(&mut self, j: usize, w: Amplitude) {
        match self {
            RowAccumulator::Dense { values, touched } => {
                if values[j] == Amplitude::new(0.0, 0.0) {
                    touched.push(j);
                }
                values[j] += w;
            }
            RowAccumulator::Sparse(map) => *map.entry(j).or_default() += w,
        }
    }

    fn drain_into(&mut self, i: usize, out: &mut Vec<((usize, usize), Amplitude)>) {
        let keep = |w: &Amplitude| w.norm() >= DROP_THRESHOLD;
        match self {
            RowAccumulator::Dense { values, touched } => {
                touched.sort_unstable();
                touched.dedup();
                for &j in touched.iter() {
                    let w = std::mem::take(&mut values[j]);
                    if keep(&w) {
                        out.push(((i, j), w));
                    }
                }
                touched.clear();
            }
            RowAccumulator::Sparse(map) => out.extend(
                std::mem::take(map)
                    .into_iter()
                    .filter(|(_, w)| keep(w))
                    .map(|(j, w)| ((i, j), w)),
            ),
        }
    }
}

fn identity_unchecked(n: usize) -> Operator {
    Operator {
        n,
        terms: (0..1usize << n).map(|x| ((x, x), ONE)).collect(),
    }
}

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BASIS_QUBITS {
        return Err(Error::OutOfRange {
            what: "operator qubit count",
            value: n,
            min: 1,
            max: MAX_BASIS_QUBITS,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Amplitude {
        Amplitude::new(re, im)
    }

    fn real_rows(rows: &[&[f64]]) -> DenseMatrix {
        DenseMatrix::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| c(x, 0.0)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn builders_from_terms() {
        let x = Operator::from_terms(&[(c(1.0, 0.0), "0", "1"), (c(1.0, 0.0), "1", "0")]).unwrap();
        assert!(x.approx_eq(&Operator::pauli_x(), 0.0));
        let h = FRAC_1_SQRT_2;
        let hh = Operator::from_terms(&[
            (c(h, 0.0), "0", "0"),
            (c(h, 0.0), "1", "0"),
            (c(h, 0.0), "0", "1"),
            (c(-h, 0.0), "1", "1"),
        ])
        .unwrap();
        assert!(hh.approx_eq(&Operator::hadamard(), 0.0));
        let z = Operator::from_terms(&[(c(1.0, 0.0), "0", "0"), (c(-1.0, 0.0), "0", "0")]).unwrap();
        assert_eq!(z.nnz(), 0);
        assert_eq!(z.to_dense().unwrap(), DenseMatrix::zeros(2));
        assert!(matches!(
            Operator::from_terms(&[(c(1.0, 0.0), "0", "01")]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dense_forms() {
        let h = FRAC_1_SQRT_2;
        assert_eq!(
            Operator::pauli_x().to_dense().unwrap(),
            real_rows(&[&[0.0, 1.0], &[1.0, 0.0]])
        );
        assert_eq!(
            Operator::identity(1).unwrap().to_dense().unwrap(),
            DenseMatrix::identity(2)
        );
        assert!(Operator::hadamard()
            .to_dense()
            .unwrap()
            .approx_eq(&real_rows(&[&[h, h], &[h, -h]]), 0.0));
        let cnot = real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ]);
        assert_eq!(Operator::cnot().to_dense().unwrap(), cnot);
        assert!(matches!(
            Operator::identity(0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            Operator::zero(14).unwrap().to_dense(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn outer_products() {
        let x = QuantumState::basis("1000").unwrap();
        let y = QuantumState::basis("0001").unwrap();
        let o = Operator::outer(&x, &y).unwrap();
        assert_eq!(o.dim(), 16);
        assert_eq!(o.nnz(), 1);
        assert_eq!(o.entry(8, 1), c(1.0, 0.0));

        let p0 = Operator::outer(
            &QuantumState::basis("0").unwrap(),
            &QuantumState::basis("0").unwrap(),
        )
        .unwrap();
        let p1 = Operator::outer(
            &QuantumState::basis("1").unwrap(),
            &QuantumState::basis("1").unwrap(),
        )
        .unwrap();
        let sum = Operator::from_entries(1, p0.entries().chain(p1.entries())).unwrap();
        assert!(sum.approx_eq(&Operator::identity(1).unwrap(), 0.0));

        let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
        let phi = QuantumState::from_amplitudes(vec![
            c(0.0, 0.0),
            c(0.0, 1.0 / r2),
            c(0.0, 0.0),
            c(1.0 / r2, 0.0),
        ])
        .unwrap();
        let psi = QuantumState::from_amplitudes(vec![
            c(0.0, 0.0),
            c(0.0, 1.0 / r3),
            c(1.0 / r3, 0.0),
            c(1.0 / r3, 0.0),
        ])
        .unwrap();
        let o = Operator::outer(&psi, &phi).unwrap();
        // (i/sqrt3)(conj(i/sqrt2)) = 1/sqrt6
        assert!((o.entry(1, 1) - c(1.0 / 6f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!(Operator::outer(&phi, &QuantumState::basis("0").unwrap()).is_err());
    }

    #[test]
    fn application_examples() {
        let r = Operator::hadamard()
            .apply(&QuantumState::basis("0").unwrap())
            .unwrap();
        assert!((r.normalization_factor - 1.0).abs() < 1e-12);
        assert!((r.output.amplitude(0) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((r.output.amplitude(1) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);

        let r = Operator::pauli_x()
            .apply(&QuantumState::basis("1").unwrap())
            .unwrap();
        assert_eq!(r.output, QuantumState::basis("0").unwrap());
        assert_eq!(r.normalization_factor, 1.0);

        let proj = Operator::from_terms(&[(c(1.0, 0.0), "0", "0")]).unwrap();
        assert!(matches!(
            proj.apply(&QuantumState::basis("1").unwrap()),
            Err(Error::Annihilated { .. })
        ));
        // non-unitary: rescaled, factor reported
        let plus = Operator::hadamard()
            .apply(&QuantumState::basis("0").unwrap())
            .unwrap()
            .output;
        let r = proj.apply(&plus).unwrap();
        assert!((r.normalization_factor - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!(r.output, QuantumState::basis("0").unwrap());

        let cnot = Operator::cnot();
        let out = cnot
            .apply(&QuantumState::basis("10").unwrap())
            .unwrap()
            .output;
        assert_eq!(out, QuantumState::basis("11").unwrap());
        assert!(cnot.apply(&QuantumState::basis("0").unwrap()).is_err());
    }

    #[test]
    fn adjoint_and_compose() {
        let h = Operator::hadamard();
        assert!(h
            .adjoint()
            .to_dense()
            .unwrap()
            .approx_eq(&h.to_dense().unwrap(), 0.0));
        let up = Operator::from_terms(&[(c(1.0, 0.0), "1", "0")]).unwrap();
        let down = Operator::from_terms(&[(c(1.0, 0.0), "0", "1")]).unwrap();
        assert_eq!(up.adjoint(), down);
        let cplx = Operator::from_entries(1, [(0, 1, c(0.3, -2.0))]).unwrap();
        assert_eq!(cplx.adjoint().entry(1, 0), c(0.3, 2.0));

        let id1 = Operator::identity(1).unwrap();
        let x = Operator::pauli_x();
        assert!(x.compose(&x).unwrap().approx_eq(&id1, 1e-12));
        assert!(h.compose(&h).unwrap().approx_eq(&id1, 1e-12));
        let cnot = Operator::cnot();
        assert!(cnot
            .compose(&cnot)
            .unwrap()
            .approx_eq(&Operator::identity(2).unwrap(), 1e-12));
        assert!(Operator::identity(2)
            .unwrap()
            .compose(&cnot)
            .unwrap()
            .approx_eq(&cnot, 0.0));
        assert!(x.compose(&cnot).is_err());
    }

    #[test]
    fn unitarity() {
        assert!(Operator::cnot().is_unitary(1e-12));
        assert!(Operator::identity(3).unwrap().is_unitary(1e-12));
        assert!(Operator::hadamard().is_unitary(1e-12));
        let up = Operator::from_terms(&[(c(1.0, 0.0), "1", "0")]).unwrap();
        assert!(!up.is_unitary(1e-12));
        assert!(!Operator::zero(1).unwrap().is_unitary(1e-12));
    }

    #[test]
    fn tensor_examples() {
        let up = Operator::from_terms(&[(c(1.0, 0.0), "1", "0")]).unwrap();
        let got = Operator::pauli_x().tensor(&up).unwrap();
        let want =
            Operator::from_terms(&[(c(1.0, 0.0), "01", "10"), (c(1.0, 0.0), "11", "00")]).unwrap();
        assert!(got.approx_eq(&want, 0.0));

        let id2 = Operator::identity(1)
            .unwrap()
            .tensor(&Operator::identity(1).unwrap())
            .unwrap();
        assert!(id2.approx_eq(&Operator::identity(2).unwrap(), 0.0));

        let h = FRAC_1_SQRT_2;
        let hx = Operator::hadamard().tensor(&Operator::pauli_x()).unwrap();
        let eight = Operator::from_terms(&[
            (c(h, 0.0), "00", "01"),
            (c(h, 0.0), "01", "00"),
            (c(h, 0.0), "10", "01"),
            (c(h, 0.0), "11", "00"),
            (c(h, 0.0), "00", "11"),
            (c(h, 0.0), "01", "10"),
            (c(-h, 0.0), "10", "11"),
            (c(-h, 0.0), "11", "10"),
        ])
        .unwrap();
        assert_eq!(hx.nnz(), 8);
        assert!(hx.approx_eq(&eight, 1e-15));
        let kron = Operator::hadamard()
            .to_dense()
            .unwrap()
            .kron(&Operator::pauli_x().to_dense().unwrap());
        assert!(hx.to_dense().unwrap().approx_eq(&kron, 0.0));
    }

    #[test]
    fn hadamard_closed_form() {
        assert!(Operator::hadamard_n(1)
            .unwrap()
            .approx_eq(&Operator::hadamard(), 1e-15));
        assert!(Operator::hadamard_n(MAX_HADAMARD_QUBITS + 1).is_err());
        for j in 0..16 {
            assert_eq!(bitdot(0, j), 0);
        }
        assert_eq!(bitdot(0b1011, 0b0011), 0);
        assert_eq!(bitdot(0b1011, 0b0010), 1);
    }

    #[test]
    fn product_operator_matches_expansion() {
        let p = ProductOperator::new(vec![
            Operator::hadamard(),
            Operator::cnot(),
            Operator::pauli_x(),
        ])
        .unwrap();
        assert_eq!(p.n(), 4);
        let full = p.expand().unwrap();
        let s = QuantumState::normalize(
            (0..16)
                .map(|k| c(k as f64 - 7.5, (k * k % 5) as f64))
                .collect(),
        )
        .unwrap();
        let a = p.apply_raw(&s).unwrap();
        let b = full.apply_raw(&s).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-12);
        }
        assert!(ProductOperator::new(vec![]).is_err());
    }
}
