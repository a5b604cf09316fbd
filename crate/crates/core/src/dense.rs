use std::ops::{Index, IndexMut};

use crate::state::Amplitude;

/// Row-major square complex matrix. Used as the brute-force view of an
/// [`Operator`](crate::operator::Operator).
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Amplitude>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Amplitude::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Amplitude::new(1.0, 0.0);
        }
        m
    }

    /// Builds from nested rows. Panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<Amplitude>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Amplitude]> {
        self.data.chunks(self.dim)
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                if a == Amplitude::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Amplitude]) -> Vec<Amplitude> {
        assert_eq!(self.dim, v.len());
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn adjoint(&self) -> DenseMatrix {
        let d = self.dim;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let (p, q) = (self.dim, other.dim);
        let d = p * q;
        let mut out = DenseMatrix::zeros(d);
        for i in 0..p {
            for j in 0..p {
                let a = self.data[i * p + j];
                for k in 0..q {
                    for l in 0..q {
                        out.data[(i * q + k) * d + j * q + l] = a * other.data[k * q + l];
                    }
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &DenseMatrix, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = Amplitude;

    fn index(&self, (i, j): (usize, usize)) -> &Amplitude {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Amplitude {
        &mut self.data[i * self.dim + j]
    }
}
