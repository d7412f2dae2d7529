use std::f64::consts::PI;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense square complex matrix, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from row-major entries. Fails unless `entries.len()` is a
    /// positive perfect square and every entry is finite.
    pub fn from_row_major(entries: Vec<Complex64>) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != entries.len() {
            return Err(Error::Dimension(format!(
                "{} entries do not form a square matrix",
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        Ok(ComplexMatrix { dim, data: entries })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(
                "rows must all have length equal to the row count".into(),
            ));
        }
        Self::from_row_major(rows.iter().flatten().copied().collect())
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Unitary DFT matrix `N^{-1/2} (exp(-2 pi i k l / N))` of size `N = 2^qubits`.
    pub fn dft(qubits: usize) -> Self {
        let n = 1usize << qubits;
        let norm = 1.0 / (n as f64).sqrt();
        Self::from_fn(n, |k, l| {
            Complex64::from_polar(norm, -2.0 * PI * ((k * l) % n) as f64 / n as f64)
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entry modulus of `self - other`.
    pub fn max_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max entry modulus of `M^dagger M - I`.
    pub fn unitarity_residual(&self) -> f64 {
        (&self.adjoint() * self).max_diff(&Self::identity(self.dim))
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &ComplexMatrix) -> Self {
        let d = self.dim + other.dim;
        Self::from_fn(d, |i, j| match (i < self.dim, j < self.dim) {
            (true, true) => self[(i, j)],
            (false, false) => other[(i - self.dim, j - self.dim)],
            _ => Complex64::new(0.0, 0.0),
        })
    }

    /// Leading `k x k` principal block.
    pub fn top_left(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.dim);
        Self::from_fn(k, |i, j| self[(i, j)])
    }

    pub(crate) fn to_nalgebra(&self) -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_row_slice(self.dim, self.dim, &self.data)
    }

    pub(crate) fn from_nalgebra(m: &nalgebra::DMatrix<Complex64>) -> Self {
        Self::from_fn(m.nrows(), |i, j| m[(i, j)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                for (o, b) in out.data[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

// On-disk form: { "dim": d, "entries": [[re, im], ...] }, row-major.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile {
            dim: self.dim,
            entries: self.data.iter().map(|z| [z.re, z.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let file = MatrixFile::deserialize(d)?;
        if file.entries.len() != file.dim * file.dim {
            return Err(D::Error::custom(format!(
                "expected {} entries for dim {}, found {}",
                file.dim * file.dim,
                file.dim,
                file.entries.len()
            )));
        }
        ComplexMatrix::from_row_major(
            file.entries
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        )
        .map_err(D::Error::custom)
    }
}
