use super::gate::{pauli_x_matrix, Control, Gate};
use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// A unitary acting nontrivially only on basis states `low` and `high`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoLevel {
    pub low: usize,
    pub high: usize,
    /// 2x2 block in the ordered basis `(low, high)`.
    pub matrix: ComplexMatrix,
}

impl TwoLevel {
    /// Full `dim x dim` matrix.
    pub fn embed(&self, dim: usize) -> ComplexMatrix {
        let mut m = ComplexMatrix::identity(dim);
        let idx = [self.low, self.high];
        for (r, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                m[(i, j)] = self.matrix[(r, c)];
            }
        }
        m
    }

    fn adjoint(&self) -> TwoLevel {
        TwoLevel {
            low: self.low,
            high: self.high,
            matrix: self.matrix.adjoint(),
        }
    }
}

// Entries below this modulus are already eliminated.
const ZERO: f64 = 1e-15;

/// Givens-style elimination of a unitary into two-level factors.
///
/// Factors are returned in application order: `W = F_last ... F_1 F_0`.
/// Each column is cleared top-down with its diagonal entry driven to 1, and
/// the trailing 2x2 block becomes the first factor, so no separate phase
/// layer is needed and at most `d(d-1)/2` factors are produced.
pub fn two_level_decompose(w: &ComplexMatrix) -> Result<Vec<TwoLevel>> {
    let d = w.dim();
    if d < 2 {
        return Err(Error::Precondition(
            "two-level decomposition needs dimension >= 2".into(),
        ));
    }
    let residual = w.unitarity_residual();
    if residual > 1e-9 {
        return Err(Error::Precondition(format!(
            "matrix is not unitary (residual {residual:.3e})"
        )));
    }
    let mut work = w.clone();
    let mut eliminations = Vec::new();
    for j in 0..d - 2 {
        for i in (j + 1..d).rev() {
            let a = work[(j, j)];
            let b = work[(i, j)];
            if b.norm() <= ZERO && (i != j + 1 || (a - 1.0).norm() <= ZERO) {
                continue;
            }
            let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let g =
                ComplexMatrix::from_rows(&[vec![a.conj() / r, b.conj() / r], vec![-b / r, a / r]])?;
            for col in 0..d {
                let (x, y) = (work[(j, col)], work[(i, col)]);
                work[(j, col)] = g[(0, 0)] * x + g[(0, 1)] * y;
                work[(i, col)] = g[(1, 0)] * x + g[(1, 1)] * y;
            }
            eliminations.push(TwoLevel {
                low: j,
                high: i,
                matrix: g,
            });
        }
    }
    let last = ComplexMatrix::from_fn(2, |r, c| work[(d - 2 + r, d - 2 + c)]);
    let mut factors = Vec::with_capacity(eliminations.len() + 1);
    if last.max_diff(&ComplexMatrix::identity(2)) > ZERO {
        factors.push(TwoLevel {
            low: d - 2,
            high: d - 1,
            matrix: last,
        });
    }
    factors.extend(eliminations.iter().rev().map(TwoLevel::adjoint));
    Ok(factors)
}

/// Product of factors given in application order.
pub fn reassemble(factors: &[TwoLevel], dim: usize) -> ComplexMatrix {
    factors
        .iter()
        .fold(ComplexMatrix::identity(dim), |acc, f| &f.embed(dim) * &acc)
}

/// Lowers one two-level factor on a register (`qubits[0]` most significant)
/// to multi-controlled X gates along a Gray-code path and one
/// multi-controlled single-qubit gate.
pub fn two_level_gates(factor: &TwoLevel, qubits: &[usize]) -> Result<Vec<Gate>> {
    let k = qubits.len();
    if factor.high >= 1 << k || factor.low >= 1 << k || factor.low == factor.high {
        return Err(Error::Dimension(format!(
            "basis pair ({}, {}) invalid for {k} qubits",
            factor.low, factor.high
        )));
    }
    // Register bit p (weight 2^p) is qubit qubits[k-1-p].
    let qubit_of = |p: usize| qubits[k - 1 - p];
    let controls_except = |state: usize, p: usize| -> Vec<Control> {
        (0..k)
            .filter(|&b| b != p)
            .map(|b| Control {
                qubit: qubit_of(b),
                value: state & (1 << b) != 0,
            })
            .collect()
    };
    let diff = factor.low ^ factor.high;
    let bits: Vec<usize> = (0..k).filter(|b| diff & (1 << b) != 0).collect();
    let (&pivot, path) = bits
        .split_last()
        .expect("distinct indices differ in some bit");

    let mut walk = Vec::with_capacity(path.len());
    let mut cur = factor.low;
    for &p in path {
        walk.push(Gate::controlled(
            controls_except(cur, p),
            vec![qubit_of(p)],
            pauli_x_matrix(),
        )?);
        cur ^= 1 << p;
    }
    let u = &factor.matrix;
    let oriented = if cur & (1 << pivot) == 0 {
        u.clone()
    } else {
        ComplexMatrix::from_fn(2, |r, c| u[(1 - r, 1 - c)])
    };
    let mut gates = walk.clone();
    gates.push(Gate::controlled(
        controls_except(cur, pivot),
        vec![qubit_of(pivot)],
        oriented,
    )?);
    gates.extend(walk.into_iter().rev());
    Ok(gates)
}

/// Gate sequence realizing `W` on `qubits` through [`two_level_decompose`].
pub fn unitary_gates(w: &ComplexMatrix, qubits: &[usize]) -> Result<Vec<Gate>> {
    if w.dim() != 1 << qubits.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix on {} qubits",
            w.dim(),
            w.dim(),
            qubits.len()
        )));
    }
    let mut gates = Vec::new();
    for f in two_level_decompose(w)? {
        gates.extend(two_level_gates(&f, qubits)?);
    }
    Ok(gates)
}
