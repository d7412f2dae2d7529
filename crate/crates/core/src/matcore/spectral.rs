use nalgebra::linalg::Schur;
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::poly::Polynomial;
use super::{CLUSTER_TOL, DEFAULT_TOL};
use crate::error::{Error, Result};

/// A scalar function that can be evaluated on the spectrum of a unitary.
pub trait SpectralFunction {
    fn value_at(&self, z: Complex64) -> Result<Complex64>;
}

impl<F> SpectralFunction for F
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    fn value_at(&self, z: Complex64) -> Result<Complex64> {
        self(z)
    }
}

/// Eigendecomposition `U = T diag(eigenvalues) T^dagger` of a unitary matrix.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: ComplexMatrix,
    /// Eigenvalue indices grouped by single-linkage at [`CLUSTER_TOL`].
    pub clusters: Vec<Vec<usize>>,
}

impl Spectrum {
    /// Mean of each cluster, renormalized onto the unit circle.
    pub fn cluster_values(&self) -> Vec<Complex64> {
        self.clusters
            .iter()
            .map(|idx| {
                let sum: Complex64 = idx.iter().map(|&i| self.eigenvalues[i]).sum();
                let mean = sum / idx.len() as f64;
                mean / mean.norm()
            })
            .collect()
    }

    /// Reassembles `T diag(d) T^dagger`.
    pub fn reassemble(&self, diag: &[Complex64]) -> ComplexMatrix {
        let t = &self.eigenvectors;
        let n = t.dim();
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| t[(i, k)] * diag[k] * t[(j, k)].conj()).sum()
        })
    }
}

/// True iff `max |M^dagger M - I| <= tol`.
pub fn is_unitary(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Precondition(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(m.unitarity_residual() <= tol)
}

fn require_unitary(u: &ComplexMatrix, tol: f64) -> Result<()> {
    if is_unitary(u, tol)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "matrix is not unitary (residual {:.3e} > {tol:.1e})",
            u.unitarity_residual()
        )))
    }
}

pub fn eigendecompose_unitary(u: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    require_unitary(u, tol)?;
    let n = u.dim();
    // Degenerate spectra can stall the shifted QR just above machine epsilon,
    // so the deflation threshold is relaxed step by step.
    let schur = [1.0, 16.0, 256.0, 4096.0]
        .iter()
        .find_map(|k| Schur::try_new(u.to_nalgebra(), k * f64::EPSILON, 1000 * n))
        .ok_or_else(|| Error::Numeric("Schur iteration did not converge".into()))?;
    let (q, t) = schur.unpack();
    let eigenvalues: Vec<Complex64> = t.diagonal().iter().copied().collect();
    // A normal matrix has a diagonal Schur form; anything left above the
    // diagonal is rounding noise.
    let off_diag = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| t[(i, j)].norm())
        .fold(0.0, f64::max);
    if off_diag > tol {
        return Err(Error::Numeric(format!(
            "Schur form not diagonal within tolerance ({off_diag:.3e})"
        )));
    }
    let clusters = cluster(&eigenvalues, CLUSTER_TOL);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors: ComplexMatrix::from_nalgebra(&q),
        clusters,
    })
}

// Single-linkage clustering: connected components of the graph joining
// eigenvalues closer than `tol`.
fn cluster(values: &[Complex64], tol: f64) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(i);
    }
    groups
}

/// Monic product of `(x - lambda)` over the distinct eigenvalue clusters.
pub fn minimal_polynomial(u: &ComplexMatrix, tol: f64) -> Result<Polynomial> {
    let spectrum = eigendecompose_unitary(u, tol)?;
    Ok(Polynomial::from_roots(&spectrum.cluster_values()))
}

/// Returns `tau` when `U^m = tau I` within `tol`.
pub fn scalar_power_check(u: &ComplexMatrix, m: usize, tol: f64) -> Result<Option<Complex64>> {
    require_unitary(u, tol)?;
    if m == 0 {
        return Err(Error::Precondition("power m must be at least 1".into()));
    }
    let w = u.pow(m as u64);
    let tau = w[(0, 0)];
    let residual = w.max_diff(&ComplexMatrix::identity(u.dim()).scale(tau));
    Ok((residual <= tol).then_some(tau))
}

/// Smallest `m <= max_m` with `U^m` scalar.
pub fn smallest_scalar_power(
    u: &ComplexMatrix,
    max_m: usize,
    tol: f64,
) -> Result<Option<(usize, Complex64)>> {
    require_unitary(u, tol)?;
    let id = ComplexMatrix::identity(u.dim());
    let mut w = u.clone();
    for m in 1..=max_m {
        let tau = w[(0, 0)];
        if w.max_diff(&id.scale(tau)) <= tol {
            return Ok(Some((m, tau)));
        }
        w = &w * u;
    }
    Ok(None)
}

/// `f(U) = T diag(f(lambda_i)) T^dagger`.
///
/// Each eigenvalue is replaced by its cluster representative before `f` is
/// applied, so degenerate eigenvalues always receive identical values.
pub fn spectral_function_oracle(
    u: &ComplexMatrix,
    f: &impl SpectralFunction,
    tol: f64,
) -> Result<ComplexMatrix> {
    let spectrum = eigendecompose_unitary(u, tol)?;
    let reps = spectrum.cluster_values();
    let mut diag = vec![Complex64::new(0.0, 0.0); u.dim()];
    for (members, &rep) in spectrum.clusters.iter().zip(&reps) {
        let value = f.value_at(rep)?;
        for &i in members {
            diag[i] = value;
        }
    }
    Ok(spectrum.reassemble(&diag))
}

/// [`spectral_function_oracle`] at the default tolerance.
pub fn matrix_function(u: &ComplexMatrix, f: &impl SpectralFunction) -> Result<ComplexMatrix> {
    spectral_function_oracle(u, f, DEFAULT_TOL)
}
