use num_complex::Complex64;
use serde::Serialize;

use super::construct::{beta_matrix, companion_matrix};
use super::spec::{binomial_roots, NODE_TOL};
use crate::error::{Error, Result};
use crate::matcore::{eigendecompose_unitary, scalar_power_check, ComplexMatrix, Polynomial};

/// Coefficients of `g` below this modulus count as zero when deciding whether
/// the minimal polynomial is binomial.
const CONSTANT_TOL: f64 = 1e-8;

/// Result of taking `V = U^m = g(U)` for a non-binomial minimal polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct LimitationReport {
    pub minimal: Polynomial,
    /// `g` in `m(x) = x^m - g(x)`.
    pub g: Polynomial,
    pub c: ComplexMatrix,
    /// Squared norm of the first row of `C`; unitarity would need exactly 1.
    pub first_row_norm_sq: f64,
}

pub fn limitation_demo(u: &ComplexMatrix, tol: f64) -> Result<LimitationReport> {
    let spectrum = eigendecompose_unitary(u, tol)?;
    let minimal = Polynomial::from_roots(&spectrum.cluster_values());
    let m = minimal.degree().unwrap_or(0);
    let g = Polynomial::new(minimal.coeffs()[..m].iter().map(|c| -c).collect());
    if g.coeffs().iter().skip(1).all(|c| c.norm() <= CONSTANT_TOL) {
        return Err(Error::NotApplicable(format!(
            "minimal polynomial {minimal} is binomial, so M is unitary"
        )));
    }
    let mut alpha = g.coeffs().to_vec();
    alpha.resize(m, Complex64::new(0.0, 0.0));
    let c = beta_matrix(&alpha, &companion_matrix(&minimal)?)?;
    let first_row_norm_sq = c.row(0).iter().map(|z| z.norm_sqr()).sum();
    Ok(LimitationReport {
        minimal,
        g,
        c,
        first_row_norm_sq,
    })
}

/// Embedding of `U` into a matrix whose minimal polynomial is `x^m - tau`.
#[derive(Clone, Debug, Serialize)]
pub struct Extension {
    pub m: usize,
    pub tau: Complex64,
    /// All roots of `x^m - tau`; the interpolation nodes.
    pub nodes: Vec<Complex64>,
    pub minimal: Polynomial,
    /// `(x^m - tau) / minimal`.
    pub complement: Polynomial,
    /// Roots of `complement`, i.e. nodes that are not eigenvalues of `U`.
    pub missing_roots: Vec<Complex64>,
}

impl Extension {
    /// `U_A = diag(U, A)` with `A` diagonal over the missing roots.
    pub fn auxiliary_block(&self, u: &ComplexMatrix) -> ComplexMatrix {
        if self.missing_roots.is_empty() {
            u.clone()
        } else {
            u.block_diag(&ComplexMatrix::from_diagonal(&self.missing_roots))
        }
    }
}

pub fn extend_to_binomial(u: &ComplexMatrix, m: usize, tol: f64) -> Result<Extension> {
    let tau = scalar_power_check(u, m, tol)?
        .ok_or_else(|| Error::Precondition(format!("U^{m} is not a scalar matrix")))?;
    let spectrum = eigendecompose_unitary(u, tol)?;
    let eigen = spectrum.cluster_values();
    let minimal = Polynomial::from_roots(&eigen);
    let (complement, remainder) = Polynomial::binomial(m, tau).div_rem(&minimal)?;
    if remainder.max_abs() > 1e-8 {
        return Err(Error::Numeric(format!(
            "minimal polynomial does not divide x^{m} - tau (remainder {:.3e})",
            remainder.max_abs()
        )));
    }
    let nodes = binomial_roots(m, tau);
    let missing_roots: Vec<Complex64> = nodes
        .iter()
        .copied()
        .filter(|r| eigen.iter().all(|e| (e - r).norm() > NODE_TOL))
        .collect();
    if Some(missing_roots.len()) != complement.degree() {
        return Err(Error::Numeric(
            "eigenvalues of U do not match the roots of x^m - tau".into(),
        ));
    }
    Ok(Extension {
        m,
        tau,
        nodes,
        minimal,
        complement,
        missing_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn limitation_on_diag_one_i() {
        let u = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let r = limitation_demo(&u, 1e-10).unwrap();
        let g = r.g.coeffs();
        assert!((g[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((g[1] - c(1.0, 1.0)).norm() < 1e-12);
        assert!((r.first_row_norm_sq - 3.0).abs() < 1e-10);
    }

    #[test]
    fn limitation_on_dft4() {
        let r = limitation_demo(&ComplexMatrix::dft(2), 1e-10).unwrap();
        let want = [c(0.0, 1.0), c(1.0, 0.0), c(0.0, -1.0)];
        for (a, b) in r.g.coeffs().iter().zip(want) {
            assert!((a - b).norm() < 1e-10);
        }
        assert!((r.first_row_norm_sq - 3.0).abs() < 1e-10);
    }

    #[test]
    fn limitation_not_applicable_for_binomial() {
        let u = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert!(matches!(
            limitation_demo(&u, 1e-10),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            limitation_demo(&ComplexMatrix::dft(3), 1e-10),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn extension_of_dft4() {
        let u = ComplexMatrix::dft(2);
        let ext = extend_to_binomial(&u, 4, 1e-10).unwrap();
        assert!((ext.tau - c(1.0, 0.0)).norm() < 1e-12);
        assert_eq!(ext.missing_roots.len(), 1);
        assert!((ext.missing_roots[0] - c(0.0, 1.0)).norm() < 1e-12);
        assert!((ext.complement.coeffs()[0] - c(0.0, -1.0)).norm() < 1e-10);
        let ua = ext.auxiliary_block(&u);
        assert_eq!(ua.dim(), 5);
        let mp = crate::matcore::minimal_polynomial(&ua, 1e-10).unwrap();
        let target = Polynomial::binomial(4, c(1.0, 0.0));
        assert_eq!(mp.degree(), Some(4));
        for (a, b) in mp.coeffs().iter().zip(target.coeffs()) {
            assert!((a - b).norm() < 1e-8);
        }
    }

    #[test]
    fn extension_trivial_cases() {
        let ext = extend_to_binomial(&ComplexMatrix::identity(2), 2, 1e-10).unwrap();
        assert_eq!(ext.complement.degree(), Some(1));
        assert!((ext.complement.coeffs()[0] - c(1.0, 0.0)).norm() < 1e-12);

        let f3 = ComplexMatrix::dft(3);
        let ext = extend_to_binomial(&f3, 4, 1e-10).unwrap();
        assert_eq!(ext.complement.degree(), Some(0));
        assert!(ext.missing_roots.is_empty());
        assert_eq!(ext.auxiliary_block(&f3), f3);

        assert!(matches!(
            extend_to_binomial(&f3, 3, 1e-10),
            Err(Error::Precondition(_))
        ));
    }
}
