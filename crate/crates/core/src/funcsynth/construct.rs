use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::spec::{binomial_roots, principal_arg, FunctionSpec};
use crate::error::{Error, Result};
use crate::matcore::{scalar_power_check, ComplexMatrix, Polynomial, SpectralFunction};

/// Allowed deviation of `|f(r_k)|` from 1 at synthesis time.
pub const UNIMODULAR_TOL: f64 = 1e-8;

/// Interpolation coefficients `alpha_0 .. alpha_{m-1}` of `f` on the roots of
/// `x^m - tau`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientVector {
    pub alpha: Vec<Complex64>,
    pub tau: Complex64,
}

impl CoefficientVector {
    pub fn m(&self) -> usize {
        self.alpha.len()
    }

    /// `sum_i alpha_i z^i`.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.alpha
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// `sum_i alpha_i U^i`.
    pub fn evaluate_matrix(&self, u: &ComplexMatrix) -> ComplexMatrix {
        Polynomial::new(self.alpha.clone()).eval_matrix(u)
    }
}

/// Number of ancilla qubits: the least `mu` with `m <= 2^mu`.
pub fn ancilla_count(m: usize) -> usize {
    assert!(m >= 1);
    m.next_power_of_two().trailing_zeros() as usize
}

/// Inverse DFT of the samples on the roots `rho omega^k`, de-scaled by `rho^i`.
pub fn interp_coefficients(
    f: &FunctionSpec,
    m: usize,
    tau: Complex64,
) -> Result<CoefficientVector> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if (tau.norm() - 1.0).abs() > UNIMODULAR_TOL {
        return Err(Error::Precondition(format!(
            "|tau| = {} is not 1",
            tau.norm()
        )));
    }
    let roots = binomial_roots(m, tau);
    let values: Vec<Complex64> = match f {
        FunctionSpec::Samples {
            m: sm,
            tau: stau,
            values,
        } => {
            if *sm != m || (stau - tau).norm() > UNIMODULAR_TOL {
                return Err(Error::Precondition(format!(
                    "samples are given for m = {sm}, tau = {stau}, but synthesis uses m = {m}, tau = {tau}"
                )));
            }
            values.clone()
        }
        FunctionSpec::Named(_) => roots
            .iter()
            .map(|&r| f.value_at(r))
            .collect::<Result<_>>()?,
    };
    for (&root, &value) in roots.iter().zip(&values) {
        if (value.norm() - 1.0).abs() > UNIMODULAR_TOL {
            return Err(Error::Unimodularity { root, value });
        }
    }

    let rho_arg = principal_arg(tau) / m as f64;
    let rho_norm = tau.norm().powf(1.0 / m as f64);
    let alpha = (0..m)
        .map(|i| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    v * Complex64::from_polar(1.0, -2.0 * PI * ((i * k) % m) as f64 / m as f64)
                })
                .sum();
            sum / m as f64 * Complex64::from_polar(rho_norm.powi(-(i as i32)), -rho_arg * i as f64)
        })
        .collect();
    Ok(CoefficientVector { alpha, tau })
}

/// Companion matrix of a monic `x^m - g(x)`: ones on the super-diagonal and
/// `g_0 .. g_{m-1}` on the last row.
pub fn companion_matrix(mpoly: &Polynomial) -> Result<ComplexMatrix> {
    let m = match mpoly.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::Form(
                "companion matrix needs degree at least 1".into(),
            ))
        }
    };
    if !mpoly.is_monic() {
        return Err(Error::Form(format!(
            "polynomial is not monic (leading coefficient {})",
            mpoly.leading().unwrap_or_default()
        )));
    }
    let coeffs = mpoly.coeffs();
    Ok(ComplexMatrix::from_fn(m, |i, j| {
        if i + 1 < m {
            if j == i + 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        } else {
            -coeffs[j]
        }
    }))
}

/// Matrix whose row `k` is `alpha P^k`.
pub fn beta_matrix(alpha: &[Complex64], p: &ComplexMatrix) -> Result<ComplexMatrix> {
    let m = p.dim();
    if alpha.len() != m {
        return Err(Error::Dimension(format!(
            "{} coefficients for a {m}x{m} companion matrix",
            alpha.len()
        )));
    }
    let mut rows = Vec::with_capacity(m);
    let mut row = alpha.to_vec();
    for _ in 0..m {
        let next = (0..m)
            .map(|j| (0..m).map(|l| row[l] * p[(l, j)]).sum())
            .collect();
        rows.push(std::mem::replace(&mut row, next));
    }
    ComplexMatrix::from_rows(&rows)
}

/// Closed form of [`beta_matrix`] for `x^m - tau`: a circulant in `alpha`
/// with entries below the diagonal multiplied by `tau`.
pub fn twisted_circulant(coeffs: &CoefficientVector) -> ComplexMatrix {
    let m = coeffs.m();
    ComplexMatrix::from_fn(m, |i, j| {
        let a = coeffs.alpha[(j + m - i) % m];
        if i > j {
            coeffs.tau * a
        } else {
            a
        }
    })
}

/// `diag(C, I)` of size `2^mu`.
pub fn build_m(c: &ComplexMatrix, mu: usize) -> Result<ComplexMatrix> {
    let m = c.dim();
    let size = 1usize << mu;
    if m > size || (mu > 0 && m <= size / 2) {
        return Err(Error::Dimension(format!(
            "m = {m} does not satisfy 2^(mu-1) < m <= 2^mu for mu = {mu}"
        )));
    }
    Ok(if m == size {
        c.clone()
    } else {
        c.block_diag(&ComplexMatrix::identity(size - m))
    })
}

/// Householder reflection mapping `e_0` to `(1,..,1,0,..,0)/sqrt(m)`.
pub fn build_b(m: usize, mu: usize) -> Result<ComplexMatrix> {
    let size = 1usize << mu;
    if m == 0 || m > size || (mu > 0 && m <= size / 2) {
        return Err(Error::Dimension(format!(
            "m = {m} does not satisfy 2^(mu-1) < m <= 2^mu for mu = {mu}"
        )));
    }
    if m == 1 {
        return Ok(ComplexMatrix::identity(size));
    }
    let amp = 1.0 / (m as f64).sqrt();
    // v = e_0 - target
    let v: Vec<f64> = (0..size)
        .map(|i| match i {
            0 => 1.0 - amp,
            i if i < m => -amp,
            _ => 0.0,
        })
        .collect();
    let norm_sq: f64 = v.iter().map(|x| x * x).sum();
    Ok(ComplexMatrix::from_fn(size, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        Complex64::new(delta - 2.0 * v[i] * v[j] / norm_sq, 0.0)
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaReport {
    /// `| <row 0|row 0> - 1 |`
    pub max_row_norm_deviation: f64,
    /// `max_{a>0} | <row a|row 0> |`
    pub max_offdiag_inner: f64,
}

impl LemmaReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_row_norm_deviation.max(self.max_offdiag_inner)
    }
}

/// Row inner products of the twisted circulant, summed directly from `alpha`.
pub fn check_unitarity_lemma(coeffs: &CoefficientVector) -> LemmaReport {
    let m = coeffs.m();
    let alpha = &coeffs.alpha;
    let tau_bar = coeffs.tau.conj();
    let inner = |a: usize| -> Complex64 {
        let wrapped: Complex64 = (0..a)
            .map(|j| tau_bar * alpha[(j + m - a) % m].conj() * alpha[j])
            .sum();
        let direct: Complex64 = (a..m).map(|j| alpha[j - a].conj() * alpha[j]).sum();
        wrapped + direct
    };
    LemmaReport {
        max_row_norm_deviation: (inner(0) - 1.0).norm(),
        max_offdiag_inner: (1..m).map(|a| inner(a).norm()).fold(0.0, f64::max),
    }
}

/// Everything needed to assemble the generic circuit for one `f(U)`.
#[derive(Clone, Debug, Serialize)]
pub struct SynthesisBundle {
    pub m: usize,
    pub mu: usize,
    pub tau: Complex64,
    pub coefficients: CoefficientVector,
    pub companion: ComplexMatrix,
    pub c: ComplexMatrix,
    pub mixer: ComplexMatrix,
    pub prep: ComplexMatrix,
}

impl SynthesisBundle {
    pub fn from_coefficients(coefficients: CoefficientVector) -> Result<Self> {
        let m = coefficients.m();
        let mu = ancilla_count(m);
        let tau = coefficients.tau;
        let companion = companion_matrix(&Polynomial::binomial(m, tau))?;
        let c = beta_matrix(&coefficients.alpha, &companion)?;
        let mixer = build_m(&c, mu)?;
        let prep = build_b(m, mu)?;
        Ok(SynthesisBundle {
            m,
            mu,
            tau,
            coefficients,
            companion,
            c,
            mixer,
            prep,
        })
    }

    /// Checks the block structure relations between the stored matrices.
    pub fn check_consistency(&self) -> Result<()> {
        let size = 1usize << self.mu;
        let ok = self.coefficients.m() == self.m
            && self.mu == ancilla_count(self.m)
            && self.c.dim() == self.m
            && self.companion.dim() == self.m
            && self.mixer.dim() == size
            && self.prep.dim() == size
            && (0..size).all(|i| {
                (0..size).all(|j| {
                    let expected = if i < self.m && j < self.m {
                        self.c[(i, j)]
                    } else if i == j {
                        Complex64::new(1.0, 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    };
                    self.mixer[(i, j)] == expected
                })
            });
        if !ok {
            return Err(Error::Consistency(
                "matrix shapes or M block structure disagree".into(),
            ));
        }
        let amp = 1.0 / (self.m as f64).sqrt();
        let col_err = (0..size)
            .map(|i| (self.prep[(i, 0)] - if i < self.m { amp } else { 0.0 }).norm())
            .fold(0.0, f64::max);
        if col_err > 1e-12 {
            return Err(Error::Consistency(format!(
                "first column of B is off by {col_err:.3e}"
            )));
        }
        Ok(())
    }
}

/// Runs the algebraic pipeline for `f(U)` with `U^m = tau I`.
pub fn synthesize(
    u: &ComplexMatrix,
    f: &FunctionSpec,
    m: usize,
    tol: f64,
) -> Result<SynthesisBundle> {
    let tau = scalar_power_check(u, m, tol)?
        .ok_or_else(|| Error::Precondition(format!("U^{m} is not a scalar matrix")))?;
    SynthesisBundle::from_coefficients(interp_coefficients(f, m, tau)?)
}
