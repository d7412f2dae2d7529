//! Fractional powers `F_n^x` of the unitary DFT through the generic circuit.
//!
//! `x = pi/2` gives `F_n` itself; the conventional fractional order is
//! `a = 2x / pi`.

use num_complex::Complex64;

use crate::circuit::{assemble_generic, qft_circuit, Circuit};
use crate::error::{Error, Result};
use crate::funcsynth::{extend_to_binomial, CoefficientVector, SynthesisBundle};
use crate::matcore::{ComplexMatrix, DEFAULT_TOL};

/// Largest system size accepted by [`frft_apply`]; the controlled powers are
/// dense `2^n x 2^n` blocks.
pub const MAX_FRFT_QUBITS: usize = 10;

/// System qubit count and angle of a fractional DFT.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrftParams {
    pub n: usize,
    pub x: f64,
}

/// Closed-form coefficients of `F^x = sum_i alpha_i(x) F^i` (`m = 4`, `tau = 1`).
pub fn frft_coefficients(x: f64) -> CoefficientVector {
    let i = Complex64::new(0.0, 1.0);
    let e = Complex64::from_polar(1.0, x);
    let (s, c) = x.sin_cos();
    CoefficientVector {
        alpha: vec![
            0.5 * (1.0 + e) * c,
            0.5 * (1.0 - i * e) * s,
            0.5 * (-1.0 + e) * c,
            0.5 * (-1.0 - i * e) * s,
        ],
        tau: Complex64::new(1.0, 0.0),
    }
}

/// The DFT matrix as realized by [`qft_circuit`].
pub fn dft_unitary(n: usize) -> Result<ComplexMatrix> {
    qft_circuit(n)?.to_matrix()
}

/// Generic circuit for `F_n^x` on 2 ancillas followed by `n` system qubits.
///
/// For `n < 3` the minimal polynomial of `F_n` is a proper divisor of
/// `x^4 - 1`; the same coefficients apply because `F_n^4 = I` still holds.
pub fn frft_circuit(params: FrftParams) -> Result<Circuit> {
    if params.n == 0 || params.n > MAX_FRFT_QUBITS {
        return Err(Error::Resource(format!(
            "FrFT size {} outside 1..={MAX_FRFT_QUBITS}",
            params.n
        )));
    }
    if !params.x.is_finite() {
        return Err(Error::Precondition("angle must be finite".into()));
    }
    let f = dft_unitary(params.n)?;
    if params.n < 3 {
        extend_to_binomial(&f, 4, DEFAULT_TOL)?;
    }
    let bundle = SynthesisBundle::from_coefficients(frft_coefficients(params.x))?;
    assemble_generic(&bundle, &f)
}

/// Applies `F_n^x` to `psi` by simulating the generic circuit on `|0> (x) psi`.
pub fn frft_apply(params: FrftParams, psi: &[Complex64]) -> Result<Vec<Complex64>> {
    let dim = 1usize << params.n;
    if psi.len() != dim {
        return Err(Error::Dimension(format!(
            "state of length {} for n = {}",
            psi.len(),
            params.n
        )));
    }
    let circuit = frft_circuit(params)?;
    let mut input = vec![Complex64::new(0.0, 0.0); 1 << circuit.width()];
    input[..dim].copy_from_slice(psi);
    let output = circuit.simulate(&input)?;
    let leakage = output[dim..]
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    if leakage > 1e-8 {
        return Err(Error::Numeric(format!(
            "ancilla register not returned to |0> (leakage {leakage:.3e})"
        )));
    }
    Ok(output[..dim].to_vec())
}

/// The `2^n x 2^n` matrix realized on the system register when the ancillas
/// start in `|0>`.
pub fn frft_matrix(params: FrftParams) -> Result<ComplexMatrix> {
    Ok(frft_circuit(params)?.to_matrix()?.top_left(1 << params.n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn assert_alpha(x: f64, expected: [f64; 4]) {
        let a = frft_coefficients(x);
        for (got, want) in a.alpha.iter().zip(expected) {
            assert!(
                (got - Complex64::new(want, 0.0)).norm() <= 1e-12,
                "x = {x}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn quarter_periods() {
        assert_alpha(0.0, [1.0, 0.0, 0.0, 0.0]);
        assert_alpha(PI / 2.0, [0.0, 1.0, 0.0, 0.0]);
        assert_alpha(PI, [0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn coefficients_sum_to_one() {
        for k in 0..50 {
            let x = -3.0 + 0.13 * k as f64;
            let s: Complex64 = frft_coefficients(x).alpha.iter().sum();
            assert!((s - 1.0).norm() <= 1e-12);
        }
    }

    #[test]
    fn periodic_in_two_pi() {
        for k in 0..20 {
            let x = 0.37 * k as f64;
            let a = frft_coefficients(x);
            let b = frft_coefficients(x + 2.0 * PI);
            for (p, q) in a.alpha.iter().zip(&b.alpha) {
                assert!((p - q).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_angle_is_identity() {
        let psi: Vec<Complex64> = (0..8)
            .map(|k| Complex64::from_polar(1.0 / 8f64.sqrt(), 0.4 * k as f64))
            .collect();
        let out = frft_apply(FrftParams { n: 3, x: 0.0 }, &psi).unwrap();
        for (a, b) in out.iter().zip(&psi) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn quarter_period_on_basis_zero() {
        let mut psi = vec![Complex64::new(0.0, 0.0); 8];
        psi[0] = Complex64::new(1.0, 0.0);
        let out = frft_apply(FrftParams { n: 3, x: PI / 2.0 }, &psi).unwrap();
        let amp = 8f64.sqrt().recip();
        assert!(out
            .iter()
            .all(|z| (z - Complex64::new(amp, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            frft_apply(FrftParams { n: 3, x: 0.1 }, &[Complex64::new(1.0, 0.0); 4]),
            Err(Error::Dimension(_))
        ));
        assert!(frft_circuit(FrftParams { n: 0, x: 0.1 }).is_err());
        assert!(frft_circuit(FrftParams { n: 3, x: f64::NAN }).is_err());
    }
}
