// Evaluates f(U) two ways: through the eigendecomposition, and as the
// polynomial sum of alpha_i U^i.

use num_complex::Complex64;
use qfunc::funcsynth::{interp_coefficients, FunctionSpec};
use qfunc::matcore::{spectral_function_oracle, ComplexMatrix, DEFAULT_TOL};

pub fn run() -> qfunc::Result<()> {
    let u = ComplexMatrix::dft(3);
    let tau = Complex64::new(1.0, 0.0);
    for (label, f) in [
        ("sqrt", FunctionSpec::power(0.5)),
        ("conj", FunctionSpec::conjugate()),
        ("frft(0.3)", FunctionSpec::frft(0.3)),
    ] {
        let oracle = spectral_function_oracle(&u, &f, DEFAULT_TOL)?;
        let coeffs = interp_coefficients(&f, 4, tau)?;
        let poly = coeffs.evaluate_matrix(&u);
        println!(
            "{label:<10} |sum alpha_i U^i - f(U)| = {:.2e}",
            poly.max_diff(&oracle)
        );
    }
    Ok(())
}

fn main() {
    run().expect("spectral oracle example failed");
}
