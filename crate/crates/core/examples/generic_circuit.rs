// Builds the B, A, M, A^dagger, B^dagger circuit for sqrt(F_3) and checks
// it against the spectral definition on a random input.

use num_complex::Complex64;
use qfunc::circuit::assemble_generic;
use qfunc::cli::random_states;
use qfunc::funcsynth::{synthesize, FunctionSpec};
use qfunc::matcore::{spectral_function_oracle, ComplexMatrix, DEFAULT_TOL};

pub fn run() -> qfunc::Result<()> {
    let u = ComplexMatrix::dft(3);
    let f = FunctionSpec::power(0.5);
    let bundle = synthesize(&u, &f, 4, DEFAULT_TOL)?;
    println!(
        "m = {}, mu = {}, alpha = [{}]",
        bundle.m,
        bundle.mu,
        bundle
            .coefficients
            .alpha
            .iter()
            .map(|a| format!("{a:.4}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "|M^dagger M - I| = {:.2e}",
        bundle.mixer.unitarity_residual()
    );

    let circuit = assemble_generic(&bundle, &u)?;
    println!("{} qubits, {} gates", circuit.width(), circuit.len());

    let psi = &random_states(8, 1, 3)[0];
    let mut input = vec![Complex64::new(0.0, 0.0); 1 << circuit.width()];
    input[..8].copy_from_slice(psi);
    let out = circuit.simulate(&input)?;
    let want = spectral_function_oracle(&u, &f, DEFAULT_TOL)?.apply(psi);
    let err = out[..8]
        .iter()
        .zip(&want)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let leak: f64 = out[8..].iter().map(|z| z.norm_sqr()).sum();
    println!(
        "output error {err:.2e}, ancilla leakage {:.2e}",
        leak.sqrt()
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
