// F_2 has eigenvalues {1, -1, -i} only, so its minimal polynomial is a
// proper divisor of x^4 - 1. Appending the missing root gives a block
// matrix whose minimal polynomial is x^4 - 1.

use qfunc::funcsynth::extend_to_binomial;
use qfunc::matcore::{format_complex, minimal_polynomial, ComplexMatrix, DEFAULT_TOL};

pub fn run() -> qfunc::Result<()> {
    let f2 = ComplexMatrix::dft(2);
    let ext = extend_to_binomial(&f2, 4, DEFAULT_TOL)?;
    println!("minimal polynomial of F_2: {}", ext.minimal);
    println!("complement:                {}", ext.complement);
    let missing: Vec<String> = ext
        .missing_roots
        .iter()
        .map(|r| format_complex(*r, 1e-9))
        .collect();
    println!("missing roots: {}", missing.join(", "));

    let big = ext.auxiliary_block(&f2);
    println!(
        "U_A is {}x{} with minimal polynomial {}",
        big.dim(),
        big.dim(),
        minimal_polynomial(&big, DEFAULT_TOL)?
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
