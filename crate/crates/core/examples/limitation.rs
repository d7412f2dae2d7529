// When the minimal polynomial is not of the form x^m - tau, the block C
// built from `U^m = g(U)` has a first row of norm greater than one, so the
// mixer cannot be unitary.

use num_complex::Complex64;
use qfunc::funcsynth::limitation_demo;
use qfunc::matcore::{ComplexMatrix, DEFAULT_TOL};

pub fn run() -> qfunc::Result<()> {
    let d = ComplexMatrix::from_diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]);
    for (name, u) in [("diag(1, i)", d), ("F_2", ComplexMatrix::dft(2))] {
        let r = limitation_demo(&u, DEFAULT_TOL)?;
        println!("{name}: minimal {}, g(x) = {}", r.minimal, r.g);
        println!("  first row |.|^2 = {:.6}", r.first_row_norm_sq);
        println!("  |C^dagger C - I| = {:.3}", r.c.unitarity_residual());
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
