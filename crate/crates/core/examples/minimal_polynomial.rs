// Minimal polynomials and scalar powers of a few small unitaries.
//
// ```bash
// cargo run --example minimal_polynomial
// ```

use num_complex::Complex64;
use qfunc::matcore::{
    format_complex, minimal_polynomial, smallest_scalar_power, ComplexMatrix, DEFAULT_TOL,
};

pub fn run() -> qfunc::Result<()> {
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let cases = [
        ("F_3", ComplexMatrix::dft(3)),
        ("F_2", ComplexMatrix::dft(2)),
        ("diag(1, i)", ComplexMatrix::from_diagonal(&[one, i])),
        ("I_4", ComplexMatrix::identity(4)),
    ];
    for (name, u) in &cases {
        let p = minimal_polynomial(u, DEFAULT_TOL)?;
        match smallest_scalar_power(u, 64, DEFAULT_TOL)? {
            Some((m, tau)) => println!(
                "{name:>10}: {p}   (U^{m} = {} I)",
                format_complex(tau, 1e-9)
            ),
            None => println!("{name:>10}: {p}   (no small scalar power)"),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
