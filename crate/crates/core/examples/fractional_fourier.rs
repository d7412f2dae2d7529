use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use qfunc::frft::{dft_unitary, frft_apply, frft_coefficients, frft_matrix, FrftParams};

pub fn run() -> qfunc::Result<()> {
    let n = 3;
    println!(
        "alpha(x) at x = 0.7: [{}]",
        frft_coefficients(0.7)
            .alpha
            .iter()
            .map(|a| format!("{a:.4}"))
            .collect::<Vec<_>>()
            .join(", ")
    );

    // x = pi/2 is the ordinary DFT, x = pi its square.
    let f = dft_unitary(n)?;
    for (x, k) in [(FRAC_PI_2, 1), (2.0 * FRAC_PI_2, 2)] {
        let w = frft_matrix(FrftParams { n, x })?;
        println!("x = {x:.4}: |F^x - F^{k}| = {:.2e}", w.max_diff(&f.pow(k)));
    }

    let mut delta = vec![Complex64::new(0.0, 0.0); 1 << n];
    delta[1] = Complex64::new(1.0, 0.0);
    for step in 0..=4 {
        let x = step as f64 * FRAC_PI_2 / 4.0;
        let out = frft_apply(FrftParams { n, x }, &delta)?;
        let probs: Vec<String> = out.iter().map(|z| format!("{:.3}", z.norm_sqr())).collect();
        println!("x = {x:.3}  |amp|^2 = [{}]", probs.join(", "));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
