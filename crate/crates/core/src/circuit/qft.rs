use std::f64::consts::PI;

use super::gate::Gate;
use super::sim::{Circuit, MAX_DENSE_WIDTH};
use crate::error::{Error, Result};

/// Circuit for `F_n = 2^{-n/2} (exp(-2 pi i k l / 2^n))`, including the
/// final bit-reversal swaps.
///
/// Uses `n` Hadamards, `n(n-1)/2` controlled phases and `n/2` swaps.
pub fn qft_circuit(n: usize) -> Result<Circuit> {
    if n == 0 || n > MAX_DENSE_WIDTH {
        return Err(Error::Resource(format!(
            "QFT size {n} outside 1..={MAX_DENSE_WIDTH}"
        )));
    }
    let mut c = Circuit::new(n);
    for j in 0..n {
        c.push(Gate::h(j))?;
        for k in j + 1..n {
            c.push(Gate::CPhase {
                control: k,
                target: j,
                theta: -2.0 * PI / (1u64 << (k - j + 1)) as f64,
            })?;
        }
    }
    for i in 0..n / 2 {
        c.push(Gate::Swap { a: i, b: n - 1 - i })?;
    }
    Ok(c)
}

/// `n + n(n-1)/2 + floor(n/2)`.
pub fn qft_gate_count(n: usize) -> usize {
    n + n * (n - 1) / 2 + n / 2
}
