// Decomposes a unitary into two-level factors and then into gates on
// qubits via Gray-code routing.

use qfunc::circuit::{reassemble, two_level_decompose, unitary_gates, Circuit};
use qfunc::funcsynth::build_b;

pub fn run() -> qfunc::Result<()> {
    let b = build_b(5, 3)?;
    let factors = two_level_decompose(&b)?;
    println!("B for m = 5: {} two-level factors", factors.len());
    println!(
        "reassembly error {:.2e}",
        reassemble(&factors, 8).max_diff(&b)
    );

    let mut circuit = Circuit::new(3);
    for g in unitary_gates(&b, &[0, 1, 2])? {
        circuit.push(g)?;
    }
    println!(
        "{} gates, |circuit - B| = {:.2e}",
        circuit.len(),
        circuit.to_matrix()?.max_diff(&b)
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
