// Upper bounds on elementary gate counts for the generic circuit, given a
// gate count K for U itself.

use qfunc::circuit::{cost_estimate, cost_table, qft_gate_count};

pub fn run() -> qfunc::Result<()> {
    let n = 10;
    let k = qft_gate_count(n) as u64;
    println!("QFT on {n} qubits: K = {k}");
    print!("{}", cost_table(k, [2, 4, 8, 16, 32]));
    let r = cost_estimate(k, 4);
    println!(
        "F_{n}^x: A costs at most {}, total at most {}",
        r.bound_a, r.total_bound
    );
    Ok(())
}

fn main() {
    run().unwrap();
}
