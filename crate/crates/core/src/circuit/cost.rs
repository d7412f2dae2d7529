use serde::Serialize;

use crate::funcsynth::ancilla_count;

/// Elementary gates charged for one controlled single-qubit operation
/// inside `Lambda_1(U)`, via the 14-gate Toffoli bound.
pub const CONTROLLED_GATE_COST: u64 = 14;

/// Elementary gates charged per two-level factor when synthesizing `B`,
/// `M` and `B^dagger` on `mu` qubits (Gray-code routing plus a
/// multi-controlled single-qubit gate).
pub const SYNTHESIS_GATES_PER_FACTOR: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub k: u64,
    pub m: u64,
    pub mu: u64,
    /// `14 (2^mu - 1) K`: serial controlled copies of `U` for `A`.
    pub bound_a: u64,
    /// `3 c_syn mu 4^mu` for `B`, `M` and `B^dagger`.
    pub bound_small: u64,
    /// `2 bound_a + bound_small`.
    pub total_bound: u64,
    pub c_syn: u64,
}

pub fn cost_estimate(k: u64, m: u64) -> CostReport {
    assert!(k >= 1 && m >= 1, "K and m must be positive");
    let mu = ancilla_count(m as usize) as u64;
    let bound_a = CONTROLLED_GATE_COST * ((1u64 << mu) - 1) * k;
    let bound_small = 3 * SYNTHESIS_GATES_PER_FACTOR * mu * (1u64 << (2 * mu));
    CostReport {
        k,
        m,
        mu,
        bound_a,
        bound_small,
        total_bound: 2 * bound_a + bound_small,
        c_syn: SYNTHESIS_GATES_PER_FACTOR,
    }
}

/// CSV table with header `m,mu,bound_A,bound_small,total_bound`.
pub fn cost_table(k: u64, ms: impl IntoIterator<Item = u64>) -> String {
    let mut out = String::from("m,mu,bound_A,bound_small,total_bound\n");
    for m in ms {
        let r = cost_estimate(k, m);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.m, r.mu, r.bound_a, r.bound_small, r.total_bound
        ));
    }
    out
}
