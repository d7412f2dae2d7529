//! Gate-level circuits: the statevector simulator, the QFT, the controlled
//! power block, the generic `f(U)` circuit, two-level synthesis and the
//! gate-count model.

mod cost;
mod gate;
mod generic;
mod qft;
mod sim;
mod two_level;

pub use cost::{
    cost_estimate, cost_table, CostReport, CONTROLLED_GATE_COST, SYNTHESIS_GATES_PER_FACTOR,
};
pub use gate::{hadamard_matrix, pauli_x_matrix, Control, Gate, GATE_UNITARY_TOL};
pub use generic::{assemble_generic, controlled_power_block, qubit_count, GenericLayout};
pub use qft::{qft_circuit, qft_gate_count};
pub use sim::{circuit_to_matrix, simulate, Circuit, MAX_DENSE_WIDTH};
pub use two_level::{reassemble, two_level_decompose, two_level_gates, unitary_gates, TwoLevel};
