//! Linear-combination synthesis of `f(U)`: interpolation coefficients, the
//! companion and coefficient matrices, the ancilla matrices `M` and `B`, and
//! the non-binomial and extension cases.

mod construct;
mod limits;
mod spec;

pub use construct::{
    ancilla_count, beta_matrix, build_b, build_m, check_unitarity_lemma, companion_matrix,
    interp_coefficients, synthesize, twisted_circulant, CoefficientVector, LemmaReport,
    SynthesisBundle, UNIMODULAR_TOL,
};
pub use limits::{extend_to_binomial, limitation_demo, Extension, LimitationReport};
pub use spec::{
    binomial_roots, frft_eigenvalue_map, principal_arg, FunctionSpec, NamedFunction, NODE_TOL,
};
