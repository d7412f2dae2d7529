use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::circuit::{assemble_generic, cost_estimate, Circuit, CostReport, GenericLayout};
use crate::error::Result;
use crate::funcsynth::{check_unitarity_lemma, FunctionSpec, SynthesisBundle};
use crate::matcore::{spectral_function_oracle, ComplexMatrix};

/// Number of seeded random states checked per verification.
pub const RANDOM_STATES: usize = 20;

/// Basis states are added to the sample when the system dimension is at most this.
pub const BASIS_STATE_LIMIT: usize = 16;

/// Circuit unitarity is checked by dense materialization up to this width.
pub const DENSE_CHECK_WIDTH: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.to_string(),
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GateCounts {
    /// Gates in the assembled circuit, counting each dense block as one.
    pub composite_level: usize,
    pub cost: CostReport,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub mu: usize,
    pub tau: [f64; 2],
    pub alpha: Vec<[f64; 2]>,
    pub sampled_states: usize,
    pub checks: Vec<Check>,
    pub gate_counts: GateCounts,
    pub pass: bool,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<30} {:>10.3e}  (tol {:.0e})  {}\n",
                c.name,
                c.residual,
                c.tolerance,
                if c.pass { "PASS" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "verdict: {}\n",
            if self.pass { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// Seeded random unit vectors of length `dim`.
pub fn random_states(dim: usize, count: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let v: Vec<Complex64> = (0..dim)
                .map(|_| {
                    Complex64::new(
                        StandardNormal.sample(&mut rng),
                        StandardNormal.sample(&mut rng),
                    )
                })
                .collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            v.into_iter().map(|z| z / norm).collect()
        })
        .collect()
}

fn sample_states(dim: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut states = random_states(dim, RANDOM_STATES, seed);
    if dim <= BASIS_STATE_LIMIT {
        for k in 0..dim {
            let mut e = vec![Complex64::new(0.0, 0.0); dim];
            e[k] = Complex64::new(1.0, 0.0);
            states.push(e);
        }
    }
    states
}

fn max_dev(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `(1/sqrt m) sum_{i<m} |i> (x) vecs[i]`.
fn ancilla_superposition(vecs: &[Vec<Complex64>], mu: usize) -> Vec<Complex64> {
    let dim = vecs[0].len();
    let mut out = vec![Complex64::new(0.0, 0.0); dim << mu];
    let amp = 1.0 / (vecs.len() as f64).sqrt();
    for (i, v) in vecs.iter().enumerate() {
        for (o, z) in out[i * dim..(i + 1) * dim].iter_mut().zip(v) {
            *o = z * amp;
        }
    }
    out
}

/// Builds the generic circuit for `bundle` and checks it against the
/// spectral oracle for `f(U)`, including the intermediate ancilla states.
///
/// `k_gates` is the gate count of the circuit for `U` used by the cost
/// model; a dense input matrix counts as one gate.
pub fn verify(
    bundle: &SynthesisBundle,
    u: &ComplexMatrix,
    f: &FunctionSpec,
    k_gates: u64,
    tol: f64,
    seed: u64,
) -> Result<(Circuit, VerificationReport)> {
    let circuit = assemble_generic(bundle, u)?;
    let layout = GenericLayout { mu: bundle.mu };
    let dim = u.dim();
    let mu = bundle.mu;
    let v = spectral_function_oracle(u, f, tol)?;

    let mut checks = vec![
        Check::new("B unitarity", bundle.prep.unitarity_residual(), 1e-12),
        Check::new("C unitarity", bundle.c.unitarity_residual(), 1e-9),
        Check::new("M unitarity", bundle.mixer.unitarity_residual(), 1e-9),
        Check::new(
            "row inner products",
            check_unitarity_lemma(&bundle.coefficients).max_deviation(),
            1e-9,
        ),
        Check::new(
            "linear combination vs oracle",
            bundle.coefficients.evaluate_matrix(u).max_diff(&v),
            1e-9,
        ),
    ];
    if circuit.width() <= DENSE_CHECK_WIDTH {
        checks.push(Check::new(
            "circuit unitarity",
            circuit.to_matrix()?.unitarity_residual(),
            1e-9,
        ));
    }

    let prep = circuit.prefix(layout.after_prep());
    let powers = circuit.prefix(layout.after_powers());
    let mixed = circuit.prefix(layout.after_mixer());
    let powers_of_u: Vec<ComplexMatrix> = (0..bundle.m as u64).map(|k| u.pow(k)).collect();

    let (mut dev3, mut dev4, mut dev5, mut dev_out, mut leakage) = (0f64, 0f64, 0f64, 0f64, 0f64);
    let states = sample_states(dim, seed);
    for psi in &states {
        let mut input = vec![Complex64::new(0.0, 0.0); dim << mu];
        input[..dim].copy_from_slice(psi);

        let s3 = ancilla_superposition(&vec![psi.clone(); bundle.m], mu);
        dev3 = dev3.max(max_dev(&prep.simulate(&input)?, &s3));

        let ui_psi: Vec<Vec<Complex64>> = powers_of_u.iter().map(|p| p.apply(psi)).collect();
        dev4 = dev4.max(max_dev(
            &powers.simulate(&input)?,
            &ancilla_superposition(&ui_psi, mu),
        ));

        let v_psi = v.apply(psi);
        let ukv_psi: Vec<Vec<Complex64>> = powers_of_u.iter().map(|p| p.apply(&v_psi)).collect();
        dev5 = dev5.max(max_dev(
            &mixed.simulate(&input)?,
            &ancilla_superposition(&ukv_psi, mu),
        ));

        let out = circuit.simulate(&input)?;
        dev_out = dev_out.max(max_dev(&out[..dim], &v_psi));
        leakage = leakage.max(out[dim..].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt());
    }
    checks.push(Check::new("state after B", dev3, 1e-10));
    checks.push(Check::new("state after A", dev4, 1e-9));
    checks.push(Check::new("state after M", dev5, 1e-9));
    checks.push(Check::new("end-to-end vs oracle", dev_out, 1e-8));
    checks.push(Check::new("ancilla leakage", leakage, 1e-8));

    let pass = checks.iter().all(|c| c.pass);
    let report = VerificationReport {
        m: bundle.m,
        mu,
        tau: [bundle.tau.re, bundle.tau.im],
        alpha: bundle
            .coefficients
            .alpha
            .iter()
            .map(|z| [z.re, z.im])
            .collect(),
        sampled_states: states.len(),
        checks,
        gate_counts: GateCounts {
            composite_level: circuit.len(),
            cost: cost_estimate(k_gates.max(1), bundle.m as u64),
        },
        pass,
    };
    Ok((circuit, report))
}
