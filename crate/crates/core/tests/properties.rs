mod common;

use common::{
    c, max_dev, random_unimodular_spec, random_unitary, unit_phase, unitary_with_scalar_power,
};
use proptest::prelude::*;
use qfunc::circuit::{
    assemble_generic, cost_estimate, qft_circuit, qft_gate_count, reassemble, two_level_decompose,
    Circuit, Control, Gate,
};
use qfunc::cli::random_states;
use qfunc::funcsynth::{
    beta_matrix, check_unitarity_lemma, companion_matrix, interp_coefficients, synthesize,
    twisted_circulant, SynthesisBundle,
};
use qfunc::matcore::{
    eigendecompose_unitary, minimal_polynomial, scalar_power_check, spectral_function_oracle,
    ComplexMatrix, Polynomial,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eigendecomposition_reassembles(seed in any::<u64>(), dim in prop::sample::select(vec![1usize, 2, 3, 5, 8, 16, 33, 64])) {
        let u = random_unitary(dim, &mut rng(seed));
        let s = eigendecompose_unitary(&u, 1e-10).unwrap();
        prop_assert!(s.eigenvectors.unitarity_residual() < 1e-10);
        prop_assert!(s.reassemble(&s.eigenvalues).max_diff(&u) <= 1e-9);
        prop_assert!(s.eigenvalues.iter().all(|z| (z.norm() - 1.0).abs() < 1e-10));
    }

    #[test]
    fn minimal_polynomial_annihilates(seed in any::<u64>(), dim in 2usize..24, m in 1usize..7) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let u = unitary_with_scalar_power(dim, m, tau, &mut r);
        let p = minimal_polynomial(&u, 1e-10).unwrap();
        prop_assert!(p.eval_matrix(&u).max_abs() <= 1e-8);
    }

    #[test]
    fn scalar_power_iff_divides(seed in any::<u64>(), dim in 2usize..12, m in 1usize..6, probe in 1usize..8) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let u = unitary_with_scalar_power(dim, m, tau, &mut r);
        let minimal = minimal_polynomial(&u, 1e-10).unwrap();
        let w = u.pow(probe as u64);
        let candidate = w[(0, 0)];
        let (_, rem) = Polynomial::binomial(probe, candidate).div_rem(&minimal).unwrap();
        let divides = rem.max_abs() <= 1e-8;
        let found = scalar_power_check(&u, probe, 1e-10).unwrap();
        prop_assert_eq!(found.is_some(), divides);
        if let Some(t) = found {
            prop_assert!((t.norm() - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn oracle_powers_match_repeated_squaring(seed in any::<u64>(), dim in 1usize..20, k in 0u32..=8) {
        let u = random_unitary(dim, &mut rng(seed));
        let f = move |z: num_complex::Complex64| Ok(z.powu(k));
        let via_oracle = spectral_function_oracle(&u, &f, 1e-10).unwrap();
        prop_assert!(via_oracle.max_diff(&u.pow(k as u64)) <= 1e-9);
    }

    #[test]
    fn linear_combination_equals_oracle(seed in any::<u64>(), n in 1usize..=6, m in 1usize..=8) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let u = unitary_with_scalar_power(1 << n, m, tau, &mut r);
        let f = random_unimodular_spec(m, tau, &mut r);
        let coeffs = interp_coefficients(&f, m, tau).unwrap();
        let oracle = spectral_function_oracle(&u, &f, 1e-10).unwrap();
        prop_assert!(coeffs.evaluate_matrix(&u).max_diff(&oracle) <= 1e-9);
    }

    #[test]
    fn reconstruction_on_roots(seed in any::<u64>(), m in 1usize..=16) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let f = random_unimodular_spec(m, tau, &mut r);
        let coeffs = interp_coefficients(&f, m, tau).unwrap();
        if let qfunc::funcsynth::FunctionSpec::Samples { values, .. } = &f {
            for (root, v) in qfunc::funcsynth::binomial_roots(m, tau).iter().zip(values) {
                prop_assert!((coeffs.evaluate(*root) - v).norm() <= 1e-9);
            }
        }
    }

    #[test]
    fn beta_matrix_is_twisted_circulant(seed in any::<u64>(), m in 1usize..=8) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let alpha: Vec<_> = (0..m).map(|_| c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))).collect();
        let p = companion_matrix(&Polynomial::binomial(m, tau)).unwrap();
        let beta = beta_matrix(&alpha, &p).unwrap();
        let closed = twisted_circulant(&qfunc::funcsynth::CoefficientVector { alpha, tau });
        prop_assert!(beta.max_diff(&closed) <= 1e-12);
    }

    #[test]
    fn row_products_match_explicit_check(seed in any::<u64>(), m in 2usize..=8, unimodular in any::<bool>()) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let coeffs = if unimodular {
            interp_coefficients(&random_unimodular_spec(m, tau, &mut r), m, tau).unwrap()
        } else {
            qfunc::funcsynth::CoefficientVector {
                alpha: (0..m).map(|_| c(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))).collect(),
                tau,
            }
        };
        let lemma = check_unitarity_lemma(&coeffs).max_deviation();
        let explicit = twisted_circulant(&coeffs).unitarity_residual();
        prop_assert!((lemma - explicit).abs() <= 1e-12);
        prop_assert_eq!(lemma <= 1e-9, explicit <= 1e-9);
    }

    #[test]
    fn generic_circuit_realizes_oracle(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=8) {
        let mut r = rng(seed);
        let tau = unit_phase(&mut r);
        let u = unitary_with_scalar_power(1 << n, m, tau, &mut r);
        let f = random_unimodular_spec(m, tau, &mut r);
        let bundle = synthesize(&u, &f, m, 1e-10).unwrap();
        let circuit = assemble_generic(&bundle, &u).unwrap();
        let oracle = spectral_function_oracle(&u, &f, 1e-10).unwrap();
        let dim = 1 << n;
        for psi in random_states(dim, 4, seed) {
            let mut input = vec![c(0.0, 0.0); 1 << circuit.width()];
            input[..dim].copy_from_slice(&psi);
            let out = circuit.simulate(&input).unwrap();
            let leak = out[dim..].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            prop_assert!(leak <= 1e-8);
            prop_assert!(max_dev(&out[..dim], &oracle.apply(&psi)) <= 1e-8);
        }
    }

    #[test]
    fn circuit_then_inverse_is_identity(seed in any::<u64>(), width in 1usize..=6, len in 0usize..30) {
        let mut r = rng(seed);
        let mut circ = Circuit::new(width);
        for _ in 0..len {
            let q = r.random_range(0..width);
            let other = (q + 1 + r.random_range(0..width.max(2) - 1)) % width;
            let gate = match r.random_range(0..6) {
                0 => Gate::h(q),
                1 => Gate::single(q, random_unitary(2, &mut r)).unwrap(),
                2 if width > 1 => Gate::Cnot { control: q, target: other },
                3 if width > 1 => Gate::CPhase { control: q, target: other, theta: r.random_range(-3.0..3.0) },
                4 if width > 1 => Gate::Swap { a: q, b: other },
                5 if width > 1 => Gate::controlled(vec![Control { qubit: other, value: r.random() }], vec![q], random_unitary(2, &mut r)).unwrap(),
                _ => Gate::x(q),
            };
            circ.push(gate).unwrap();
        }
        let both = {
            let mut b = circ.clone();
            b.append(&circ.inverse()).unwrap();
            b
        };
        for psi in random_states(1 << width, 3, seed) {
            let mid = circ.simulate(&psi).unwrap();
            let norm: f64 = mid.iter().map(|z| z.norm_sqr()).sum();
            prop_assert!((norm - 1.0).abs() <= 1e-9);
            prop_assert!(max_dev(&both.simulate(&psi).unwrap(), &psi) <= 1e-9);
        }
    }

    #[test]
    fn matrix_json_round_trip(seed in any::<u64>(), dim in 1usize..6) {
        let u = random_unitary(dim, &mut rng(seed));
        let text = serde_json::to_string(&u).unwrap();
        prop_assert_eq!(serde_json::from_str::<ComplexMatrix>(&text).unwrap(), u);
    }

    #[test]
    fn cost_monotone(k in 1u64..1000, dk in 0u64..100, m in 1u64..64, dm in 0u64..10) {
        let base = cost_estimate(k, m);
        prop_assert!(cost_estimate(k + dk, m).total_bound >= base.total_bound);
        prop_assert!(cost_estimate(k, m + dm).total_bound >= base.total_bound);
        prop_assert!(cost_estimate(k, m + dm).bound_a >= base.bound_a);
    }
}

#[test]
fn mixer_unitary_for_200_unimodular_specs() {
    let mut r = rng(200);
    for _ in 0..200 {
        let m = r.random_range(2..=8);
        let tau = unit_phase(&mut r);
        let f = random_unimodular_spec(m, tau, &mut r);
        let bundle =
            SynthesisBundle::from_coefficients(interp_coefficients(&f, m, tau).unwrap()).unwrap();
        assert!(bundle.mixer.unitarity_residual() <= 1e-9);
    }
}

#[test]
fn two_level_reassembles_random_unitaries() {
    let mut r = rng(50);
    for dim in [2, 4, 8, 16] {
        for _ in 0..50 {
            let w = random_unitary(dim, &mut r);
            let factors = two_level_decompose(&w).unwrap();
            assert!(factors.len() <= dim * (dim - 1) / 2);
            assert!(reassemble(&factors, dim).max_diff(&w) <= 1e-9);
        }
    }
}

#[test]
fn qft_gate_counts_all_sizes() {
    for n in 1..=12 {
        assert_eq!(qft_circuit(n).unwrap().len(), n + n * (n - 1) / 2 + n / 2);
        assert_eq!(qft_gate_count(n), n + n * (n - 1) / 2 + n / 2);
    }
}

#[test]
fn b_builds_are_bit_identical() {
    for m in 1..=16 {
        let mu = qfunc::funcsynth::ancilla_count(m);
        assert_eq!(
            qfunc::funcsynth::build_b(m, mu).unwrap(),
            qfunc::funcsynth::build_b(m, mu).unwrap()
        );
    }
}
