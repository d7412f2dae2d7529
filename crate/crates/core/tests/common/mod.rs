#![allow(dead_code)]

use num_complex::Complex64;
use qfunc::funcsynth::{binomial_roots, FunctionSpec};
use qfunc::matcore::ComplexMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn unit_phase(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(
        1.0,
        rng.random_range(-std::f64::consts::PI..std::f64::consts::PI),
    )
}

/// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v: Vec<Complex64> = (0..dim)
            .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        for _ in 0..2 {
            for q in &cols {
                let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                v.iter_mut().zip(q).for_each(|(x, y)| *x -= proj * y);
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    ComplexMatrix::from_fn(dim, |i, j| cols[j][i])
}

/// `Q diag(eigs) Q^dagger` with a random unitary `Q`.
pub fn unitary_with_spectrum(eigs: &[Complex64], rng: &mut impl Rng) -> ComplexMatrix {
    let q = random_unitary(eigs.len(), rng);
    &(&q * &ComplexMatrix::from_diagonal(eigs)) * &q.adjoint()
}

/// Random unitary of size `dim` whose `m`-th power is `tau I`; every root of
/// `x^m - tau` is used at least once when `dim >= m`.
pub fn unitary_with_scalar_power(
    dim: usize,
    m: usize,
    tau: Complex64,
    rng: &mut impl Rng,
) -> ComplexMatrix {
    let roots = binomial_roots(m, tau);
    let eigs: Vec<Complex64> = (0..dim)
        .map(|k| {
            if k < m {
                roots[k]
            } else {
                roots[rng.random_range(0..m)]
            }
        })
        .collect();
    unitary_with_spectrum(&eigs, rng)
}

pub fn random_unimodular_spec(m: usize, tau: Complex64, rng: &mut impl Rng) -> FunctionSpec {
    FunctionSpec::samples(m, tau, (0..m).map(|_| unit_phase(rng)).collect()).unwrap()
}

pub fn max_dev(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Explicit DFT definition, built entry by entry.
pub fn dft_definition(n: usize) -> ComplexMatrix {
    let size = 1usize << n;
    ComplexMatrix::from_fn(size, |k, l| {
        let angle = -2.0 * std::f64::consts::PI * (k * l) as f64 / size as f64;
        Complex64::from_polar(1.0 / (size as f64).sqrt(), angle)
    })
}

/// Solves the Vandermonde system `sum_i a_i r_k^i = v_k` by Gaussian
/// elimination with partial pivoting.
pub fn solve_vandermonde(roots: &[Complex64], values: &[Complex64]) -> Vec<Complex64> {
    let m = roots.len();
    let mut a: Vec<Vec<Complex64>> = roots
        .iter()
        .zip(values)
        .map(|(&r, &v)| {
            let mut row: Vec<Complex64> = (0..m).map(|i| r.powu(i as u32)).collect();
            row.push(v);
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .max_by(|&x, &y| a[x][col].norm().partial_cmp(&a[y][col].norm()).unwrap())
            .unwrap();
        a.swap(col, pivot);
        for r in 0..m {
            if r != col {
                let factor = a[r][col] / a[col][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= factor * p;
                }
            }
        }
    }
    (0..m).map(|i| a[i][m] / a[i][i]).collect()
}
