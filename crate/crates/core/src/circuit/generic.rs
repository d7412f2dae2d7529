use super::gate::{Control, Gate};
use super::sim::Circuit;
use crate::error::{Error, Result};
use crate::funcsynth::SynthesisBundle;
use crate::matcore::{scalar_power_check, ComplexMatrix, DEFAULT_TOL};

/// Number of qubits `n` with `2^n = dim`.
pub fn qubit_count(u: &ComplexMatrix) -> Result<usize> {
    let dim = u.dim();
    if !dim.is_power_of_two() {
        return Err(Error::Dimension(format!(
            "dimension {dim} is not a power of two"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

fn controlled_powers(u: &ComplexMatrix, mu: usize, n: usize) -> Result<Vec<Gate>> {
    let system: Vec<usize> = (mu..mu + n).collect();
    let mut power = u.clone();
    let mut gates = Vec::with_capacity(mu);
    for eta in 0..mu {
        if eta > 0 {
            power = &power * &power;
        }
        // Ancilla bit eta (weight 2^eta) lives on qubit mu-1-eta.
        gates.push(Gate::controlled(
            vec![Control::on(mu - 1 - eta)],
            system.clone(),
            power.clone(),
        )?);
    }
    Ok(gates)
}

/// `A = diag(U^0, U^1, .., U^{2^mu - 1})` on `mu` ancillas followed by the
/// system register.
pub fn controlled_power_block(u: &ComplexMatrix, mu: usize) -> Result<Circuit> {
    let n = qubit_count(u)?;
    let mut c = Circuit::new(mu + n);
    for g in controlled_powers(u, mu, n)? {
        c.push(g)?;
    }
    Ok(c)
}

/// Gate index ranges of the five stages of [`assemble_generic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericLayout {
    pub mu: usize,
}

impl GenericLayout {
    /// Gates up to and including the preparation `B`.
    pub fn after_prep(&self) -> usize {
        1
    }

    /// Gates up to and including the controlled powers `A`.
    pub fn after_powers(&self) -> usize {
        1 + self.mu
    }

    /// Gates up to and including `M`.
    pub fn after_mixer(&self) -> usize {
        2 + self.mu
    }

    /// Gates up to and including `A^dagger`.
    pub fn after_unpowers(&self) -> usize {
        2 + 2 * self.mu
    }

    pub fn total(&self) -> usize {
        3 + 2 * self.mu
    }
}

/// Builds `B^dagger A^dagger M A B` acting on `|0> (x) |psi>`.
///
/// Ancillas are qubits `0..mu`; `A^dagger` is applied as controlled
/// `U^{-2^eta}` gates in reverse order.
pub fn assemble_generic(bundle: &SynthesisBundle, u: &ComplexMatrix) -> Result<Circuit> {
    bundle.check_consistency()?;
    let tau = scalar_power_check(u, bundle.m, DEFAULT_TOL)?
        .ok_or_else(|| Error::Consistency(format!("U^{} is not scalar", bundle.m)))?;
    if (tau - bundle.tau).norm() > 1e-8 {
        return Err(Error::Consistency(format!(
            "U^{} = {tau} I but bundle has tau = {}",
            bundle.m, bundle.tau
        )));
    }
    let n = qubit_count(u)?;
    let mu = bundle.mu;
    let ancillas: Vec<usize> = (0..mu).collect();
    let mut c = Circuit::new(mu + n);
    c.push(Gate::composite(ancillas.clone(), bundle.prep.clone())?)?;
    for g in controlled_powers(u, mu, n)? {
        c.push(g)?;
    }
    c.push(Gate::composite(ancillas.clone(), bundle.mixer.clone())?)?;
    for g in controlled_powers(&u.adjoint(), mu, n)?.into_iter().rev() {
        c.push(g)?;
    }
    c.push(Gate::composite(ancillas, bundle.prep.adjoint())?)?;
    Ok(c)
}
