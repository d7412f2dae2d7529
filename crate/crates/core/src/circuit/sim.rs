use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize};

use super::gate::{Control, Gate};
use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// Largest width [`Circuit::to_matrix`] will materialize.
pub const MAX_DENSE_WIDTH: usize = 12;

/// Ordered gate list on `width` qubits.
///
/// Basis convention: index `b = sum_q bit_q * 2^(width-1-q)`, so qubit 0 is
/// the most significant bit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends all gates of `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.width != self.width {
            return Err(Error::Dimension(format!(
                "cannot append width {} circuit to width {}",
                other.width, self.width
            )));
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// The first `k` gates as a circuit of their own.
    pub fn prefix(&self, k: usize) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates[..k.min(self.gates.len())].to_vec(),
        }
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Applies the gates in order to a unit-norm state.
    pub fn simulate(&self, state: &[Complex64]) -> Result<Vec<Complex64>> {
        if state.len() != 1 << self.width {
            return Err(Error::Dimension(format!(
                "state of length {} for width {}",
                state.len(),
                self.width
            )));
        }
        let norm: f64 = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Precondition(format!("state norm {norm} is not 1")));
        }
        let mut out = state.to_vec();
        for gate in &self.gates {
            apply_gate(&mut out, self.width, gate);
        }
        Ok(out)
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.width > MAX_DENSE_WIDTH {
            return Err(Error::Resource(format!(
                "width {} exceeds dense limit {MAX_DENSE_WIDTH}",
                self.width
            )));
        }
        let dim = 1usize << self.width;
        let mut m = ComplexMatrix::zeros(dim);
        let mut basis = vec![Complex64::new(0.0, 0.0); dim];
        for j in 0..dim {
            basis.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
            basis[j] = Complex64::new(1.0, 0.0);
            let col = self.simulate(&basis)?;
            for (i, z) in col.into_iter().enumerate() {
                m[(i, j)] = z;
            }
        }
        Ok(m)
    }
}

impl<'de> Deserialize<'de> for Circuit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct CircuitFile {
            width: usize,
            gates: Vec<Gate>,
        }
        let file = CircuitFile::deserialize(d)?;
        let mut c = Circuit::new(file.width);
        for g in file.gates {
            c.push(g).map_err(D::Error::custom)?;
        }
        Ok(c)
    }
}

/// [`Circuit::to_matrix`] as a free function.
pub fn circuit_to_matrix(c: &Circuit) -> Result<ComplexMatrix> {
    c.to_matrix()
}

/// [`Circuit::simulate`] as a free function.
pub fn simulate(c: &Circuit, state: &[Complex64]) -> Result<Vec<Complex64>> {
    c.simulate(state)
}

fn bit(width: usize, q: usize) -> usize {
    1 << (width - 1 - q)
}

pub(crate) fn apply_gate(state: &mut [Complex64], width: usize, gate: &Gate) {
    match gate {
        Gate::Single { qubit, matrix } => {
            let t = bit(width, *qubit);
            let (a, b, c, d) = (
                matrix[(0, 0)],
                matrix[(0, 1)],
                matrix[(1, 0)],
                matrix[(1, 1)],
            );
            for i in 0..state.len() {
                if i & t == 0 {
                    let (x, y) = (state[i], state[i | t]);
                    state[i] = a * x + b * y;
                    state[i | t] = c * x + d * y;
                }
            }
        }
        Gate::Cnot { control, target } => {
            let (c, t) = (bit(width, *control), bit(width, *target));
            for i in 0..state.len() {
                if i & c != 0 && i & t == 0 {
                    state.swap(i, i | t);
                }
            }
        }
        Gate::CPhase {
            control,
            target,
            theta,
        } => {
            let mask = bit(width, *control) | bit(width, *target);
            let phase = Complex64::from_polar(1.0, *theta);
            for (i, z) in state.iter_mut().enumerate() {
                if i & mask == mask {
                    *z *= phase;
                }
            }
        }
        Gate::Swap { a, b } => {
            let (ba, bb) = (bit(width, *a), bit(width, *b));
            for i in 0..state.len() {
                if i & ba != 0 && i & bb == 0 {
                    state.swap(i, i ^ ba ^ bb);
                }
            }
        }
        Gate::Composite { qubits, matrix } => apply_dense(state, width, &[], qubits, matrix),
        Gate::ControlledComposite {
            controls,
            qubits,
            matrix,
        } => apply_dense(state, width, controls, qubits, matrix),
    }
}

fn apply_dense(
    state: &mut [Complex64],
    width: usize,
    controls: &[Control],
    qubits: &[usize],
    matrix: &ComplexMatrix,
) {
    let k = qubits.len();
    let sub = 1usize << k;
    let target_mask: usize = qubits.iter().map(|&q| bit(width, q)).sum();
    let control_mask: usize = controls.iter().map(|c| bit(width, c.qubit)).sum();
    let control_value: usize = controls
        .iter()
        .filter(|c| c.value)
        .map(|c| bit(width, c.qubit))
        .sum();
    // offsets[s] = full-register bits of sub-register index s
    let offsets: Vec<usize> = (0..sub)
        .map(|s| {
            (0..k)
                .filter(|j| s & (1 << (k - 1 - j)) != 0)
                .map(|j| bit(width, qubits[j]))
                .sum()
        })
        .collect();
    let mut gathered = vec![Complex64::new(0.0, 0.0); sub];
    for base in 0..state.len() {
        if base & target_mask != 0 || base & control_mask != control_value {
            continue;
        }
        for (g, off) in gathered.iter_mut().zip(&offsets) {
            *g = state[base | off];
        }
        for (r, off) in offsets.iter().enumerate() {
            state[base | off] = matrix
                .row(r)
                .iter()
                .zip(&gathered)
                .map(|(a, b)| a * b)
                .sum();
        }
    }
}
