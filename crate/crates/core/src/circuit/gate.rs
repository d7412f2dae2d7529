use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// Embedded gate matrices must be unitary to this tolerance.
pub const GATE_UNITARY_TOL: f64 = 1e-10;

/// A control qubit and the bit value it must hold for the gate to fire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Control {
    pub qubit: usize,
    pub value: bool,
}

impl Control {
    pub fn on(qubit: usize) -> Self {
        Control { qubit, value: true }
    }

    pub fn off(qubit: usize) -> Self {
        Control {
            qubit,
            value: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    Single {
        qubit: usize,
        matrix: ComplexMatrix,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    /// `diag(1, 1, 1, e^{i theta})` on (control, target).
    CPhase {
        control: usize,
        target: usize,
        theta: f64,
    },
    Swap {
        a: usize,
        b: usize,
    },
    /// Dense unitary on an ordered qubit list; `qubits[0]` is the most
    /// significant bit of the matrix index. An empty list applies a global
    /// phase given by a 1x1 matrix.
    Composite {
        qubits: Vec<usize>,
        matrix: ComplexMatrix,
    },
    ControlledComposite {
        controls: Vec<Control>,
        qubits: Vec<usize>,
        matrix: ComplexMatrix,
    },
}

pub fn hadamard_matrix() -> ComplexMatrix {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    ComplexMatrix::from_fn(2, |i, j| if i == 1 && j == 1 { -h } else { h })
}

pub fn pauli_x_matrix() -> ComplexMatrix {
    ComplexMatrix::from_fn(2, |i, j| {
        Complex64::new(if i != j { 1.0 } else { 0.0 }, 0.0)
    })
}

fn check_matrix(matrix: &ComplexMatrix, qubits: usize) -> Result<()> {
    if matrix.dim() != 1 << qubits {
        return Err(Error::Dimension(format!(
            "{}x{} matrix on {qubits} qubits",
            matrix.dim(),
            matrix.dim()
        )));
    }
    let residual = matrix.unitarity_residual();
    if residual > GATE_UNITARY_TOL {
        return Err(Error::Precondition(format!(
            "gate matrix is not unitary (residual {residual:.3e})"
        )));
    }
    Ok(())
}

impl Gate {
    pub fn h(qubit: usize) -> Self {
        Gate::Single {
            qubit,
            matrix: hadamard_matrix(),
        }
    }

    pub fn x(qubit: usize) -> Self {
        Gate::Single {
            qubit,
            matrix: pauli_x_matrix(),
        }
    }

    pub fn single(qubit: usize, matrix: ComplexMatrix) -> Result<Self> {
        check_matrix(&matrix, 1)?;
        Ok(Gate::Single { qubit, matrix })
    }

    pub fn composite(qubits: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        check_matrix(&matrix, qubits.len())?;
        Ok(Gate::Composite { qubits, matrix })
    }

    pub fn controlled(
        controls: Vec<Control>,
        qubits: Vec<usize>,
        matrix: ComplexMatrix,
    ) -> Result<Self> {
        check_matrix(&matrix, qubits.len())?;
        Ok(Gate::ControlledComposite {
            controls,
            qubits,
            matrix,
        })
    }

    /// Every qubit the gate touches, controls included.
    pub fn support(&self) -> Vec<usize> {
        match self {
            Gate::Single { qubit, .. } => vec![*qubit],
            Gate::Cnot { control, target }
            | Gate::CPhase {
                control, target, ..
            } => {
                vec![*control, *target]
            }
            Gate::Swap { a, b } => vec![*a, *b],
            Gate::Composite { qubits, .. } => qubits.clone(),
            Gate::ControlledComposite {
                controls, qubits, ..
            } => controls
                .iter()
                .map(|c| c.qubit)
                .chain(qubits.iter().copied())
                .collect(),
        }
    }

    pub fn inverse(&self) -> Gate {
        match self {
            Gate::Single { qubit, matrix } => Gate::Single {
                qubit: *qubit,
                matrix: matrix.adjoint(),
            },
            Gate::Cnot { .. } | Gate::Swap { .. } => self.clone(),
            Gate::CPhase {
                control,
                target,
                theta,
            } => Gate::CPhase {
                control: *control,
                target: *target,
                theta: -theta,
            },
            Gate::Composite { qubits, matrix } => Gate::Composite {
                qubits: qubits.clone(),
                matrix: matrix.adjoint(),
            },
            Gate::ControlledComposite {
                controls,
                qubits,
                matrix,
            } => Gate::ControlledComposite {
                controls: controls.clone(),
                qubits: qubits.clone(),
                matrix: matrix.adjoint(),
            },
        }
    }

    pub(crate) fn validate(&self, width: usize) -> Result<()> {
        let support = self.support();
        for (k, &q) in support.iter().enumerate() {
            if q >= width {
                return Err(Error::Dimension(format!(
                    "qubit {q} outside circuit of width {width}"
                )));
            }
            if support[..k].contains(&q) {
                return Err(Error::Dimension(format!(
                    "qubit {q} used twice in one gate"
                )));
            }
        }
        match self {
            Gate::Single { matrix, .. } => check_matrix(matrix, 1),
            Gate::Composite { qubits, matrix }
            | Gate::ControlledComposite { qubits, matrix, .. } => {
                check_matrix(matrix, qubits.len())
            }
            Gate::CPhase { theta, .. } if !theta.is_finite() => {
                Err(Error::Parse("phase angle must be finite".into()))
            }
            _ => Ok(()),
        }
    }
}

// Stable on-disk form; `kind` selects the variant.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GateFile {
    H {
        qubit: usize,
    },
    X {
        qubit: usize,
    },
    Single {
        qubit: usize,
        matrix: ComplexMatrix,
    },
    Cnot {
        control: usize,
        target: usize,
    },
    Cphase {
        control: usize,
        target: usize,
        theta: f64,
    },
    Swap {
        a: usize,
        b: usize,
    },
    Composite {
        qubits: Vec<usize>,
        matrix: ComplexMatrix,
    },
    Ccomposite {
        controls: Vec<Control>,
        qubits: Vec<usize>,
        matrix: ComplexMatrix,
    },
}

impl Serialize for Gate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let file = match self.clone() {
            Gate::Single { qubit, matrix } if matrix == hadamard_matrix() => GateFile::H { qubit },
            Gate::Single { qubit, matrix } if matrix == pauli_x_matrix() => GateFile::X { qubit },
            Gate::Single { qubit, matrix } => GateFile::Single { qubit, matrix },
            Gate::Cnot { control, target } => GateFile::Cnot { control, target },
            Gate::CPhase {
                control,
                target,
                theta,
            } => GateFile::Cphase {
                control,
                target,
                theta,
            },
            Gate::Swap { a, b } => GateFile::Swap { a, b },
            Gate::Composite { qubits, matrix } => GateFile::Composite { qubits, matrix },
            Gate::ControlledComposite {
                controls,
                qubits,
                matrix,
            } => GateFile::Ccomposite {
                controls,
                qubits,
                matrix,
            },
        };
        file.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(match GateFile::deserialize(d)? {
            GateFile::H { qubit } => Gate::h(qubit),
            GateFile::X { qubit } => Gate::x(qubit),
            GateFile::Single { qubit, matrix } => Gate::Single { qubit, matrix },
            GateFile::Cnot { control, target } => Gate::Cnot { control, target },
            GateFile::Cphase {
                control,
                target,
                theta,
            } => Gate::CPhase {
                control,
                target,
                theta,
            },
            GateFile::Swap { a, b } => Gate::Swap { a, b },
            GateFile::Composite { qubits, matrix } => Gate::Composite { qubits, matrix },
            GateFile::Ccomposite {
                controls,
                qubits,
                matrix,
            } => Gate::ControlledComposite {
                controls,
                qubits,
                matrix,
            },
        })
    }
}
