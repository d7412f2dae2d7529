use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matcore::SpectralFunction;

/// Distance within which a point is identified with an interpolation node.
pub const NODE_TOL: f64 = 1e-6;

/// Argument in `(-pi, pi]`; points within 1e-12 of the negative real axis
/// are placed on the `+pi` side so that `-1 - 0i` and `-1 + 0i` agree.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a <= -PI + 1e-12 {
        PI
    } else {
        a
    }
}

/// The `m` roots of `x^m - tau`, ordered `rho * omega^k` with `rho` the
/// principal root and `omega = exp(2 pi i / m)`.
pub fn binomial_roots(m: usize, tau: Complex64) -> Vec<Complex64> {
    let rho = Complex64::from_polar(
        tau.norm().powf(1.0 / m as f64),
        principal_arg(tau) / m as f64,
    );
    (0..m)
        .map(|k| rho * Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum NamedFunction {
    /// Fractional DFT power, defined on the fourth roots of unity.
    Frft {
        x: f64,
    },
    /// Principal branch `z^s`.
    Power {
        s: f64,
    },
    Identity,
    Conjugate,
}

/// A scalar function to realize as `f(U)`.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec {
    /// Values `f(r_k)` at the roots of `x^m - tau`, in [`binomial_roots`] order.
    Samples {
        m: usize,
        tau: Complex64,
        values: Vec<Complex64>,
    },
    Named(NamedFunction),
}

impl FunctionSpec {
    pub fn frft(x: f64) -> Self {
        FunctionSpec::Named(NamedFunction::Frft { x })
    }

    pub fn power(s: f64) -> Self {
        FunctionSpec::Named(NamedFunction::Power { s })
    }

    pub fn identity() -> Self {
        FunctionSpec::Named(NamedFunction::Identity)
    }

    pub fn conjugate() -> Self {
        FunctionSpec::Named(NamedFunction::Conjugate)
    }

    pub fn samples(m: usize, tau: Complex64, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != m || m == 0 {
            return Err(Error::Dimension(format!(
                "expected {m} samples, found {}",
                values.len()
            )));
        }
        Ok(FunctionSpec::Samples { m, tau, values })
    }

    /// Tabulates this function on the roots of `x^m - tau`.
    pub fn tabulate(&self, m: usize, tau: Complex64) -> Result<Self> {
        let values = binomial_roots(m, tau)
            .into_iter()
            .map(|r| self.value_at(r))
            .collect::<Result<Vec<_>>>()?;
        FunctionSpec::samples(m, tau, values)
    }
}

/// Values of the fractional DFT power at the eigenvalues `1, -i, -1, i`.
pub fn frft_eigenvalue_map(x: f64) -> [(Complex64, Complex64); 4] {
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        (one, one),
        (-i, Complex64::from_polar(1.0, -x)),
        (-one, Complex64::from_polar(1.0, 2.0 * x)),
        (i, Complex64::from_polar(1.0, x)),
    ]
}

impl SpectralFunction for FunctionSpec {
    fn value_at(&self, z: Complex64) -> Result<Complex64> {
        match self {
            FunctionSpec::Samples { m, tau, values } => binomial_roots(*m, *tau)
                .iter()
                .position(|r| (r - z).norm() <= NODE_TOL)
                .map(|k| values[k])
                .ok_or(Error::Domain { point: z }),
            FunctionSpec::Named(named) => match named {
                NamedFunction::Frft { x } => frft_eigenvalue_map(*x)
                    .iter()
                    .find(|(node, _)| (node - z).norm() <= NODE_TOL)
                    .map(|&(_, v)| v)
                    .ok_or(Error::Domain { point: z }),
                NamedFunction::Power { s } => {
                    if z.norm() == 0.0 {
                        return Err(Error::Domain { point: z });
                    }
                    Ok(Complex64::from_polar(
                        z.norm().powf(*s),
                        s * principal_arg(z),
                    ))
                }
                NamedFunction::Identity => Ok(z),
                NamedFunction::Conjugate => Ok(z.conj()),
            },
        }
    }
}

// On-disk form:
//   { "variant": "samples", "m": 4, "tau": [1, 0], "samples": [[re, im], ...] }
//   { "variant": "named", "tag": "frft", "x": 0.7 }
#[derive(Serialize, Deserialize, Default)]
struct FunctionFile {
    variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<f64>,
}

impl Serialize for FunctionSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let file = match self {
            FunctionSpec::Samples { m, tau, values } => FunctionFile {
                variant: "samples".into(),
                m: Some(*m),
                tau: Some([tau.re, tau.im]),
                samples: Some(values.iter().map(|z| [z.re, z.im]).collect()),
                ..Default::default()
            },
            FunctionSpec::Named(named) => {
                let (tag, x, s) = match named {
                    NamedFunction::Frft { x } => ("frft", Some(*x), None),
                    NamedFunction::Power { s } => ("power", None, Some(*s)),
                    NamedFunction::Identity => ("identity", None, None),
                    NamedFunction::Conjugate => ("conjugate", None, None),
                };
                FunctionFile {
                    variant: "named".into(),
                    tag: Some(tag.into()),
                    x,
                    s,
                    ..Default::default()
                }
            }
        };
        file.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FunctionSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let file = FunctionFile::deserialize(d)?;
        let missing = |field: &str| D::Error::custom(format!("missing field `{field}`"));
        match file.variant.as_str() {
            "samples" => {
                let m = file.m.ok_or_else(|| missing("m"))?;
                let [re, im] = file.tau.ok_or_else(|| missing("tau"))?;
                let values = file
                    .samples
                    .ok_or_else(|| missing("samples"))?
                    .into_iter()
                    .map(|[re, im]| Complex64::new(re, im))
                    .collect();
                FunctionSpec::samples(m, Complex64::new(re, im), values).map_err(D::Error::custom)
            }
            "named" => match file.tag.as_deref() {
                Some("frft") => Ok(FunctionSpec::frft(file.x.ok_or_else(|| missing("x"))?)),
                Some("power") => Ok(FunctionSpec::power(file.s.ok_or_else(|| missing("s"))?)),
                Some("identity") => Ok(FunctionSpec::identity()),
                Some("conjugate") => Ok(FunctionSpec::conjugate()),
                Some(other) => Err(D::Error::custom(format!("unknown function tag `{other}`"))),
                None => Err(missing("tag")),
            },
            other => Err(D::Error::custom(format!("unknown variant `{other}`"))),
        }
    }
}
