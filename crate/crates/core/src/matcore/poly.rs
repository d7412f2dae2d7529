use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Complex polynomial with coefficients in ascending degree.
///
/// Trailing exact zeros are trimmed on construction, so the zero polynomial
/// has no coefficients and no degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs
            .last()
            .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Monic polynomial `prod (x - r)`.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            coeffs = next;
        }
        Polynomial::new(coeffs)
    }

    /// `x^m - tau`.
    pub fn binomial(m: usize, tau: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); m + 1];
        coeffs[0] = -tau;
        coeffs[m] = Complex64::new(1.0, 0.0);
        Polynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Complex64::new(1.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Horner evaluation at a matrix argument.
    pub fn eval_matrix(&self, u: &ComplexMatrix) -> ComplexMatrix {
        let n = u.dim();
        let mut acc = ComplexMatrix::zeros(n);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * u;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Long division by a monic divisor, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if !divisor.is_monic() {
            return Err(Error::Form("divisor must be monic".into()));
        }
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return Ok((Polynomial::new(Vec::new()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Complex64::new(0.0, 0.0); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = rem[k + d];
            quot[k] = q;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * c;
            }
        }
        rem.truncate(d);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Largest coefficient modulus (zero for the zero polynomial).
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Writes the polynomial with coefficients rounded to `tol`.
    pub fn display_with(&self, tol: f64) -> String {
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            let c = snap(c, tol);
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            let (negative, body) = coefficient_text(c, k > 0);
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(1e-9))
    }
}

fn snap(c: Complex64, tol: f64) -> Complex64 {
    let round = |v: f64| {
        let r = v.round();
        if (v - r).abs() <= tol {
            r + 0.0
        } else {
            v
        }
    };
    Complex64::new(round(c.re), round(c.im))
}

fn real_text(v: f64) -> String {
    if v.fract() == 0.0 && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

/// Formats a complex scalar compactly, e.g. `1`, `-i`, `0.5+2i`.
pub fn format_complex(c: Complex64, tol: f64) -> String {
    let c = snap(c, tol);
    let (negative, body) = coefficient_text(c, false);
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

// Returns (leading minus, magnitude text). Unit coefficients are elided when
// `elide_one` is set, i.e. when followed by a power of x.
fn coefficient_text(c: Complex64, elide_one: bool) -> (bool, String) {
    let sep = if elide_one { " " } else { "" };
    if c.im == 0.0 {
        let v = c.re.abs();
        let text = if elide_one && v == 1.0 {
            String::new()
        } else {
            real_text(v)
        };
        (c.re < 0.0, text)
    } else if c.re == 0.0 {
        let v = c.im.abs();
        let text = if v == 1.0 {
            "i".to_string()
        } else {
            format!("{}i", real_text(v))
        };
        (c.im < 0.0, format!("{text}{sep}"))
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        (
            false,
            format!(
                "({}{}{}i){}",
                real_text(c.re),
                sign,
                real_text(c.im.abs()),
                sep
            ),
        )
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}
