//! Command-line front end shared by the `qfunc` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 mathematical precondition failure, 4 search found nothing.

mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circuit::{cost_table, Circuit};
use crate::error::{Error, Result};
use crate::frft::{frft_apply, FrftParams, MAX_FRFT_QUBITS};
use crate::funcsynth::{limitation_demo, synthesize, FunctionSpec};
use crate::matcore::{
    format_complex, minimal_polynomial, smallest_scalar_power, ComplexMatrix, DEFAULT_TOL,
};

pub use report::{random_states, verify, Check, GateCounts, VerificationReport, RANDOM_STATES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_NOT_FOUND: i32 = 4;

/// Largest `m` tried when searching for a scalar power.
pub const MAX_SCALAR_POWER: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "qfunc",
    version,
    about = "Circuits for functions of unitaries with a scalar power"
)]
pub struct Cli {
    /// Numerical tolerance for unitarity and scalar-power tests.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Seed for the sampled verification states.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Output file, or output directory for `build`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal polynomial and the smallest m with U^m scalar.
    Mpoly { matrix: PathBuf },
    /// Synthesize and verify the generic circuit for f(U).
    Build(BuildArgs),
    /// Run a circuit file on a state file.
    Simulate {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        state: PathBuf,
    },
    /// Fractional DFT power F_n^x; x = pi/2 is the DFT (order a = 2x/pi).
    Frft {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Input state; defaults to |0>.
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Show that M fails to be unitary for a non-binomial minimal polynomial.
    Limitation { matrix: PathBuf },
    /// Gate-count bounds as CSV.
    Cost {
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 4)]
        m: u64,
        /// Emit rows for m = 2..=64 instead of a single m.
        #[arg(long)]
        sweep: bool,
    },
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub matrix: PathBuf,
    /// Function spec file.
    #[arg(long, group = "func")]
    pub function: Option<PathBuf>,
    /// Fractional DFT angle.
    #[arg(long, group = "func", allow_hyphen_values = true)]
    pub frft: Option<f64>,
    /// Principal power z^s.
    #[arg(long, group = "func", allow_hyphen_values = true)]
    pub power: Option<f64>,
    #[arg(long, group = "func")]
    pub identity: bool,
    #[arg(long, group = "func")]
    pub conjugate: bool,
    /// Number of powers; detected from U when omitted.
    #[arg(long)]
    pub m: Option<usize>,
    /// Gate count of the circuit for U, for the cost bounds.
    #[arg(long, default_value_t = 1)]
    pub gates: u64,
}

/// State vector file: `{ "amplitudes": [[re, im], ...] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateFile {
    pub fn from_vector(v: &[Complex64]) -> Self {
        StateFile {
            amplitudes: v.iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_vector(&self) -> Vec<Complex64> {
        self.amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect()
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Io(_) => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    }
}

/// Runs a parsed command, writing normal output to `stdout` and diagnostics
/// to `stderr`. Returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let tol = cli.tol;
    match &cli.command {
        Command::Mpoly { matrix } => cmd_mpoly(&read_json(matrix)?, tol, &cli.out, stdout),
        Command::Build(args) => cmd_build(args, cli, stdout, stderr),
        Command::Simulate { circuit, state } => {
            let circuit: Circuit = read_json(circuit)?;
            let state: StateFile = read_json(state)?;
            let out = circuit.simulate(&state.to_vector())?;
            let text = serde_json::to_string_pretty(&StateFile::from_vector(&out))? + "\n";
            emit(&cli.out, &text, stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Frft { n, x, state } => {
            if *n == 0 || *n > MAX_FRFT_QUBITS {
                return Err(Error::Resource(format!(
                    "FrFT size {n} outside 1..={MAX_FRFT_QUBITS}"
                )));
            }
            let psi = match state {
                Some(path) => read_json::<StateFile>(path)?.to_vector(),
                None => {
                    let mut v = vec![Complex64::new(0.0, 0.0); 1 << *n];
                    v[0] = Complex64::new(1.0, 0.0);
                    v
                }
            };
            let out = frft_apply(FrftParams { n: *n, x: *x }, &psi)?;
            let text = serde_json::to_string_pretty(&StateFile::from_vector(&out))? + "\n";
            emit(&cli.out, &text, stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Limitation { matrix } => {
            let report = limitation_demo(&read_json(matrix)?, tol)?;
            let text = format!(
                "minimal polynomial: {}\ng(x) = {}\nfirst_row_norm_sq = {}\n",
                report.minimal,
                report.g,
                format_complex(Complex64::new(report.first_row_norm_sq, 0.0), 1e-9)
            );
            emit(&cli.out, &text, stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Cost { k, m, sweep } => {
            if *k == 0 || *m == 0 {
                return Err(Error::Parse("K and m must be positive".into()));
            }
            let table = if *sweep {
                cost_table(*k, 2..=MAX_SCALAR_POWER as u64)
            } else {
                cost_table(*k, [*m])
            };
            emit(&cli.out, &table, stdout)?;
            Ok(EXIT_PASS)
        }
    }
}

#[derive(Serialize)]
struct MpolyReport {
    minimal_polynomial: String,
    coefficients: Vec<[f64; 2]>,
    degree: usize,
    m: Option<usize>,
    tau: Option<[f64; 2]>,
}

pub fn cmd_mpoly(
    u: &ComplexMatrix,
    tol: f64,
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
) -> Result<i32> {
    let poly = minimal_polynomial(u, tol)?;
    let power = smallest_scalar_power(u, MAX_SCALAR_POWER, tol)?;
    let line = match power {
        Some((m, tau)) => format!("{poly}; m={m}, tau={}\n", format_complex(tau, 1e-9)),
        None => format!("{poly}; no m <= {MAX_SCALAR_POWER} with U^m scalar\n"),
    };
    stdout.write_all(line.as_bytes())?;
    if let Some(path) = out {
        write_json(
            path,
            &MpolyReport {
                minimal_polynomial: poly.to_string(),
                coefficients: poly.coeffs().iter().map(|z| [z.re, z.im]).collect(),
                degree: poly.degree().unwrap_or(0),
                m: power.map(|p| p.0),
                tau: power.map(|p| [p.1.re, p.1.im]),
            },
        )?;
    }
    Ok(if power.is_some() {
        EXIT_PASS
    } else {
        EXIT_NOT_FOUND
    })
}

impl BuildArgs {
    pub fn function_spec(&self) -> Result<FunctionSpec> {
        Ok(if let Some(path) = &self.function {
            read_json(path)?
        } else if let Some(x) = self.frft {
            FunctionSpec::frft(x)
        } else if let Some(s) = self.power {
            FunctionSpec::power(s)
        } else if self.conjugate {
            FunctionSpec::conjugate()
        } else if self.identity {
            FunctionSpec::identity()
        } else {
            return Err(Error::Parse(
                "one of --function, --frft, --power, --identity, --conjugate is required".into(),
            ));
        })
    }
}

fn cmd_build(
    args: &BuildArgs,
    cli: &Cli,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32> {
    let out_dir = cli
        .out
        .as_ref()
        .ok_or_else(|| Error::Parse("build needs --out <directory>".into()))?;
    let u: ComplexMatrix = read_json(&args.matrix)?;
    let f = args.function_spec()?;
    let tol = cli.tol;
    let detected = smallest_scalar_power(&u, MAX_SCALAR_POWER, tol)?;
    let m = match (args.m, &f) {
        (Some(m), _) => m,
        (None, FunctionSpec::Samples { m, .. }) => *m,
        (None, _) => match detected {
            Some((m, _)) => m,
            None => {
                return Err(Error::Precondition(format!(
                    "no m <= {MAX_SCALAR_POWER} with U^m scalar"
                )))
            }
        },
    };
    let bundle = match synthesize(&u, &f, m, tol) {
        Ok(b) => b,
        Err(Error::Precondition(msg)) if msg.contains("not a scalar") => {
            let hint = match detected {
                Some((good, _)) => format!("; try --m {good}"),
                None => String::new(),
            };
            return Err(Error::Precondition(format!("{msg}{hint}")));
        }
        Err(e) => return Err(e),
    };
    let (circuit, report) = verify(&bundle, &u, &f, args.gates, tol, cli.seed)?;

    fs::create_dir_all(out_dir)?;
    write_json(&out_dir.join("B.json"), &bundle.prep)?;
    write_json(&out_dir.join("C.json"), &bundle.c)?;
    write_json(&out_dir.join("M.json"), &bundle.mixer)?;
    write_json(&out_dir.join("circuit.json"), &circuit)?;
    write_json(&out_dir.join("report.json"), &report)?;
    stdout.write_all(report.summary().as_bytes())?;
    if report.pass {
        Ok(EXIT_PASS)
    } else {
        writeln!(stderr, "verification failed")?;
        Ok(EXIT_VERIFY_FAIL)
    }
}
