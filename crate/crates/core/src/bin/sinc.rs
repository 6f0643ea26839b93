//! `sinc`: Sinc quadrature / indefinite integration with certified bounds.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sinc_core::auto_tol::{indefinite_to_tol, integrate_to_tol, ToleranceRequest, DEFAULT_N_CAP};
use sinc_core::bounds::{
    indef_certificate, quad_certificate, scheme_for, scheme_rate, Family, Kind,
};
use sinc_core::engine::{indefinite, integrate};
use sinc_core::experiments::{format_real, run_experiment, write_csv, Example, ExperimentSpec};
use sinc_core::mesh::{build_mesh, validate_n, DecayParams};
use sinc_core::transforms::TransformId;
use sinc_core::SincError;

#[derive(Parser)]
#[command(
    name = "sinc",
    version,
    about = "Sinc quadrature and indefinite integration with explicit error bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Definite integral of a built-in example.
    Quad {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
    },
    /// Indefinite integral of a built-in example at one point.
    Indef {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        tau: f64,
    },
    /// Smallest certified n meeting a tolerance, then evaluate.
    Auto {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = KindArg::Quad)]
        kind: KindArg,
        /// Evaluation point for `--kind indef`.
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        n_cap: usize,
    },
    /// Error and bound over a range of n, as CSV.
    Experiment {
        #[arg(long)]
        example: Example,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        n_step: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Error constant and bound for given decay data.
    Bound {
        #[arg(long)]
        transform: TransformId,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        d: f64,
        #[arg(long = "K")]
        k: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Quad)]
        kind: KindArg,
    },
}

#[derive(Args)]
struct ProblemArgs {
    #[arg(long)]
    example: Example,
    /// Defaults to the family of `--transform`, or DE.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long)]
    transform: Option<TransformId>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
    #[arg(long = "K")]
    k: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Se,
    De,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Se => Family::Se,
            FamilyArg::De => Family::De,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Quad,
    Indef,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Quad => Kind::Quad,
            KindArg::Indef => Kind::Indef,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Sinc(SincError),
    Io(io::Error),
}

impl From<SincError> for Failure {
    fn from(e: SincError) -> Self {
        Failure::Sinc(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Sinc(
                SincError::InvalidParameter { .. }
                | SincError::Domain { .. }
                | SincError::Mismatch { .. }
                | SincError::UnsupportedTransform(_),
            ) => 2,
            Failure::Sinc(_) | Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Sinc(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl ProblemArgs {
    /// Example integrand, transform and decay data after applying overrides.
    fn resolve(&self) -> Result<(Example, TransformId, DecayParams), Failure> {
        let family = match (self.family, self.transform) {
            (Some(f), _) => f.into(),
            (None, Some(id)) if id.is_double_exponential() => Family::De,
            (None, Some(_)) => Family::Se,
            (None, None) => Family::De,
        };
        let (default_id, defaults) = self.example.setup(family);
        let id = self.transform.unwrap_or(default_id);
        if id.case() != defaults.case {
            return Err(Failure::Usage(format!(
                "transform {id} does not fit the interval of example {}",
                self.example
            )));
        }
        if id.is_double_exponential() != (family == Family::De) {
            return Err(Failure::Usage(format!(
                "transform {id} is not in the requested family"
            )));
        }
        let params = DecayParams::new(
            self.k.unwrap_or(defaults.k),
            self.alpha.unwrap_or(defaults.alpha),
            self.beta.unwrap_or(defaults.beta),
            self.d.unwrap_or(defaults.d),
            defaults.case,
        )?;
        Ok((self.example, id, params))
    }
}

fn line(out: &mut impl Write, key: &str, value: impl std::fmt::Display) -> io::Result<()> {
    writeln!(out, "{key:<10} {value}")
}

fn optional(x: Option<f64>) -> String {
    x.map_or_else(|| "unavailable".to_owned(), format_real)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Quad { problem, n } => {
            let (example, id, params) = problem.resolve()?;
            let f = example.integrand();
            let r = integrate(&f, id, &params, n)?;
            line(&mut out, "transform", id)?;
            line(&mut out, "n", n)?;
            line(&mut out, "h", format_real(r.mesh.h))?;
            line(&mut out, "M", r.mesh.lower)?;
            line(&mut out, "N", r.mesh.upper)?;
            line(&mut out, "value", format_real(r.value))?;
            line(&mut out, "bound", optional(r.bound))?;
            line(
                &mut out,
                "abs_error",
                format_real((r.value - example.exact_total()).abs()),
            )?;
        }
        Command::Indef { problem, n, tau } => {
            let (example, id, params) = problem.resolve()?;
            let f = example.integrand();
            let (approx, bound) = indefinite(&f, id, &params, n)?;
            let value = approx.eval(tau)?;
            line(&mut out, "transform", id)?;
            line(&mut out, "n", n)?;
            line(&mut out, "h", format_real(approx.mesh().h))?;
            line(&mut out, "M", approx.mesh().lower)?;
            line(&mut out, "N", approx.mesh().upper)?;
            line(&mut out, "tau", format_real(tau))?;
            line(&mut out, "value", format_real(value))?;
            line(&mut out, "bound", optional(bound))?;
            line(
                &mut out,
                "abs_error",
                format_real((value - example.exact_indefinite(tau)).abs()),
            )?;
        }
        Command::Auto {
            problem,
            tol,
            kind,
            tau,
            n_cap,
        } => {
            let (example, id, params) = problem.resolve()?;
            let f = example.integrand();
            let scheme = scheme_for(id, kind == KindArg::Indef)?;
            let req = ToleranceRequest::new(tol, scheme, id, params)?.with_n_cap(n_cap);
            let (mesh, value, bound, exact) = match kind {
                KindArg::Quad => {
                    let r = integrate_to_tol(&f, &req)?;
                    (
                        r.mesh,
                        r.value,
                        r.bound.unwrap_or(f64::NAN),
                        example.exact_total(),
                    )
                }
                KindArg::Indef => {
                    let tau = tau.ok_or_else(|| {
                        Failure::Usage("--tau is required with --kind indef".to_owned())
                    })?;
                    let (approx, bound) = indefinite_to_tol(&f, &req)?;
                    (
                        *approx.mesh(),
                        approx.eval(tau)?,
                        bound,
                        example.exact_indefinite(tau),
                    )
                }
            };
            line(&mut out, "transform", id)?;
            line(&mut out, "tol", format_real(tol))?;
            line(&mut out, "n", mesh.n)?;
            line(&mut out, "h", format_real(mesh.h))?;
            line(&mut out, "value", format_real(value))?;
            line(&mut out, "bound", format_real(bound))?;
            line(&mut out, "abs_error", format_real((value - exact).abs()))?;
        }
        Command::Experiment {
            example,
            family,
            kind,
            n_min,
            n_max,
            n_step,
            out: path,
        } => {
            if n_min == 0 || n_step == 0 || n_min > n_max {
                return Err(Failure::Usage(
                    "need 1 <= n-min <= n-max and n-step >= 1".to_owned(),
                ));
            }
            let spec = ExperimentSpec {
                example,
                family: family.into(),
                kind: kind.into(),
                n_list: (n_min..=n_max).step_by(n_step).collect(),
            };
            let rows = run_experiment(&spec)?;
            match path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(p)?);
                    write_csv(&mut w, &rows)?;
                    w.flush()?;
                }
                None => write_csv(&mut out, &rows)?,
            }
        }
        Command::Bound {
            transform,
            alpha,
            beta,
            d,
            k,
            n,
            kind,
        } => {
            let params = DecayParams::new(k, alpha, beta, d, transform.case())?;
            let indef = kind == KindArg::Indef;
            let scheme = scheme_for(transform, indef)?;
            line(&mut out, "scheme", scheme)?;
            line(
                &mut out,
                "rate",
                format_real(scheme_rate(scheme, &params).eval(n)),
            )?;
            let cert = if indef {
                indef_certificate(scheme, transform, &params)?
            } else {
                quad_certificate(scheme, transform, &params)?
            };
            let mesh = build_mesh(scheme, &params, n)?;
            let valid = validate_n(scheme, &params, &mesh).is_valid();
            line(&mut out, "constant", format_real(cert.constant))?;
            line(&mut out, "bound", optional(valid.then(|| cert.bound(n))))?;
            if !valid {
                line(
                    &mut out,
                    "note",
                    "n fails the side conditions; no bound certified",
                )?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
