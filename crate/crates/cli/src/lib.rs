//! Command-line front end: argument handling, dispatch and reporting.

pub mod parse;
pub mod report;

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};

use quatfact::arith::{parse_rational, rp_gcd, RatPoly};
use quatfact::qpoly::{
    beck_decompose, factor, is_irreducible, qp_evaluate, qp_gcrd_bezout, qp_right_divmod,
    roots, CertStore, QPoly,
};
use quatfact::quadform::{CertificateRecord, DEFAULT_MAX_HEIGHT};
use quatfact::quatalg::QuaternionAlgebra;
use quatfact::Error;

pub use parse::{parse_poly, parse_quaternion, ParseError};
use report::{Payload, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SPLIT: i32 = 2;
pub const EXIT_SEARCH_EXHAUSTED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "quatfact", version, about = "Factor polynomials over rational quaternion algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Square of i.
    #[arg(long, global = true, default_value = "-1", allow_hyphen_values = true)]
    alpha: String,

    /// Square of j.
    #[arg(long, global = true, default_value = "-1", allow_hyphen_values = true)]
    beta: String,

    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Check the result by exact recomputation.
    #[arg(long, global = true)]
    verify: bool,

    /// Zero-divisor certificate file; may be repeated.
    #[arg(long = "certificate", global = true, value_name = "FILE")]
    certificates: Vec<String>,

    /// Seed of the zero-divisor search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Height bound of the zero-divisor search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_HEIGHT)]
    max_height: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Leading coefficient and monic irreducible factors.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// One root from each conjugacy class of roots.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Whether the polynomial is irreducible.
    Irreducible {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Leading coefficient, central-free part and maximal central factor.
    Beck {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Monic greatest common right divisor.
    Gcrd {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Value of the polynomial at a quaternion.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(Error::SplitAlgebra { .. }) => EXIT_SPLIT,
            CliError::Core(Error::SearchExhausted { .. }) => EXIT_SEARCH_EXHAUSTED,
            CliError::Core(Error::InternalInvariantViolation(_)) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let text = if cli.json { report.to_json() } else { report.to_text() };
            let _ = writeln!(out, "{text}");
            if report.verified == Some(false) {
                let _ = writeln!(err, "error: verification failed");
                return EXIT_INTERNAL;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Core(Error::SearchExhausted { .. })) {
                let _ = writeln!(err, "hint: pass a certificate for this factor with --certificate FILE");
            }
            e.code()
        }
    }
}

fn load_certificates(paths: &[String]) -> Result<CertStore, CliError> {
    let mut store = CertStore::new();
    for path in paths {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
        store.insert(CertificateRecord::from_json(&text)?);
    }
    Ok(store)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let alpha = parse_rational(&cli.alpha)
        .map_err(|_| CliError::Usage(format!("invalid rational for --alpha: {}", cli.alpha)))?;
    let beta = parse_rational(&cli.beta)
        .map_err(|_| CliError::Usage(format!("invalid rational for --beta: {}", cli.beta)))?;
    let alg = QuaternionAlgebra::new(alpha, beta)?;
    let store = load_certificates(&cli.certificates)?;
    let started = Instant::now();
    let mut rep = Report::new(&alg, cli.seed);

    let payload = match &cli.command {
        Command::Factor { poly } => {
            let p = parse_poly(poly, &alg)?;
            rep.input = p.to_string();
            let f = factor(&p, Some(&store), cli.seed, cli.max_height)?;
            if cli.verify {
                rep.verified = Some(f.expand() == p);
            }
            Payload::Factor(f)
        }
        Command::Roots { poly } => {
            let p = parse_poly(poly, &alg)?;
            rep.input = p.to_string();
            let r = roots(&p)?;
            if cli.verify {
                let mut ok = true;
                for a in &r.representatives {
                    ok &= qp_evaluate(&p, a)?.is_zero();
                }
                rep.verified = Some(ok);
            }
            Payload::Roots(r.representatives)
        }
        Command::Irreducible { poly } => {
            let p = parse_poly(poly, &alg)?;
            rep.input = p.to_string();
            let irr = is_irreducible(&p)?;
            if cli.verify {
                let f = factor(&p, Some(&store), cli.seed, cli.max_height)?;
                rep.verified = Some(f.expand() == p && irr == (f.factors.len() == 1));
            }
            Payload::Irreducible(irr)
        }
        Command::Beck { poly } => {
            let p = parse_poly(poly, &alg)?;
            rep.input = p.to_string();
            let b = beck_decompose(&p)?;
            if cli.verify {
                let mut g = RatPoly::zero();
                for c in b.central_free.coords() {
                    if !c.is_zero() {
                        g = if g.is_zero() { c.monic() } else { rp_gcd(&g, &c)? };
                    }
                }
                rep.verified = Some(b.expand() == p && g.deg() == 0);
            }
            Payload::Beck(b)
        }
        Command::Gcrd { first, second } => {
            let p = parse_poly(first, &alg)?;
            let q = parse_poly(second, &alg)?;
            rep.input = p.to_string();
            rep.second = Some(q.to_string());
            let (g, u, v) = qp_gcrd_bezout(&p, &q)?;
            if cli.verify {
                let divides = |a: &QPoly| -> Result<bool, Error> {
                    Ok(qp_right_divmod(a, &g)?.1.is_zero())
                };
                rep.verified = Some(&(&u * &p) + &(&v * &q) == g && divides(&p)? && divides(&q)?);
            }
            Payload::Gcrd(g)
        }
        Command::Eval { poly, point } => {
            let p = parse_poly(poly, &alg)?;
            let a = parse_quaternion(point, &alg)?;
            rep.input = p.to_string();
            rep.second = Some(a.to_string());
            let val = qp_evaluate(&p, &a)?;
            if cli.verify {
                let (_, r) = qp_right_divmod(&p, &QPoly::linear(&a))?;
                rep.verified = Some(r.coeff(0) == val && r.deg() == 0);
            }
            Payload::Eval(val)
        }
    };
    rep.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
    rep.set_payload(payload);
    Ok(rep)
}
