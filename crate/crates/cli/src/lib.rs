//! Command-line front end for `versal-core`.
//!
//! Exit status is 0 on success, 1 on usage or I/O errors and 2 when a
//! mathematical verification fails; in the last case no partial report is
//! written (except for `verify`, whose report lists the failing checks).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use versal_core::versal::{self, VersalError};
use versal_core::{steenrod_dual, Prime};

pub mod report;

pub use report::{BasisRow, OutputFormat, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFICATION: u8 = 2;

const HOMOTOPY_ASSUMPTION: &str = "homotopy dimensions count Z/p summands: S//p is additively a graded Eilenberg-Mac Lane spectrum, so H_*(S//p) = pi_*(S//p) (x) H_*(HF_p)";
const HOMOLOGY_ASSUMPTION: &str = "H_*(S//p) is the free algebra over the Dyer-Lashof algebra on a class a of degree 1; generators are Q^I a with I admissible of excess > 1";
const STEENROD_ASSUMPTION: &str = "dual Steenrod algebra: xi_i in degree 2^i - 1 at p = 2; xi_i in degree 2(p^i - 1) and exterior tau_i in degree 2p^i - 1 at odd p";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFICATION,
        }
    }
}

impl From<VersalError> for CliError {
    fn from(e: VersalError) -> Self {
        if e.is_verification_failure() {
            CliError::Verification(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "versal",
    version,
    about = "Graded dimensions and bases for S//p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Poincaré series of H_*(S//p)
    Homology(PrimeArgs),
    /// Homotopy dimensions of S//p by Poincaré-series division
    Homotopy(PrimeArgs),
    /// Monomial basis of H_*(S//p)
    Basis(PrimeArgs),
    /// Poincaré series and basis of the dual Steenrod algebra
    Steenrod(PrimeArgs),
    /// Poincaré series of H_*(THH(S//p))
    Thh(PrimeArgs),
    /// TAQ dimensions and the shifted cotangent series
    Taq(PrimeArgs),
    /// Number of homotopy classes of self-equivalences
    Equivalences(PrimeArgs),
    /// First degree where HZ//p and HZ/p differ after base change to HF_p
    HzCompare(PrimeArgs),
    /// Two degree-4 classes with equal image under S//2 -> MO
    Collision(OutputArgs),
    /// Run every consistency check for one prime
    Verify(PrimeArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PrimeArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: Prime,
    /// Truncation degree; defaults to 4(p - 1)
    #[arg(long)]
    max_degree: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

impl PrimeArgs {
    fn max_degree(&self) -> usize {
        self.max_degree.unwrap_or_else(|| self.prime.gap_degree())
    }
}

fn parse_prime(text: &str) -> Result<Prime, String> {
    let value: u32 = text
        .parse()
        .map_err(|e| format!("expected a prime, got {text:?}: {e}"))?;
    Prime::new(value).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let report = build_report(command)?;
    let output = match command {
        Command::Collision(o) => o,
        Command::Homology(a)
        | Command::Homotopy(a)
        | Command::Basis(a)
        | Command::Steenrod(a)
        | Command::Thh(a)
        | Command::Taq(a)
        | Command::Equivalences(a)
        | Command::HzCompare(a)
        | Command::Verify(a) => &a.output,
    };
    let text = report.render(output.format);
    match &output.output {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    if report.all_verdicts_pass() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_VERIFICATION)
    }
}

fn build_report(command: &Command) -> Result<Report, CliError> {
    let report = match command {
        Command::Homology(a) => {
            let n = a.max_degree();
            Report::new(a.prime.get(), n, "homology")
                .with_series(&versal::homology_series(a.prime, n))
                .with_assumption(HOMOLOGY_ASSUMPTION)
        }
        Command::Homotopy(a) => homotopy_report(a.prime, a.max_degree())?,
        Command::Basis(a) => {
            let n = a.max_degree();
            let basis = versal::homology_basis(a.prime, n);
            Report::new(a.prime.get(), n, "basis")
                .with_series(&versal::homology_series(a.prime, n))
                .with_basis(&basis)
                .with_assumption(HOMOLOGY_ASSUMPTION)
        }
        Command::Steenrod(a) => {
            let n = a.max_degree();
            let generators = steenrod_dual::milnor_generator_degrees(a.prime, n);
            let basis = versal_core::free_algebra::enumerate_monomials(&generators, n);
            Report::new(a.prime.get(), n, "steenrod")
                .with_series(&versal::steenrod_series(a.prime, n))
                .with_basis(&basis)
                .with_assumption(STEENROD_ASSUMPTION)
        }
        Command::Thh(a) => {
            let n = a.max_degree();
            Report::new(a.prime.get(), n, "thh")
                .with_series(&versal::thh_homology_series(a.prime, n)?)
                .with_assumption(HOMOLOGY_ASSUMPTION)
                .with_assumption("THH(S//p) = S//p smash Q(S^2)_+; the basepoint contributes the unit, so Q(S^2)_+ gives the full free Dyer-Lashof algebra on a degree-2 class u")
        }
        Command::Taq(a) => {
            let n = a.max_degree();
            let taq = versal::taq_dimensions(a.prime, n)?;
            Report::new(a.prime.get(), n, "taq")
                .with_series(&taq.dimensions)
                .with_auxiliary("cotangent", &taq.cotangent_series)
                .with_assumption("the cotangent spectrum of S//p is its suspension, so TAQ(S//p) = HF_p smash_{S//p} Sigma S//p = Sigma HF_p")
                .with_assumption(HOMOTOPY_ASSUMPTION)
        }
        Command::Equivalences(a) => {
            let count = versal::equivalence_count(a.prime)?;
            let mut r = Report::new(a.prime.get(), 1, "equivalences")
                .with_series(&versal::homology_series(a.prime, 1))
                .with_assumption("equivalences correspond to the units of F_p acting on the one-dimensional H_1(S//p)");
            r.value = Some(count.to_string());
            r
        }
        Command::HzCompare(a) => {
            let n = a.max_degree();
            let degree = versal::hz_quotient_comparison(a.prime, n)?;
            let mut r = Report::new(a.prime.get(), n, "hz-compare")
                .with_series(&versal::homology_series(a.prime, n))
                .with_assumption("HF_p smash_HZ HZ//p has homotopy H_*(S//p); HF_p smash_HZ HF_p has homotopy Tor^Z(Z/p, Z/p), of dimension 1 in degrees 0 and 1");
            r.value = Some(degree.to_string());
            r
        }
        Command::Collision(_) => {
            let witness = versal::structure_map_collision()?;
            let n = witness.degree;
            let mut r = Report::new(2, n, "collision")
                .with_series(&versal::homology_series(Prime::TWO, n))
                .with_assumption("s_* a = e_1 and Q^3 e_1 = e_1^4 in H_*(BO; F_2); the Thom isomorphism commutes with Dyer-Lashof operations");
            r.basis = Some(vec![BasisRow {
                degree: n,
                monomials: witness.source_monomials.to_vec(),
            }]);
            r.value = Some(witness.image);
            r
        }
        Command::Verify(a) => {
            let n = a.max_degree().max(a.prime.gap_degree());
            let report = versal::homotopy_series(a.prime, n)?;
            let mut r = Report::new(a.prime.get(), n, "verify")
                .with_series(&report.homotopy_series)
                .with_assumption(HOMOLOGY_ASSUMPTION)
                .with_assumption(STEENROD_ASSUMPTION)
                .with_assumption(HOMOTOPY_ASSUMPTION);
            r.verdicts = Some(versal::verify(a.prime, n));
            r
        }
    };
    Ok(report)
}

fn homotopy_report(prime: Prime, n: usize) -> Result<Report, CliError> {
    let report = versal::homotopy_series(prime, n)?;
    if !report.gap_verified {
        return Err(CliError::Verification(format!(
            "homotopy of S//{prime} is not 1 + t^{} through degree {n}",
            prime.gap_degree()
        )));
    }
    let product = report
        .homotopy_series
        .mul(&report.steenrod_series)
        .map_err(|e| CliError::Verification(e.to_string()))?;
    if product != report.homology_series {
        return Err(CliError::Verification(
            "homotopy times Steenrod series does not reproduce homology".into(),
        ));
    }
    let mut r = Report::new(prime.get(), n, "homotopy")
        .with_series(&report.homotopy_series)
        .with_auxiliary("homology", &report.homology_series)
        .with_auxiliary("steenrod", &report.steenrod_series)
        .with_assumption(HOMOLOGY_ASSUMPTION)
        .with_assumption(STEENROD_ASSUMPTION)
        .with_assumption(HOMOTOPY_ASSUMPTION);
    r.verdicts = Some(vec![
        versal_core::Verdict {
            name: "gap".into(),
            passed: true,
            detail: format!("zero strictly between 0 and {}", prime.gap_degree()),
        },
        versal_core::Verdict {
            name: "tensor-identity".into(),
            passed: true,
            detail: "homotopy x steenrod = homology".into(),
        },
        versal_core::Verdict {
            name: "nonnegativity".into(),
            passed: true,
            detail: format!("through degree {n}"),
        },
    ]);
    Ok(r)
}
