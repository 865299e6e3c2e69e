mod commands;
mod failure;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "agrees", version, about = "Almost Gorenstein Rees algebras of powers of the maximal ideal")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Ascii,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every (d, l) with 2 <= d <= DMAX and 1 <= l <= LMAX.
    Table(TableArgs),
    /// Sweep the binomial inequality over 3 <= d <= DMAX, 2 <= l <= LMAX.
    LemmaIneq(LemmaArgs),
    /// Test whether an ideal is stable and good with respect to a reduction.
    GoodCheck(GoodArgs),
    /// Verify the explicit two-dimensional certificate for m^l.
    Certificate(CertificateArgs),
    /// Verify the claim identities on the r-th Veronese subring.
    Veronese(VeroneseArgs),
    /// Classify a single (d, l) and print the evidence.
    Classify(PairArgs),
    /// Canonical-module ladder numbers for a single (d, l).
    Ladder(PairArgs),
    /// Compute LHS : RHS for two ideal files.
    Colon(ColonArgs),
    /// Compare the fast colon against brute force on seeded random ideals.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_name = "DMAX")]
    dmax_pos: Option<u32>,
    #[arg(value_name = "LMAX")]
    lmax_pos: Option<u32>,
    #[arg(long, conflicts_with = "dmax_pos")]
    dmax: Option<u32>,
    #[arg(long, conflicts_with = "lmax_pos")]
    lmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[arg(long, default_value_t = 100)]
    dmax: u32,
    #[arg(long, default_value_t = 30)]
    lmax: u32,
    /// List the gap at every grid point.
    #[arg(long)]
    report_gaps: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Ascii)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct GoodArgs {
    /// Number of variables; inferred from the ideal file when omitted.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_name = "PATH")]
    ideal: PathBuf,
    #[arg(long, value_name = "PATH")]
    reduction: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct CertificateArgs {
    #[arg(long, default_value_t = 2)]
    dim: u32,
    #[arg(long)]
    ell: u32,
    /// Highest degree for the per-degree containment check.
    #[arg(long, default_value_t = 10)]
    nmax: u32,
}

#[derive(Args, Debug)]
struct VeroneseArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    ell: u32,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(value_name = "D")]
    d_pos: Option<u32>,
    #[arg(value_name = "L")]
    ell_pos: Option<u32>,
    #[arg(long, conflicts_with = "d_pos")]
    d: Option<u32>,
    #[arg(long, conflicts_with = "ell_pos")]
    ell: Option<u32>,
}

#[derive(Args, Debug)]
struct ColonArgs {
    lhs: PathBuf,
    rhs: PathBuf,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
}

fn required(value: Option<u32>, name: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing {name}")))
}

fn pair(args: &PairArgs) -> Result<(u32, u32), Failure> {
    Ok((required(args.d.or(args.d_pos), "D")?, required(args.ell.or(args.ell_pos), "L")?))
}

fn run(cli: Cli) -> Result<commands::Report, Failure> {
    match cli.command {
        Command::Table(a) => commands::table(
            a.dmax.or(a.dmax_pos).unwrap_or(10),
            a.lmax.or(a.lmax_pos).unwrap_or(9),
            a.format,
        ),
        Command::LemmaIneq(a) => commands::lemma_ineq(a.dmax, a.lmax, a.report_gaps, a.format),
        Command::GoodCheck(a) => commands::good_check(a.dim, &a.ideal, &a.reduction, a.format),
        Command::Certificate(a) => commands::certificate(a.dim, a.ell, a.nmax),
        Command::Veronese(a) => commands::veronese(a.r, a.ell),
        Command::Classify(a) => {
            let (d, ell) = pair(&a)?;
            commands::classify(d, ell)
        }
        Command::Ladder(a) => {
            let (d, ell) = pair(&a)?;
            commands::ladder(d, ell)
        }
        Command::Colon(a) => commands::colon(&a.lhs, &a.rhs, a.dim, a.format),
        Command::Oracle(a) => commands::oracle(a.seed, a.trials),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(report) => {
            let mut body = report.body;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            // A closed pipe downstream is not our failure.
            let _ = std::io::stdout().write_all(body.as_bytes());
            match report.counterexample {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    let failure = Failure::Counterexample(msg);
                    eprintln!("{failure}");
                    failure.exit_code()
                }
            }
        }
        Err(failure) => {
            eprintln!("{failure}");
            failure.exit_code()
        }
    }
}
