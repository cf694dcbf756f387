use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bnloci::cli::{self, CliError, CliResult, Format, Method, OutputDocument};
use bnloci::selftest::Fault;
use bnloci::{Ledger, SRange};

/// Gonality invariants and non-containment certificates for Brill-Noether loci.
#[derive(Parser)]
#[command(name = "bnloci", version)]
struct Cli {
    /// Output format: table, json or csv.
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Triple {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    d: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Brill-Noether number rho(g, r, d).
    Rho(Triple),
    /// Clifford index d - 2r.
    Gamma {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
    },
    /// Pflueger's rho_k(g, r, d).
    Rhok {
        #[command(flatten)]
        t: Triple,
        #[arg(long)]
        k: i64,
    },
    /// Gonality invariant kappa(g, r, d).
    Kappa {
        #[command(flatten)]
        t: Triple,
        /// closed, brute or both.
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Degree of the expected maximal locus of rank r.
    Dmax {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
    },
    /// Expected maximal loci of a genus.
    Maximal {
        #[arg(long)]
        g: i64,
    },
    /// Status of every pair of expected maximal loci of a genus.
    Report {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        ledger: Option<String>,
    },
    /// Table of G(r).
    Gtable {
        #[arg(long, default_value_t = 2)]
        r_min: i64,
        #[arg(long, default_value_t = 10)]
        r_max: i64,
        /// maximal, half or bound.
        #[arg(long, default_value = "maximal")]
        s_range: String,
    },
    /// Genera below G(r) where the gonality inequality fails.
    Exceptional {
        #[arg(long)]
        r: i64,
        #[arg(long, default_value = "maximal")]
        s_range: String,
    },
    /// kappa at d_max for every rank, as plotting data.
    Figure {
        #[arg(long)]
        g: i64,
        /// Write CSV here instead of printing.
        #[arg(long)]
        out: Option<String>,
    },
    /// Non-containment status of one ordered pair.
    Check {
        /// g,r,d
        #[arg(long)]
        source: String,
        /// g,s,e
        #[arg(long)]
        target: String,
        #[arg(long)]
        ledger: Option<String>,
    },
    /// Run the invariant suites.
    Selftest {
        #[arg(long, default_value_t = 60)]
        gmax: i64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn load_ledger(path: Option<&str>) -> CliResult<Ledger> {
    match path {
        Some(p) => Ok(Ledger::load(p)?),
        None => Ok(Ledger::empty()),
    }
}

fn s_range(text: &str) -> CliResult<SRange> {
    text.parse()
        .map_err(|e: bnloci::Error| CliError::Usage(e.to_string()))
}

fn emit(doc: &OutputDocument, format: Format) -> CliResult<()> {
    print!("{}", doc.render(format)?);
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let explicit = cli
        .format
        .as_deref()
        .map(str::parse::<Format>)
        .transpose()?;
    let format = explicit.unwrap_or_default();
    let doc = match cli.command {
        Command::Rho(t) => cli::cmd_rho(t.g, t.r, t.d)?,
        Command::Gamma { r, d } => cli::cmd_gamma(r, d)?,
        Command::Rhok { t, k } => cli::cmd_rhok(t.g, t.r, t.d, k)?,
        Command::Kappa { t, method } => cli::cmd_kappa(t.g, t.r, t.d, method.parse::<Method>()?)?,
        Command::Dmax { g, r } => cli::cmd_dmax(g, r)?,
        Command::Maximal { g } => cli::cmd_maximal(g)?,
        Command::Report { g, ledger } => {
            let l = load_ledger(ledger.as_deref())?;
            cli::cmd_report(g, &l, ledger.as_deref())?
        }
        Command::Gtable {
            r_min,
            r_max,
            s_range: s,
        } => cli::cmd_gtable(r_min, r_max, s_range(&s)?)?,
        Command::Exceptional { r, s_range: s } => cli::cmd_exceptional(r, s_range(&s)?)?,
        Command::Figure { g, out } => {
            let doc = cli::cmd_figure(g)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, doc.to_csv()?)
                        .map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
                    eprintln!("wrote {} rows to {path}", doc.rows.len());
                    return Ok(ExitCode::SUCCESS);
                }
                None => {
                    emit(&doc, explicit.unwrap_or(Format::Csv))?;
                    return Ok(ExitCode::SUCCESS);
                }
            }
        }
        Command::Check {
            source,
            target,
            ledger,
        } => {
            let l = load_ledger(ledger.as_deref())?;
            cli::cmd_check(cli::parse_locus(&source)?, cli::parse_locus(&target)?, &l)?
        }
        Command::Selftest { gmax, inject_fault } => {
            let fault = inject_fault.then_some(Fault::FlipKappa);
            let (doc, passed) = cli::cmd_selftest(gmax, fault)?;
            emit(&doc, format)?;
            return Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            });
        }
    };
    emit(&doc, format)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bnloci: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
