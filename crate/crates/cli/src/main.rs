use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twist53::commands::{self, CommandConfig, FiberTarget, Report};
use twist53::error::{CliError, CliResult, EXIT_INPUT};
use twist53::parse::{parse_point, parse_quadratic, parse_rational};
use twist53_core::oracle::Identity;

#[derive(Parser)]
#[command(name = "twist53", version, about = "Twisted models of X(5,3) and the Q-curves they classify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Clone)]
struct Common {
    /// Oracle precision N.
    #[arg(long, default_value_t = 40)]
    precision: i64,
    /// Height bound for point search.
    #[arg(long, default_value_t = 100)]
    height: u64,
    /// Primes up to this bound are used to enlarge the order of L.
    #[arg(long, default_value_t = 100)]
    prime_bound: u64,
    /// Run the oracle before trusting the stored constants.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON map of constant overrides.
    #[arg(long, hide = true)]
    constants: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> CommandConfig {
        CommandConfig {
            precision: self.precision,
            height: self.height,
            prime_bound: self.prime_bound,
            strict: self.strict,
            out: self.out.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that a quartic has Galois group S4 and non-cyclotomic determinant.
    Validate {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Compute the twisted plane quartic and write the model artifact.
    Model {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, hide = true)]
        corrupt_sigma: bool,
    },
    /// Search rational points and evaluate the moduli map on them.
    Points {
        #[arg(long)]
        artifact: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the moduli map at given points `a,b,c`.
    Moduli {
        #[arg(long)]
        artifact: PathBuf,
        #[arg(long = "point", required = true, allow_hyphen_values = true)]
        points: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Rational points over given t-values, then over the t-values of j = a + b*sqrt(k).
    Fiber {
        #[arg(long)]
        artifact: PathBuf,
        /// A rational t, or `inf`.
        #[arg(long = "t", allow_hyphen_values = true)]
        ts: Vec<String>,
        /// `a,b` for j = a + b*sqrt(k).
        #[arg(long = "j", allow_hyphen_values = true)]
        js: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify the stored modular data against q-expansions.
    Oracle {
        #[arg(long = "identity")]
        identities: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Oracle, newform prefixes and the example pipeline.
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.command {
        Command::Validate { poly } => commands::validate(poly),
        Command::Model { poly, common, corrupt_sigma } => {
            let md = commands::load_constants(common.constants.as_deref())?;
            commands::model(poly, &common.config(), &md, *corrupt_sigma)
        }
        Command::Points { artifact, common } => {
            let md = commands::load_constants(common.constants.as_deref())?;
            commands::points(&commands::read_artifact(artifact)?, &common.config(), &md)
        }
        Command::Moduli { artifact, points, common } => {
            let md = commands::load_constants(common.constants.as_deref())?;
            let pts = points.iter().map(|p| parse_point(p)).collect::<CliResult<Vec<_>>>()?;
            commands::moduli(&commands::read_artifact(artifact)?, &pts, &md)
        }
        Command::Fiber { artifact, ts, js, common } => {
            let md = commands::load_constants(common.constants.as_deref())?;
            let mut targets = Vec::new();
            for t in ts {
                targets.push(FiberTarget::T(if t == "inf" { None } else { Some(parse_rational(t)?) }));
            }
            for j in js {
                let (a, b) = parse_quadratic(j)?;
                targets.push(FiberTarget::J(a, b));
            }
            if targets.is_empty() {
                return Err(CliError::parse("fiber targets", "give at least one --t or --j"));
            }
            commands::fiber(&commands::read_artifact(artifact)?, &targets, &md)
        }
        Command::Oracle { identities, common } => {
            let md = commands::load_constants(common.constants.as_deref())?;
            let ids = identities
                .iter()
                .map(|n| Identity::from_name(n).ok_or_else(|| CliError::parse("identity", format!("unknown identity `{n}`"))))
                .collect::<CliResult<Vec<_>>>()?;
            commands::oracle(&md, &common.config(), &ids)
        }
        Command::Selftest { common } => commands::selftest(&commands::load_constants(common.constants.as_deref())?),
    }
}

fn main() -> ExitCode {
    // clap reports usage errors with code 2, which is reserved for internal
    // inconsistencies here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("json"));
            } else {
                println!("{}", report.text);
            }
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
