use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fourcolor::batch::{self, DischargeCmdOptions, Filter, ReduceCmdOptions};
use fourcolor::kempe::Budget;
use fourcolor::reduce::ReduceOptions;
use fourcolor::script::RadiusPolicy;

/// Verification toolkit for unavoidable-set / discharging proofs of the
/// four-color theorem.
#[derive(Parser)]
#[command(name = "fourcolor", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every configuration in a file.
    Validate { file: PathBuf },
    /// Check D-reducibility of every configuration in a file.
    Reduce(ReduceArgs),
    /// Verify the presentation scripts for a range of hub degrees.
    Discharge(DischargeArgs),
    /// Verify the per-degree edge-transfer bound.
    Overcharge(OverchargeArgs),
    /// Ring-size histogram of a configuration file.
    Stats { configs: PathBuf },
    /// Self-check oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct ReduceArgs {
    configs: PathBuf,
    /// Parallel workers (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Row filter, e.g. ring<=11 or name=birkhoff.
    #[arg(long)]
    filter: Option<String>,
    /// Write the TSV report here as well as to stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Largest admissible ring.
    #[arg(long, default_value_t = 16)]
    ring_cap: usize,
    /// Fixed-point round budget per configuration.
    #[arg(long, default_value_t = 10_000)]
    max_rounds: usize,
}

#[derive(Args)]
struct DischargeArgs {
    #[arg(long)]
    rules: PathBuf,
    #[arg(long)]
    configs: PathBuf,
    /// Directory holding degree<d>.pres scripts.
    #[arg(long)]
    present: PathBuf,
    /// Inclusive degree range, e.g. 5..11 or 7.
    #[arg(long, default_value = "5..11")]
    degrees: String,
    #[arg(long)]
    verbose: bool,
    /// Demote the radius>2 screen to a warning.
    #[arg(long)]
    allow_big_radius: bool,
}

#[derive(Args)]
struct OverchargeArgs {
    #[arg(long)]
    rules: PathBuf,
    #[arg(long)]
    configs: PathBuf,
    /// Transfer threshold, written as tenths: 5/10 or plain 5.
    #[arg(long, default_value = "5/10")]
    bound: String,
    #[arg(long)]
    allow_big_radius: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Lift all colorings of an embedded graph through a wrapped face and
    /// check the lifted set is Kempe-consistent.
    Consistency {
        graph: PathBuf,
        /// Face index to wrap (default: the longest walk).
        #[arg(long)]
        face: Option<usize>,
    },
}

fn parse_degrees(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    let parse_one = |t: &str| t.parse::<usize>().map_err(|_| format!("bad degree {t:?}"));
    if let Some((a, b)) = text.split_once("..") {
        let (a, b) = (parse_one(a)?, parse_one(b)?);
        if a > b {
            return Err(format!("empty degree range {text:?}"));
        }
        return Ok((a..=b).collect());
    }
    if let Some((a, b)) = text.split_once('-') {
        let (a, b) = (parse_one(a)?, parse_one(b)?);
        if a > b {
            return Err(format!("empty degree range {text:?}"));
        }
        return Ok((a..=b).collect());
    }
    Ok(vec![parse_one(text)?])
}

fn parse_bound(text: &str) -> Result<i64, String> {
    let t = text.trim();
    let body = t.strip_suffix("/10").unwrap_or(t);
    body.parse::<i64>().map_err(|_| format!("bad bound {text:?}; write tenths like 5/10"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Validate { file } => batch::cmd_validate(file),
        Command::Reduce(args) => {
            let filter = match args.filter.as_deref().map(Filter::parse).transpose() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(batch::EXIT_INPUT as u8);
                }
            };
            let opts = ReduceCmdOptions {
                jobs: args.jobs,
                filter,
                reduce: ReduceOptions {
                    ring_cap: args.ring_cap,
                    budget: Budget { max_rounds: args.max_rounds, time_limit: None },
                },
            };
            let out = batch::cmd_reduce(&args.configs, &opts);
            if let Some(path) = args.report {
                if let Err(e) = std::fs::write(&path, &out.report) {
                    eprintln!("error: cannot write report {}: {e}", path.display());
                    return ExitCode::from(batch::EXIT_INPUT as u8);
                }
            }
            out
        }
        Command::Discharge(args) => {
            let degrees = match parse_degrees(&args.degrees) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(batch::EXIT_INPUT as u8);
                }
            };
            let opts = DischargeCmdOptions {
                degrees,
                verbose: args.verbose,
                radius_policy: if args.allow_big_radius { RadiusPolicy::Warn } else { RadiusPolicy::Error },
            };
            batch::cmd_discharge(&args.rules, &args.configs, &args.present, &opts)
        }
        Command::Overcharge(args) => {
            let bound = match parse_bound(&args.bound) {
                Ok(b) => b,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(batch::EXIT_INPUT as u8);
                }
            };
            let policy = if args.allow_big_radius { RadiusPolicy::Warn } else { RadiusPolicy::Error };
            batch::cmd_overcharge(&args.rules, &args.configs, bound, policy)
        }
        Command::Stats { configs } => batch::cmd_stats(configs),
        Command::Oracle(OracleCommand::Consistency { graph, face }) => {
            batch::cmd_oracle_consistency(graph, face)
        }
    };
    print!("{}", out.report);
    ExitCode::from(out.exit as u8)
}
