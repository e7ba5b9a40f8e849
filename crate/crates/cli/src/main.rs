use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cw_cli::input::{parse_json, parse_text, Input};
use cw_cli::report::{self, Report};
use cw_core::chevalley_weil::Orientation;
use cw_core::group::DEFAULT_ORDER_LIMIT;
use cw_core::Error;

#[derive(Parser)]
#[command(name = "cwcover", version, about = "G-module structure of the homology of Galois covers of surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Input file in the text format (or JSON with --json-in).
    file: PathBuf,
    /// Read the input as JSON.
    #[arg(long)]
    json_in: bool,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = DEFAULT_ORDER_LIMIT)]
    max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Characters and decompositions of punctured and closed H1.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Also recompute H1 from the cell complex and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value = "pos")]
        orientation: Orientation,
    },
    /// Split of the closed H1 character into H10 and H01.
    Hodge {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "pos")]
        orientation: Orientation,
    },
    /// Compare the formulas with the cell-complex computation.
    OracleCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether a permutation character arises from a branch fiber.
    Topological {
        #[command(flatten)]
        common: Common,
    },
    /// Differentials of a cyclic cover of a hyperelliptic curve.
    Hyperelliptic {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Test whether a group can act on a hyperelliptic curve.
    Obstruction {
        #[command(flatten)]
        common: Common,
    },
    /// Z/2 cover of a genus-g surface branched at n points, against the
    /// printed module expression.
    DoubleCover {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        branch: usize,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn load(common: &Common) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", common.file.display())))?;
    let input = if common.json_in {
        parse_json(&text, common.max_order)?
    } else {
        parse_text(&text, common.max_order)?
    };
    Ok(input)
}

fn run(cli: Cli) -> Result<(Report, bool), Failure> {
    Ok(match cli.command {
        Command::Analyze { common, oracle, orientation } => {
            (report::analyze(&load(&common)?, orientation, oracle)?, common.json)
        }
        Command::Hodge { common, orientation } => (report::hodge(&load(&common)?, orientation)?, common.json),
        Command::OracleCheck { common } => (report::oracle_check(&load(&common)?)?, common.json),
        Command::Topological { common } => (report::topological(&load(&common)?)?, common.json),
        Command::Hyperelliptic { genus, degree, json } => (report::hyperelliptic(genus, degree)?, json),
        Command::Obstruction { common } => (report::obstruction(&load(&common)?)?, common.json),
        Command::DoubleCover { genus, branch, json } => (report::double_cover(genus, branch)?, json),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok((report, json)) => {
            let mut out = std::io::stdout().lock();
            let written = if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("valid JSON"))
            } else {
                write!(out, "{}", report.text)
            };
            match written.and_then(|()| out.flush()) {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(cw_cli::exit_code(&e))
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
