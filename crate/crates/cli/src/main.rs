//! `s3bundle`: classification queries for complexes with the cohomology of
//! an S^3-bundle over S^4.
//!
//! Exit codes: 0 affirmative or success, 1 negative or undecided, 2 usage or
//! input error.

mod commands;
mod envelope;
mod table;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use commands::{Outcome, Theta, EXIT_USAGE};
use table::{TableFormat, MAX_TABLE_N};

#[derive(Debug, Parser)]
#[command(name = "s3bundle", version, about = "Homotopy and PL classification of S^3-bundles over S^4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct FormArgs {
    /// Order of H^4
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    n: BigInt,
    /// Value b(g, g) of the linking form on a generator
    #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
    lambda: BigInt,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is the linking form lambda on Z_n standard?
    CheckForm {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Oriented homotopy types of bundles M_{m,n} and the PL regime for n
    Classify {
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        n: BigInt,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Match Wilkens data (Z_n, lambda, beta) against bundles and decide PL type
    Match {
        #[command(flatten)]
        form: FormArgs,
        /// Coefficient c of the spin class beta = c x
        #[arg(long, value_parser = parse_int, allow_negative_numbers = true)]
        beta: BigInt,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide homotopy equivalence to an S^3-bundle over S^4
    Decide {
        #[command(flatten)]
        form: FormArgs,
        /// Status of the secondary operation Theta
        #[arg(long, value_enum, default_value = "unknown")]
        theta: Theta,
        /// The input is a smooth manifold (Theta is then trivial)
        #[arg(long)]
        manifold: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fibration data (m, k, sign) with m^2 lambda n + k n^2 = sign n
    HopfWitness {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Full report for the Berger space Sp(2)/Sp(1)
    Berger {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Per-n invariants for n = 1..=max_n
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_TABLE_N))]
        max_n: u64,
        #[arg(long, value_enum, default_value = "json-lines")]
        format: TableFormat,
        /// Write to this file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("`{s}` is not an integer"))
}

fn emit(outcome: Result<Outcome, s3bundle::Error>, format: Format) -> ExitCode {
    match outcome {
        Ok(o) => {
            // a closed pipe downstream is not an error worth reporting
            let mut out = io::stdout().lock();
            let _ = match format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", o.envelope.render()),
            };
            ExitCode::from(o.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::CheckForm { form, format } => emit(commands::check_form(&form.n, &form.lambda), format),
        Command::Classify { n, format } => emit(commands::classify(&n), format),
        Command::Match { form, beta, format } => emit(commands::wilkens(&form.n, &form.lambda, &beta), format),
        Command::Decide {
            form,
            theta,
            manifold,
            format,
        } => emit(commands::decide(&form.n, &form.lambda, theta, manifold), format),
        Command::HopfWitness { form, format } => emit(commands::hopf(&form.n, &form.lambda), format),
        Command::Berger { format } => emit(Ok(commands::berger()), format),
        Command::Table {
            max_n,
            format,
            output,
        } => {
            let rows = table::rows(max_n);
            match table::write(&rows, format, output.as_deref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write table: {e}");
                    ExitCode::from(EXIT_USAGE)
                }
            }
        }
    }
}
