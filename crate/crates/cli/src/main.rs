use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Config};

/// Exact arithmetic in truncated character groups of the Connes-Kreimer and
/// tensor Hopf algebras.
#[derive(Parser, Debug)]
#[command(name = "chargroup", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Truncation degree N [default: 6, or the value stored in input files]
    #[arg(short = 'N', long, global = true)]
    truncation: Option<usize>,

    /// Hopf algebra: `ck` or `tensor(d)` [default: ck]
    #[arg(long, global = true)]
    hopf: Option<String>,

    /// Coefficient ring: `rational` or `series:M` [default: rational]
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Output format [default: text for `trees`/`structure`, json for `char`]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the result to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the rooted trees of each order up to MAX_ORDER
    Trees { max_order: usize },
    /// Coproduct or antipode of a basis element
    Structure {
        element: String,
        #[arg(long, value_enum, default_value = "coproduct")]
        which: Which,
    },
    /// Character group and Lie algebra operations on JSON files
    #[command(subcommand)]
    Char(CharOp),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Coproduct,
    Antipode,
}

#[derive(Subcommand, Debug)]
pub enum CharOp {
    /// Convolution product of two characters
    Mul { left: PathBuf, right: PathBuf },
    /// Inverse of a character
    Inv { input: PathBuf },
    /// Exponential of an infinitesimal character
    Exp { input: PathBuf },
    /// Logarithm of a character
    Log { input: PathBuf },
    /// Lie bracket of two infinitesimal characters
    Bracket { left: PathBuf, right: PathBuf },
    /// Solve η' = η ⋆ γ, η(0) = 1 for a polynomial curve and report η(t)
    Evolve {
        curve: PathBuf,
        /// End time, a rational `p/q`
        #[arg(long, default_value = "1")]
        time: String,
    },
    /// Check a tree map or a functional against the symplectic ideal
    Symplectic { input: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        truncation: cli.global.truncation,
        hopf: cli.global.hopf,
        ring: cli.global.ring,
    };
    let result = match cli.command {
        Command::Trees { max_order } => {
            commands::trees(max_order, cli.global.format.unwrap_or(Format::Text))
        }
        Command::Structure { element, which } => commands::structure(
            &config,
            &element,
            which,
            cli.global.format.unwrap_or(Format::Text),
        ),
        Command::Char(op) => commands::char_op(&config, &op, cli.global.format.unwrap_or(Format::Json)),
    };
    let (text, code) = match result {
        Ok(out) => (out.text, out.code),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = if text.ends_with('\n') { text } else { text + "\n" };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                let e = CliError::Io(path.display().to_string(), e);
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code());
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
