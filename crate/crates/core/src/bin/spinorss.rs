use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spinorss::cli::{self, CommandOutput, EXIT_INPUT};

/// Exact semi-symmetry classifier for curvature spinors.
#[derive(Parser)]
#[command(name = "spinorss", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify curvature data from a JSON input file.
    Classify {
        file: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        machine: bool,
    },
    /// Check the commutator and contraction identities symbolically.
    VerifyIdentities,
    /// Print the Petrov type by Ricci pattern table.
    Table {
        /// Compare against a stored rendering and fail on any difference.
        #[arg(long)]
        golden: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
    /// Solve the linear conditions on Phi for a standard Weyl spinor.
    Kernel {
        #[arg(long)]
        petrov: String,
        #[arg(long, default_value = "S1")]
        which: String,
        #[arg(long)]
        machine: bool,
    },
}

fn read(path: &PathBuf) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| CommandOutput {
        stdout: format!("error: cannot read {}: {e}\n", path.display()),
        code: EXIT_INPUT,
    })
}

fn run(args: Args) -> CommandOutput {
    match args.command {
        Command::Classify { file, machine } => match read(&file) {
            Ok(text) => cli::cmd_classify_text(&text, machine),
            Err(e) => e,
        },
        Command::VerifyIdentities => cli::cmd_verify_identities(),
        Command::Table { golden, machine } => {
            let expected = match golden.as_ref().map(read).transpose() {
                Ok(g) => g,
                Err(e) => return e,
            };
            cli::cmd_table(expected.as_deref(), machine)
        }
        Command::Kernel { petrov, which, machine } => cli::cmd_kernel(&petrov, &which, machine),
    }
}

fn main() -> ExitCode {
    let out = run(Args::parse());
    if out.code == EXIT_INPUT {
        eprint!("{}", out.stdout);
    } else {
        print!("{}", out.stdout);
    }
    ExitCode::from(out.code as u8)
}
