use std::io;
use std::process::ExitCode;

use cgint::{cmd_family, cmd_list, cmd_verify, Format, UsageError, EXIT_USAGE};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cgint", version, about = "Verify elliptic integral identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog entries as id, anchor and description.
    List {
        #[arg(long)]
        tag: Option<String>,
    },
    /// Check catalog entries against their closed forms.
    Verify {
        /// Glob over entry ids, e.g. 'wz*'.
        #[arg(long)]
        id: Option<String>,
        /// Relative tolerance replacing every entry's own, in [1e-12, 1e-2].
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
        /// Maximum tanh-sinh level, 3 to 16.
        #[arg(long)]
        quad_levels: Option<u32>,
    },
    /// Evaluate one member of the parametric family.
    Family {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::List { tag } => cmd_list(tag.as_deref(), &mut out).map_err(Into::into),
        Command::Verify {
            id,
            tol,
            format,
            quad_levels,
        } => {
            let format = match format {
                OutputFormat::Table => Format::Table,
                OutputFormat::Json => Format::Json,
            };
            cmd_verify(id.as_deref(), tol, format, quad_levels, &mut out)
        }
        Command::Family { alpha, tol } => cmd_family(alpha, tol, &mut out),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("cgint: {e}");
            if e.is::<UsageError>() {
                ExitCode::from(EXIT_USAGE as u8)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
