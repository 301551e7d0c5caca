//! Command line interface over the exact construction: the octonion
//! multiplication table, the integral basis and its structure constants, the
//! seven-dimensional action, generated modules, and the verification suites.

mod model;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octo_g2_core::verify::SUITE_NAMES;

/// Largest tensor degree the module generator accepts.
const DEGREE_CEILING: usize = 12;

#[derive(Parser)]
#[command(
    name = "octo-g2",
    version,
    about = "Exact construction of the fourteen-dimensional derivation algebra \
             of the complex octonions, with integer structure constants and \
             generated modules"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write the output to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eight-by-eight octonion basis multiplication table
    Multable,
    /// List the twelve roots with lengths, twists, and coordinates
    Roots,
    /// Print the fourteen basis elements as combinations of derivation pairs
    Chevalley {
        /// Include the full eight-by-eight operator matrices
        #[arg(long)]
        matrices: bool,
    },
    /// Print every nonzero bracket of the integral basis
    Structure,
    /// Show how each root vector moves the seven weight vectors
    ActionTable,
    /// Describe the kernel of the pair-to-derivation map
    Kernel,
    /// Generate the module with the given highest weight and report on it
    Irrep {
        /// Multiplicity of the first fundamental weight (the
        /// seven-dimensional module)
        a: usize,
        /// Multiplicity of the second fundamental weight (the adjoint
        /// module)
        b: usize,
        /// Include the weight multiplicity table
        #[arg(long)]
        weights: bool,
        /// Refuse highest weights that need a tensor degree above this bound
        #[arg(long, value_name = "N", default_value_t = 4)]
        max_degree: usize,
    },
    /// Run the exact verification suites
    Verify {
        /// Suite name, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the frozen conventions the other commands rely on
    Conventions,
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut rendered = serde_json::to_string_pretty(value).expect("serializable model");
    rendered.push('\n');
    rendered
}

/// Builds the rendered output and the process status for one command.
/// `Err` carries a usage-level complaint (exit status 2).
fn build_output(command: &Command, format: Format) -> Result<(String, u8), String> {
    let rendered = match command {
        Command::Multable => {
            let table = model::multiplication_table();
            match format {
                Format::Text => render::multable_text(&table),
                Format::Json => json(&table),
                Format::Csv => render::multable_csv(&table),
            }
        }
        Command::Roots => {
            let roots = model::root_table();
            match format {
                Format::Text => render::roots_text(&roots),
                Format::Json => json(&roots),
                Format::Csv => render::roots_csv(&roots),
            }
        }
        Command::Chevalley { matrices } => {
            let elements = model::chevalley_elements(*matrices);
            match format {
                Format::Text => render::chevalley_text(&elements),
                Format::Json => json(&elements),
                Format::Csv => render::chevalley_csv(&elements, *matrices),
            }
        }
        Command::Structure => {
            let table = model::structure_table();
            match format {
                Format::Text => render::structure_text(&table),
                Format::Json => json(&table),
                Format::Csv => render::structure_csv(&table),
            }
        }
        Command::ActionTable => {
            let rows = model::action_table();
            match format {
                Format::Text => render::action_table_text(&rows),
                Format::Json => json(&rows),
                Format::Csv => render::action_table_csv(&rows),
            }
        }
        Command::Kernel => {
            let report = model::kernel_report();
            match format {
                Format::Text => render::kernel_text(&report),
                Format::Json => json(&report),
                Format::Csv => render::kernel_csv(&report),
            }
        }
        Command::Irrep { a, b, weights, max_degree } => {
            let degree = a + 2 * b;
            if degree > *max_degree {
                return Err(format!(
                    "highest weight ({a}, {b}) needs tensor degree {degree}, \
                     above the requested --max-degree {max_degree}"
                ));
            }
            if degree > DEGREE_CEILING {
                return Err(format!(
                    "highest weight ({a}, {b}) needs tensor degree {degree}, \
                     above the supported maximum of {DEGREE_CEILING}"
                ));
            }
            let report = model::irrep_report(*a, *b, *weights);
            match format {
                Format::Text => render::irrep_text(&report),
                Format::Json => json(&report),
                Format::Csv => render::irrep_csv(&report),
            }
        }
        Command::Verify { suite } => {
            let report = model::verify_report(suite).ok_or_else(|| {
                format!(
                    "unknown suite '{suite}'; expected `all` or one of: {}",
                    SUITE_NAMES.join(", ")
                )
            })?;
            let status = u8::from(!report.passed);
            let rendered = match format {
                Format::Text => render::verify_text(&report),
                Format::Json => json(&report),
                Format::Csv => render::verify_csv(&report),
            };
            return Ok((rendered, status));
        }
        Command::Conventions => {
            let conventions = model::conventions();
            match format {
                Format::Text => render::conventions_text(&conventions),
                Format::Json => json(&conventions),
                Format::Csv => render::conventions_csv(&conventions),
            }
        }
    };
    Ok((rendered, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (payload, status) = match build_output(&cli.command, cli.format) {
        Ok(result) => result,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.output {
        if let Err(err) = std::fs::write(path, payload.as_bytes()) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(1);
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        let written = stdout.write_all(payload.as_bytes()).and_then(|()| stdout.flush());
        if let Err(err) = written {
            if err.kind() != std::io::ErrorKind::BrokenPipe {
                eprintln!("error: cannot write to standard output: {err}");
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::from(status)
}
