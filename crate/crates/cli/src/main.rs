use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wcpkit_cli::fixture_docs;

#[derive(Parser)]
#[command(name = "wcpkit", version, about = "Check weak crossed product specs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a spec file and print a text report.
    Check { file: PathBuf },
    /// Run a spec file and print the report in the chosen format.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Built-in fixtures as spec files.
    Fixtures {
        #[command(subcommand)]
        command: FixtureCommand,
    },
}

#[derive(Subcommand)]
enum FixtureCommand {
    /// Print the spec file of a fixture.
    Emit { name: String },
    /// List fixture names.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn run_file(file: &PathBuf, format: Format) -> u8 {
    let src = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return 2;
        }
    };
    match wcpkit_cli::run_source(&src) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.to_json_string()),
                Format::Text => print!("{}", report.to_text()),
            }
            report.exit_code() as u8
        }
        Err(e) => {
            eprintln!("error: {}:{e}", file.display());
            2
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { file } => run_file(&file, Format::Text),
        Command::Report { file, format } => run_file(&file, format),
        Command::Fixtures {
            command: FixtureCommand::List,
        } => {
            for n in fixture_docs::emit_names() {
                println!("{n}");
            }
            0
        }
        Command::Fixtures {
            command: FixtureCommand::Emit { name },
        } => match fixture_docs::document_by_name(&name) {
            Ok(doc) => {
                print!("{}", wcpkit_cli::serialize(&doc));
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    };
    ExitCode::from(code)
}
