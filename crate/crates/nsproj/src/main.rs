use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsproj::{evaluate, parse};
use nsproj_core::FieldConfig;

#[derive(Parser)]
#[command(
    name = "nsproj",
    version,
    about = "exact projective constructions over a truncated series field"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and evaluate a construction script
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Script path, or `-` to read from standard input
    file: String,
    /// Truncation order: how many series terms survive each operation
    #[arg(long, default_value_t = 8)]
    order: u32,
    /// Coefficient model
    #[arg(long, value_enum, default_value_t = Mode::Complex)]
    mode: Mode,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 1 when any assertion fails
    #[arg(long)]
    check: bool,
    /// Accept decimal literals, converting them to exact fractions
    #[arg(long)]
    allow_decimal: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Real,
    Complex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Cmd::Run(args) = cli.cmd;
    run(args)
}

fn run(args: RunArgs) -> ExitCode {
    if args.order == 0 {
        eprintln!("error: truncation order must be at least 1");
        return ExitCode::from(2);
    }
    let source = match read_source(&args.file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", args.file, e);
            return ExitCode::from(2);
        }
    };
    let program = match parse(&source, args.allow_decimal) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let cfg = match args.mode {
        Mode::Real => FieldConfig::real(args.order),
        Mode::Complex => FieldConfig::complex(args.order),
    };
    let report = evaluate(&program, cfg);
    match args.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.has_errors() {
        ExitCode::from(2)
    } else if args.check && report.has_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn read_source(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}
