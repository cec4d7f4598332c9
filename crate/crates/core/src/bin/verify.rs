use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use galois_cremona::verifier::run_claims;

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Curve {
    A,
    APrime,
    B,
}

impl Curve {
    fn name(self) -> &'static str {
        match self {
            Curve::A => "a",
            Curve::APrime => "a-prime",
            Curve::B => "b",
        }
    }
}

/// Runs the registered claims and reports which ones meet their expectation.
#[derive(Parser)]
#[command(version)]
struct Cli {
    /// Claim id, `ALL`, or a prefix ending in `*`.
    #[arg(long, default_value = "ALL")]
    claim: String,
    /// Only claims about this builtin curve.
    #[arg(long, value_enum)]
    curve: Option<Curve>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> galois_cremona::Result<bool> {
        let report = run_claims(&cli.claim, cli.curve.map(Curve::name))?;
        let out = match cli.format {
            Format::Text => report.to_text(),
            Format::Json => report.to_json()?,
        };
        print!("{out}");
        if let Some(path) = &cli.report {
            std::fs::write(path, &out)?;
        }
        Ok(report.all_as_expected())
    };
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("verify: {e}");
            ExitCode::from(2)
        }
    }
}
