//! `monocat`: load Cayley tables and category files, run the constructions
//! and checks from the `monocat` library, and report in text or JSON.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{status_of, Outcome};
use report::{Report, Status};

#[derive(Parser, Debug)]
#[command(name = "monocat", version, about = "Finite monoids, their kernels and two-object categories")]
struct Cli {
    /// Write the JSON report to this path (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Suppress the text report.
    #[arg(long, global = true)]
    quiet: bool,
    /// Seed for sampled corpus families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a Cayley table and check associativity and the declared identity.
    Validate { file: PathBuf },
    /// Kernel, minimal one-sided ideals, their group and the cardinality identities.
    Kernel { file: PathBuf },
    /// Build or check a two-object category.
    #[command(subcommand)]
    Category(CategoryCommand),
    /// Recover the simple semigroup `LR` from a category file.
    Extract {
        file: PathBuf,
        /// Cayley file of the monoid the category was built from.
        #[arg(long)]
        monoid: Option<PathBuf>,
    },
    /// Rees matrix decomposition of a simple semigroup, or of the kernel otherwise.
    Rees { file: PathBuf },
    /// Tensor product of two bimodule files.
    Tensor { x: PathBuf, y: PathBuf },
    /// Compose two categories sharing a middle monoid.
    Compose { first: PathBuf, second: PathBuf },
    /// Decide whether two monoids are connected and build a witness category.
    Connect {
        a: PathBuf,
        b: PathBuf,
        /// Write the witness category here when one exists.
        #[arg(long, value_name = "PATH")]
        witness: Option<PathBuf>,
    },
    /// Write a corpus of Cayley files: `standard` or a family such as `band:2:3`.
    Corpus {
        spec: String,
        #[arg(long, default_value = "corpus")]
        out: PathBuf,
    },
    /// Run every criterion over a directory of Cayley files.
    Suite { dir: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CategoryCommand {
    /// Build the category of a monoid (the groupoid for a group).
    Build {
        file: PathBuf,
        /// Write the bare category file here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Validate a category file and run the action and bijection checks.
    Check { file: PathBuf },
}

fn show(p: &std::path::Path) -> String {
    p.display().to_string()
}

fn dispatch(cli: &Cli) -> (String, Vec<String>, Outcome) {
    match &cli.command {
        Command::Validate { file } => ("validate".into(), vec![show(file)], commands::validate(file)),
        Command::Kernel { file } => ("kernel".into(), vec![show(file)], commands::kernel_cmd(file)),
        Command::Category(CategoryCommand::Build { file, out }) => {
            ("category build".into(), vec![show(file)], commands::category_build(file, out.as_deref()))
        }
        Command::Category(CategoryCommand::Check { file }) => {
            ("category check".into(), vec![show(file)], commands::category_check(file))
        }
        Command::Extract { file, monoid } => {
            let mut inputs = vec![show(file)];
            inputs.extend(monoid.iter().map(|m| show(m)));
            ("extract".into(), inputs, commands::extract(file, monoid.as_deref()))
        }
        Command::Rees { file } => ("rees".into(), vec![show(file)], commands::rees(file)),
        Command::Tensor { x, y } => ("tensor".into(), vec![show(x), show(y)], commands::tensor_cmd(x, y)),
        Command::Compose { first, second } => {
            ("compose".into(), vec![show(first), show(second)], commands::compose(first, second))
        }
        Command::Connect { a, b, witness } => {
            ("connect".into(), vec![show(a), show(b)], commands::connect(a, b, witness.as_deref()))
        }
        Command::Corpus { spec, out } => ("corpus".into(), vec![spec.clone()], commands::corpus(spec, cli.seed, out)),
        Command::Suite { dir } => ("suite".into(), vec![show(dir)], commands::suite(dir)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, inputs, outcome) = dispatch(&cli);
    let (status, results) = match outcome {
        Ok(results) => (status_of(&results), results),
        Err(f) => (f.status, f.to_value()),
    };
    let report = Report { command, inputs, status, results };

    let mut status = report.status;
    let to_stdout = cli.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    match &cli.json {
        Some(_) if to_stdout => print!("{}", report.to_json()),
        Some(path) => {
            if let Err(f) = commands::write(path, &report.to_json()) {
                eprintln!("{}", f.message);
                status = Status::Error;
            }
        }
        None => {}
    }
    if !cli.quiet && !to_stdout {
        print!("{}", report.to_text());
    }
    if let Some(line) = failure_line(&report) {
        eprintln!("{line}");
    }
    ExitCode::from(status.exit_code() as u8)
}

/// A one-line diagnostic on stderr for failed runs.
fn failure_line(report: &Report) -> Option<String> {
    if report.status == Status::Ok {
        return None;
    }
    if let Some(detail) = report.results.pointer("/error/detail").and_then(|v| v.as_str()) {
        return Some(format!("error: {detail}"));
    }
    let first = report
        .results
        .get("checks")
        .and_then(|c| c.as_object())
        .and_then(|m| m.iter().find(|(_, v)| v.as_str().is_some_and(|s| s.starts_with("fail"))))
        .map(|(k, v)| format!("{k}: {}", v.as_str().unwrap_or_default()));
    Some(format!("violation: {}", first.unwrap_or_default()))
}
