use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use lbraid_cli::{fixtures, parse, run, serialize, InputError, Options};

/// Verify and construct braided crossed modules and braided categorical
/// Leibniz algebras given by structure constants.
#[derive(Parser, Debug)]
#[command(name = "leibniz-braid", version)]
struct Cli {
    /// check | construct | roundtrip | tensor | lieize
    command: String,
    /// Verifier, functor or quotient kind, then the target name (or `all-fixtures`).
    args: Vec<String>,
    /// Workspace document; the shipped fixtures when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Directory of golden files compared by `tensor`.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Workspace file for `construct`/`lieize`, golden directory for
    /// `tensor`, report file otherwise.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Seed for the randomized spot checks of `check leibniz`.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write(path: &PathBuf, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError::Io(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli) -> Result<u8, InputError> {
    let ws = match &cli.input {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| InputError::Io(format!("{}: {e}", p.display())))?;
            parse(&text)?
        }
        None => fixtures::builtin(),
    };
    let opts = Options { golden: cli.golden.clone(), seed: cli.seed };
    let outcome = run(&cli.command, &cli.args, &ws, &opts)?;
    let mut report = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    report.push('\n');
    print!("{report}");
    if let Some(out) = &cli.output {
        if let Some(next) = &outcome.workspace {
            write(out, &serialize(next))?;
        } else if cli.command == "tensor" {
            std::fs::create_dir_all(out).map_err(|e| InputError::Io(format!("{}: {e}", out.display())))?;
            for (file, doc) in &outcome.golden {
                write(&out.join(file), doc)?;
            }
        } else {
            write(out, &report)?;
        }
    }
    if !outcome.report.passed() {
        eprintln!("{}", outcome.report.summary());
    }
    Ok(outcome.exit_code() as u8)
}
