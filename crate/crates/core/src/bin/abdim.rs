use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use abdim::cli::{run_session, RunOptions, EXIT_COMPUTATION};
use clap::Parser;

/// Run a session file (`.abd`) or standard input.
#[derive(Parser)]
#[command(name = "abdim", version)]
struct Args {
    /// Session file; `-` or absent reads stdin.
    file: Option<PathBuf>,
    #[arg(long, env = "ABDIM_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    bound: usize,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    quiet: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let src = match &args.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let src = match src {
        Ok(s) => s,
        Err(e) => {
            eprintln!("abdim: cannot read input: {e}");
            return ExitCode::from(EXIT_COMPUTATION as u8);
        }
    };
    let opts = RunOptions {
        seed: args.seed,
        bound: args.bound,
        quiet: args.quiet,
    };
    let outcome = run_session(&src, &opts);
    print!("{}", outcome.text);
    for d in &outcome.diagnostics {
        eprintln!("abdim: {d}");
    }
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, outcome.json_string()) {
            eprintln!("abdim: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_COMPUTATION as u8);
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
