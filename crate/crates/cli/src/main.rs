mod args;
mod commands;
mod error;
mod record;
mod sweep;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn configure_threads() {
    let Ok(raw) = std::env::var("NSG_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // Fails only if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("warning: ignoring NSG_THREADS={raw:?}"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    configure_threads();
    let json = cli.json;
    let result = match &cli.command {
        Command::Analyze { gens } => commands::analyze(gens, json),
        Command::Family { kind } => commands::family(kind, json),
        Command::Glue { s1, s2, lambda, mu } => commands::glue_cmd(s1, s2, *lambda, *mu, json),
        Command::Dup { gens, ideal, d } => commands::dup_cmd(gens, ideal, *d, json),
        Command::Verify(args) => commands::verify(args),
        Command::Sweep { kind, out } => sweep::sweep(kind, out.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
