use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use lrcm_cli::*;

fn emit(text: &str, output: Option<&Path>) -> Result<(), lrcm::Error> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| lrcm::Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), lrcm::Error> {
    let opts = &cli.global;
    match &cli.command {
        Command::Components { input } => {
            let g = load_graph(input.as_deref(), opts)?;
            let report = components_report(&g, opts.index_base())?;
            if opts.verify {
                verify_components(&g, &report, opts.index_base())?;
                eprintln!("verified: {} components agree with the oracles", report.k);
            }
            emit(
                &render_components(&report, opts.format),
                opts.output.as_deref(),
            )
        }
        Command::Order { input } => {
            let g = load_graph(input.as_deref(), opts)?;
            let report = order_report(&g, opts.index_base())?;
            emit(&render_order(&report, opts.format), opts.output.as_deref())
        }
        Command::Bench(args) => {
            let out = run_bench(args)?;
            emit(&out.csv, opts.output.as_deref())?;
            if let Some(fit) = out.fit {
                eprintln!(
                    "fitted exponent beta = {:.4} (a = {:.4e}, residual = {:.4})",
                    fit.exponent, fit.coefficient, fit.residual
                );
                if let Some(path) = &args.summary {
                    emit(&format!("{}\n", fit_json(fit)), Some(path))?;
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
