use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use epsymp_cli::{render, run, Cli, Failure, Format};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = run(&cli, &argv);
    if cli.timing {
        eprintln!("wall time {:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(outcome) => {
            if cli.format == Format::Json {
                eprint!("{}", outcome.summary);
            }
            let text = render(&outcome.report, &outcome.summary, cli.format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Certified(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
    }
}
