use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use qmst_cli::args::Cli;
use qmst_cli::commands::{error_report, ExitStatus};
use qmst_cli::{run, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(ExitStatus::Error.code() as u8);
        }
    };
    let start = Instant::now();
    let report = run(&cli.to_command(), &cli.options()).unwrap_or_else(|e| error_report(&e));
    let elapsed = (!cli.no_timing).then(|| start.elapsed());
    let out = report.render(cli.format, elapsed);
    if report.status == ExitStatus::Error && cli.format == Format::Text {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(report.status.code() as u8)
}
