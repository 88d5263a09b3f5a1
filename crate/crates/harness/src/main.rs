use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hconv::cli::{Cli, Command};
use hconv::fixtures::write_fixtures;
use hconv::report::{row_line, summary_line};
use hconv::{run, HarnessError, Mode, RunConfig, Status};

fn execute(cli: Cli) -> Result<Status, HarnessError> {
    let (mode, args) = match cli.command {
        Command::Fixtures { out } => {
            for path in write_fixtures(&out)? {
                println!("wrote {}", path.display());
            }
            return Ok(Status::Pass);
        }
        Command::Verify(a) => (Mode::Verify, a),
        Command::Explore(a) => (Mode::Explore, a),
        Command::Plot(a) => (Mode::Plot, a),
    };
    let cfg = RunConfig::build(mode, &args)?;
    let outcome = run(&cfg)?;
    for (id, row) in outcome.rows.iter().enumerate() {
        println!("{}", row_line(id, row));
    }
    println!("{}", summary_line(&outcome.rows));
    for path in &outcome.files {
        println!("wrote {}", path.display());
    }
    Ok(outcome.status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(Status::InvalidConfig.code()),
            };
        }
    };
    match execute(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status().code())
        }
    }
}
