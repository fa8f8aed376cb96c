mod cli;
mod commands;

use std::panic;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use cli::Cli;
use commands::{run, INTERNAL};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match panic::catch_unwind(panic::AssertUnwindSafe(|| run(cli.command))) {
        Ok(Ok(report)) => {
            if json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Ok(Err(e)) => {
            if json {
                println!("{}", json!({ "error": e.message, "code": e.code }));
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(INTERNAL)
        }
    }
}
