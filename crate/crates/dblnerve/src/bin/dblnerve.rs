use std::io::Write;

use clap::Parser;
use dblnerve::cli::{run, Cli};

fn main() {
    let outcome = run(Cli::parse());
    let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
    // A closed pipe downstream is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    std::process::exit(outcome.code);
}
