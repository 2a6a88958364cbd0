use clap::Parser;
use gridwalk::cli::{execute, exit_code, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = execute(&cli) {
        eprintln!("gridwalk: {e}");
        std::process::exit(exit_code(&e));
    }
}
