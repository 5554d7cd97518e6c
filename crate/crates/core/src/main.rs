use clap::Parser;

use elkies_lab::cli;

fn main() {
    let parsed = cli::Cli::parse();
    std::process::exit(cli::run(parsed));
}
