use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = factoria::cli::Cli::parse();
    let code = factoria::cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
