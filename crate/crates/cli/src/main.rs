use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pixshuffle_cli::run(std::env::args_os()))
}
