use std::process::ExitCode;

fn main() -> ExitCode {
    wpp::cli::run()
}
