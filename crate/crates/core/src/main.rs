use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(morava_bo::cli::main())
}
