use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(kratzer::cli::run().clamp(0, 255) as u8)
}
