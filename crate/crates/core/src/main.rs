use std::process::ExitCode;

fn main() -> ExitCode {
    qoperator::cli::main_entry(std::env::args_os())
}
