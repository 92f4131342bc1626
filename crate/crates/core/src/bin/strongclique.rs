use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = strongclique::cli::run_cli(std::env::args_os());
    if outcome.code == 2 {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.code as u8)
}
