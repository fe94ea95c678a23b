use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = zagraph::cli::run_command(&args, &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code)
}
