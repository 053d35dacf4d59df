use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = twisted_doubles::cli::run_args(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr);
    }
    ExitCode::from(out.code as u8)
}
