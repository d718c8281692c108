use std::process::ExitCode;

fn main() -> ExitCode {
    // Default SIGPIPE handling so piping into `head` terminates quietly.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let argv: Vec<String> = std::env::args().collect();
    let code = orbiring::cli::run(&argv, &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(code as u8)
}
