fn main() {
    // Terminate quietly when a pipe closes (e.g. `stopred golay | head`)
    // instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(stopred::cli::run(std::env::args_os()));
}
