use std::io::Write;

fn main() {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = gwcount::cli::dispatch(std::env::args_os(), &mut lock);
    let _ = lock.flush();
    std::process::exit(code);
}
