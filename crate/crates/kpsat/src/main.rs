use std::io;

fn main() {
    let stdin = io::stdin();
    let code = kpsat::cli::run(std::env::args_os(), &mut stdin.lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
