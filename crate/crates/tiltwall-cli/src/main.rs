use std::io::{stderr, stdout};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = tiltwall_cli::run_with(&argv, &mut stdout(), &mut stderr());
    std::process::exit(code);
}
