use std::io::Write;

fn main() {
    let seed = std::env::var(k0cat::cli::SEED_ENV).ok();
    let report = k0cat::cli::main_with_args(std::env::args_os(), seed.as_deref());
    print!("{}", report.stdout);
    eprint!("{}", report.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(report.exit_code);
}
