use std::io::Write;

fn main() {
    let outcome = match fracnet_cli::parse_args(std::env::args_os()) {
        Ok(cli) => fracnet_cli::run(&cli),
        Err(o) => o,
    };
    let mut out = std::io::stdout().lock();
    // A closed pipe is not worth a panic.
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    std::process::exit(outcome.code);
}
