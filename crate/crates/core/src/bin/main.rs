use std::io::Write;

fn main() {
    let (code, output) = clifford_cpt::cli_reporting::run_command(std::env::args_os());
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(output.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
