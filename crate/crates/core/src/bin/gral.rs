use std::io::Write;

fn main() {
    let out = gral::cli::run(std::env::args_os());
    let mut stream: Box<dyn Write> = if out.status == 2 { Box::new(std::io::stderr()) } else { Box::new(std::io::stdout()) };
    let _ = stream.write_all(out.report.as_bytes());
    std::process::exit(out.status);
}
