use std::io::Write;

fn main() {
    let report = ms4wb::cli::run(std::env::args());
    if !report.stdout.is_empty() {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "{}", report.stdout.trim_end());
    }
    if !report.summary.is_empty() {
        eprintln!("{}", report.summary.trim_end());
    }
    std::process::exit(report.exit_code);
}
