//! Running CLI commands in-process and exporting in every format.
use hitstab::cli::run_args;

fn main() {
    for format in ["csv", "json", "md"] {
        let out = run_args([
            "hitstab",
            "--no-cache",
            "factors",
            "8",
            "4",
            "--format",
            format,
        ]);
        println!("--- {format} (exit {}) ---\n{}", out.code, out.stdout);
    }
}
