//! Run a job file through the library side of the `zeta` command.

use std::path::Path;

use curve_zeta::cli::{exit_code, render, run_job, JobSpec};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("jobs/example.toml");
    let spec = JobSpec::from_file(&path).unwrap_or_else(|e| panic!("{e}"));
    let reports = run_job(&spec).unwrap_or_else(|e| panic!("{e}"));
    for r in &reports {
        println!("{:<24} {:<8} passed {}", r.curve, r.task, r.passed);
    }
    println!("exit code {}", exit_code(&reports));
    let csv = render(&reports, curve_zeta::cli::Format::Csv);
    println!("{} csv rows", csv.lines().count() - 2);
}
