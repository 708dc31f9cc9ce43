use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use curve_zeta::cli::{
    exit_code, parse_curve_arg, render, run_job, write_reports, CurveSpec, Format, InputError, JobSpec, Task,
};

#[derive(Parser)]
#[command(name = "zeta", version, about = "Zeta functions of curves over finite fields")]
struct Cli {
    /// Root-finding and RH tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write one report file per curve and task here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Curves {
    /// TOML job file; only its curves are used.
    #[arg(long)]
    input: Option<PathBuf>,
    /// `elliptic:Q:A`, `coeffs:Q:A0,A1,..`, `counts:Q:G:N1,..`,
    /// `model:KIND:Q:F0,F1,..` or `corpus:NAME`.
    #[arg(long)]
    curve: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task of a job file.
    Run {
        #[arg(long)]
        input: PathBuf,
    },
    Artin(Curves),
    Invariants(Curves),
    Rank2(Curves),
    Slr {
        #[command(flatten)]
        curves: Curves,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    Mass {
        #[command(flatten)]
        curves: Curves,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        degree: i64,
    },
    Yoshida {
        #[command(flatten)]
        curves: Curves,
        #[arg(long)]
        counterexample: bool,
    },
    RhReport {
        #[command(flatten)]
        curves: Curves,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
}

fn job_for(curves: Curves, task: Task) -> Result<JobSpec, InputError> {
    let mut list: Vec<CurveSpec> = match &curves.input {
        Some(p) => JobSpec::from_file(p)?.curves,
        None => Vec::new(),
    };
    for c in &curves.curve {
        list.push(parse_curve_arg(c)?);
    }
    Ok(JobSpec {
        curves: list,
        tasks: vec![task],
        ranks: vec![2],
        tolerance: 1e-9,
        format: Format::Json,
        degree: 0,
        counterexample: false,
    })
}

fn build(cli: Cli) -> Result<(JobSpec, Option<PathBuf>), InputError> {
    let mut spec = match cli.command {
        Command::Run { input } => JobSpec::from_file(&input)?,
        Command::Artin(c) => job_for(c, Task::Artin)?,
        Command::Invariants(c) => job_for(c, Task::Invariants)?,
        Command::Rank2(c) => job_for(c, Task::Rank2)?,
        Command::Slr { curves, rank } => JobSpec {
            ranks: vec![rank],
            ..job_for(curves, Task::Slr)?
        },
        Command::Mass { curves, rank, degree } => JobSpec {
            ranks: vec![rank],
            degree,
            ..job_for(curves, Task::Mass)?
        },
        Command::Yoshida {
            curves,
            counterexample,
        } => JobSpec {
            counterexample,
            ..job_for(curves, Task::Yoshida)?
        },
        Command::RhReport { curves, rank } => JobSpec {
            ranks: vec![rank],
            ..job_for(curves, Task::RhReport)?
        },
    };
    if let Some(t) = cli.tolerance {
        spec.tolerance = t;
    }
    if let Some(f) = cli.format {
        spec.format = f;
    }
    Ok((spec, cli.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = build(cli).and_then(|(spec, out)| {
        let reports = run_job(&spec)?;
        if let Some(dir) = out {
            write_reports(&dir, &reports, spec.format)?;
        }
        print!("{}", render(&reports, spec.format));
        Ok(exit_code(&reports))
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("zeta: {e}");
            ExitCode::from(2)
        }
    }
}
