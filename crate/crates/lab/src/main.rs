use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hometree_lab::experiments::run;
use hometree_lab::{ConfigFile, ExperimentConfig, ExperimentKind, LabResult, Verdict};

#[derive(Parser)]
#[command(name = "hometree-lab", version, about = "Experiments on homogeneous trees")]
struct Cli {
    #[command(subcommand)]
    experiment: ExperimentKind,

    /// JSON config; unknown keys are rejected
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory, overriding `output_path`
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed, overriding the config
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Suppress the summary on stdout
    #[arg(long, global = true)]
    quiet: bool,
}

fn execute(cli: &Cli) -> LabResult<Verdict> {
    let mut file = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    if let Some(seed) = cli.seed {
        file.seed = Some(seed);
    }
    if let Some(out) = &cli.out {
        file.output_path = Some(out.display().to_string());
    }
    let config = ExperimentConfig::resolve(cli.experiment, &file)?;
    let report = run(&config)?;
    report.write(&PathBuf::from(&config.output_path))?;
    if !cli.quiet {
        for check in &report.checks {
            println!(
                "{:<40} {:>24.16e} {:>4} {:<10.3e} {:?}",
                check.name,
                check.value,
                serde_json::to_value(check.relation)?.as_str().unwrap_or(""),
                check.threshold,
                check.verdict
            );
        }
        println!("{}: {:?} in {:.3}s", report.experiment, report.verdict, report.wall_time_s);
    }
    Ok(report.verdict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(Verdict::Fail) => ExitCode::from(2),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
