use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dp_scout::config::{BackendKind, PipelineConfig};
use dp_scout::pipeline::{self, PipelineError};

const EXIT_DATA: u8 = 1;
const EXIT_USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dp-scout",
    version,
    about = "One-shot LLM design pattern detection and scoring"
)]
struct Cli {
    /// Pipeline config (JSON).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendKind>,
    #[arg(long, global = true)]
    cassette: Option<PathBuf>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Skip source files that fail to lex instead of aborting.
    #[arg(long, global = true)]
    lenient: bool,
    #[arg(long, global = true)]
    allow_same_project: bool,
    /// Restrict the run to one configured model.
    #[arg(long, global = true)]
    model: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Check paths, index projects and list the usable instances.
    Validate,
    /// Pair instances and render prompts.
    Plan,
    /// Send planned prompts through the selected backend.
    Run,
    /// Parse responses and compute metrics.
    Eval,
    /// Render Markdown and CSV tables.
    Report,
}

fn load(cli: &Cli) -> Result<PipelineConfig, PipelineError> {
    let path = cli.config.as_ref().expect("checked in main");
    let mut config = PipelineConfig::read(path)?;
    if let Some(b) = cli.backend {
        config.backend = b;
    }
    if let Some(c) = &cli.cassette {
        config.cassette = Some(c.clone());
    }
    if let Some(o) = &cli.out {
        config.out = o.clone();
    }
    config.lenient |= cli.lenient;
    config.allow_same_project |= cli.allow_same_project;
    if let Some(m) = &cli.model {
        config.select_model(m)?;
    }
    config.validate()?;
    Ok(config)
}

fn execute(cli: &Cli) -> Result<u8, PipelineError> {
    let config = load(cli)?;
    match cli.command {
        Command::Validate => {
            let report = pipeline::cmd_validate(&config)?;
            print!("{}", report.to_markdown());
            return Ok(if report.is_clean() { 0 } else { EXIT_DATA });
        }
        Command::Plan => {
            let s = pipeline::cmd_plan(&config)?;
            println!(
                "planned {} runs ({} pairs excluded, {} instances dropped)",
                s.runs, s.excluded, s.dropped
            );
        }
        Command::Run => {
            let s = pipeline::cmd_run(&config)?;
            println!(
                "completed {} requests ({} reused from the run store)",
                s.completed, s.reused
            );
        }
        Command::Eval => {
            let s = pipeline::cmd_eval(&config)?;
            println!("scored {} runs ({} units)", s.runs, s.units);
        }
        Command::Report => {
            for path in pipeline::cmd_report(&config)? {
                println!("{}", path.display());
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.config.is_none() {
        eprintln!("error: --config <PATH> is required");
        return ExitCode::from(EXIT_USAGE);
    }
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
