use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rug::Rational;

use holofourier::model::{parse_vector, DescriptorFile};
use holofourier::report::{emit_stokes_svg, run, Command, Format, RunConfig};
use holofourier::{Error, Result, Settings};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Validate,
    Rank,
    Omega,
    Discriminant,
    Profile,
    Puiseux,
    Boundary,
    Infinity,
    Stokes,
    Chi,
    Multiplicity,
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Text,
    Structured,
}

/// Fourier-transform invariants of regular holonomic D-modules.
#[derive(Parser, Debug)]
#[command(version)]
struct Cli {
    #[arg(value_enum)]
    command: Cmd,
    /// Descriptor file (JSON).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 128)]
    precision: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Fmt::Text)]
    format: Fmt,
    /// Write the Stokes arrangement as SVG (stokes command).
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    slice: Option<String>,
    /// Truncation order override for slice expansions.
    #[arg(long)]
    truncation: Option<String>,
    #[arg(long)]
    w: Option<String>,
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    v0: Option<String>,
}

fn command(c: Cmd) -> Command {
    match c {
        Cmd::Validate => Command::Validate,
        Cmd::Rank => Command::Rank,
        Cmd::Omega => Command::Omega,
        Cmd::Discriminant => Command::Discriminant,
        Cmd::Profile => Command::Profile,
        Cmd::Puiseux => Command::Puiseux,
        Cmd::Boundary => Command::Boundary,
        Cmd::Infinity => Command::Infinity,
        Cmd::Stokes => Command::Stokes,
        Cmd::Chi => Command::Chi,
        Cmd::Multiplicity => Command::Multiplicity,
        Cmd::Report => Command::Report,
    }
}

/// Rendered output and whether validation found problems.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let file = DescriptorFile::read(&cli.input)?;
    let n = file.descriptor.dim;
    let vec = |s: &Option<String>| s.as_deref().map(|s| parse_vector(s, n)).transpose();
    let mut cfg = RunConfig::new(command(cli.command));
    cfg.settings = Settings::new(cli.precision, cli.seed);
    cfg.format = match cli.format {
        Fmt::Text => Format::Text,
        Fmt::Structured => Format::Structured,
    };
    cfg.slice = cli.slice.clone();
    cfg.w = vec(&cli.w)?;
    cfg.v = vec(&cli.v)?;
    cfg.v0 = vec(&cli.v0)?;
    cfg.truncation = match &cli.truncation {
        Some(t) => Some(t.parse::<Rational>().map_err(|e| Error::Parse { location: "--truncation".into(), message: e.to_string() })?),
        None => None,
    };
    if cli.svg.is_some() && !matches!(cfg.command, Command::Stokes | Command::Report) {
        return Err(Error::Precondition("--svg applies to the stokes command".into()));
    }
    let rep = run(&file, &cfg)?;
    if let (Some(path), Some(a)) = (&cli.svg, rep.stokes.first()) {
        emit_stokes_svg(a, path)?;
    }
    let invalid = rep.diagnostics.as_ref().is_some_and(|d| !d.is_empty());
    Ok((rep.render(cfg.format), invalid))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((out, invalid)) => {
            // a closed pipe is not an error of ours
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if invalid {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
