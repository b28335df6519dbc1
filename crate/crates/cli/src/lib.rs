//! `esnorm` command-line interface.
//!
//! Exit codes: 0 on success, 1 when a determinant has no root or a
//! verification fails, 2 on bad arguments. Data goes to stdout, diagnostics to
//! stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use esnorm_core::det_theory::{classify, det_tower_closed};
use esnorm_core::generators::gen_tower;
use esnorm_core::oracle::sweep_primes;
use esnorm_core::ntheory::primes_up_to;
use esnorm_core::sl_scaling::scale_tower_to_sl;
use esnorm_core::{CaseParams, Error, Family, Field, GeneratorId, MatrixFq, Verdict, DEFAULT_MAX_Q};

/// Environment variable overriding the largest accepted field order.
pub const MAX_Q_ENV: &str = "ESNORM_MAX_Q";

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "esnorm", version, about = "U/V/W generators over finite fields: determinants, roots, SL scaling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a tower matrix.
    Gen(TowerArgs),
    /// Print closed-form and elimination determinants of a tower matrix.
    Det(TowerArgs),
    /// Print the d-th root classification as JSON.
    Classify(CaseArgs),
    /// Print the tower matrix scaled into SL(d, q).
    Scale(TowerArgs),
    /// Check closed forms and classifications over a parameter sweep.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct CaseArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    e: u32,
    #[arg(long)]
    r: u64,
    #[arg(long)]
    m: u32,
    #[arg(long, value_parser = parse_family)]
    family: Family,
}

#[derive(Debug, Args)]
struct TowerArgs {
    #[command(flatten)]
    case: CaseArgs,
    #[arg(long, default_value_t = 1)]
    i: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long = "p-max")]
    p_max: u64,
    #[arg(long = "e-max")]
    e_max: u32,
    #[arg(long = "d-max")]
    d_max: u64,
    /// Write one JSON record per case to this file.
    #[arg(long)]
    jsonl: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::NoRoot { .. } => Failure::Failed(err.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::Failed(format!("i/o error: {err}"))
    }
}

type CmdResult = Result<u8, Failure>;

fn max_q() -> Result<u64, Failure> {
    match std::env::var(MAX_Q_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_Q_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_Q),
    }
}

impl CaseArgs {
    fn field(&self) -> Result<Field, Failure> {
        Ok(Field::with_bound(self.p, self.e, max_q()?)?)
    }

    fn params(&self) -> Result<CaseParams, Failure> {
        let field = self.field()?;
        let params = CaseParams::new(&field, self.r, self.m)?;
        if self.m < self.family.min_m() {
            return Err(Error::BadM {
                m: self.m,
                min: self.family.min_m(),
            }
            .into());
        }
        Ok(params)
    }
}

impl TowerArgs {
    fn id(&self) -> Result<GeneratorId, Failure> {
        let field = self.case.field()?;
        Ok(GeneratorId::new(&field, self.case.family, self.case.r, self.case.m, self.i)?)
    }
}

fn write_matrix(out: &mut dyn Write, matrix: &MatrixFq, format: Format) -> std::io::Result<()> {
    match format {
        Format::Text => out.write_all(matrix.to_text().as_bytes()),
        Format::Json => writeln!(out, "{}", matrix.to_json()),
    }
}

fn cmd_gen(args: &TowerArgs, out: &mut dyn Write) -> CmdResult {
    let matrix = gen_tower(&args.id()?)?;
    write_matrix(out, &matrix, args.format)?;
    Ok(EXIT_OK)
}

fn cmd_det(args: &TowerArgs, out: &mut dyn Write) -> CmdResult {
    let id = args.id()?;
    let params = CaseParams::new(id.field(), id.r(), id.m())?;
    let closed = det_tower_closed(id.family(), &params)?;
    let direct = gen_tower(&id)?.det()?;
    let agree = closed == direct;
    match args.format {
        Format::Text => {
            writeln!(out, "closed_form: {closed}")?;
            writeln!(out, "elimination: {direct}")?;
            writeln!(out, "agree: {agree}")?;
        }
        Format::Json => {
            let value = serde_json::json!({
                "closed_form": closed.repr(),
                "elimination": direct.repr(),
                "agree": agree,
            });
            writeln!(out, "{value}")?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_classify(args: &CaseArgs, out: &mut dyn Write) -> CmdResult {
    let params = args.params()?;
    let class = classify(args.family, &params)?;
    writeln!(out, "{}", class.to_json())?;
    Ok(if class.verdict == Verdict::NoRoot {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn cmd_scale(args: &TowerArgs, out: &mut dyn Write) -> CmdResult {
    let matrix = scale_tower_to_sl(&args.id()?)?;
    write_matrix(out, &matrix, args.format)?;
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> CmdResult {
    if args.p_max == 0 || args.e_max == 0 || args.d_max == 0 {
        return Err(Failure::Usage("sweep bounds must be positive".into()));
    }
    let report = sweep_primes(&primes_up_to(args.p_max), args.e_max, args.d_max, max_q()?);
    if let Some(path) = &args.jsonl {
        fs::write(path, report.to_jsonl())?;
    }
    out.write_all(report.summary_table().as_bytes())?;
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_FAILURE })
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Det(a) => cmd_det(a, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Scale(a) => cmd_scale(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}
