//! Command-line parsing, dispatch and exit codes.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use frobenius_core::{count_standard_monomials, Error, InitialModule, RingContext, DEFAULT_CAP};
use serde_json::Value;

use crate::parse::{parse_session, ParseError, Session};
use crate::report::{self, ModuleReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "frob", version, about = "Gröbner bases and Hilbert series for rings of Frobenius operators")]
pub struct Cli {
    /// Session file with ring, ideal, fmodule and option statements (`-` for stdin).
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest Schreyer degree processed by Buchberger runs.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Exit with status 0 even when a run stops at the cap.
    #[arg(long, global = true)]
    pub allow_truncated: bool,
    /// Number of series coefficients to print.
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Characteristic, for commands that need no session.
    #[arg(short, global = true)]
    pub p: Option<u64>,
    /// Number of variables, for commands that need no session.
    #[arg(short, global = true)]
    pub n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full analysis of a named ideal or fmodule.
    Analyze { name: String },
    /// Reduced Gröbner basis and initial module.
    Gb { name: String },
    /// Hilbert series and its first coefficients.
    Hilbert { name: String },
    /// Hilbert series of the associated graded ring itself.
    RingHs,
    /// Compares enumerated monomial counts with the series of the ring.
    VerifyDe {
        #[arg(long, default_value_t = 12)]
        degree: u32,
    },
    /// Number of standard monomials of a degree (of the ring, or of a named quotient).
    Count { degree: i64, name: Option<String> },
    /// Prints the JSON schema of the reports.
    Schema,
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    Io(String),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Core(Error::InvariantViolation(_)) => EXIT_INVARIANT,
            _ => EXIT_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error: {e}"),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// What a command produced, before formatting.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub truncated: bool,
    /// A cross-check inside the command failed.
    pub check_failed: bool,
}

struct Settings {
    json: bool,
    cap: u32,
    allow_truncated: bool,
    terms: usize,
}

fn settings(cli: &Cli, session: Option<&Session>) -> Settings {
    let opts = session.map(|s| s.options.clone()).unwrap_or_default();
    Settings {
        json: cli.json || opts.json.unwrap_or(false),
        cap: cli.cap.or(opts.cap).unwrap_or(DEFAULT_CAP),
        allow_truncated: cli.allow_truncated || opts.allow_truncated.unwrap_or(false),
        terms: cli.terms.or(opts.terms).unwrap_or(10),
    }
}

fn ring(cli: &Cli, session: Option<&Session>) -> Result<RingContext, CliError> {
    match (cli.p, cli.n, session.and_then(|s| s.ctx)) {
        (None, None, Some(ctx)) => Ok(ctx),
        (p, n, fallback) => {
            let p = p.or(fallback.map(|c| c.p() as u64)).unwrap_or(2);
            let n = n.or(fallback.map(|c| c.n())).unwrap_or(1);
            Ok(RingContext::new(p, n)?)
        }
    }
}

fn named_report(session: Option<&Session>, name: &str, cap: u32) -> Result<ModuleReport, CliError> {
    let session = session.ok_or_else(|| CliError::Usage(format!("'{name}' needs a session given with --input")))?;
    let ctx = session.ctx.ok_or_else(|| CliError::Usage("the session declares no ring".into()))?;
    if let Some(gens) = session.ideal(name) {
        return Ok(ModuleReport::for_ideal(name, ctx, gens, cap)?);
    }
    if let Some(pres) = session.fmodule(name) {
        return Ok(ModuleReport::for_fmodule(name, pres, cap)?);
    }
    Err(CliError::Usage(format!("no ideal or fmodule named '{name}' (known: {})", session.names().join(", "))))
}

/// Runs a parsed command against an optional session.
pub fn execute(cli: &Cli, session: Option<&Session>) -> Result<Output, CliError> {
    let s = settings(cli, session);
    let plain = |text: String, json: Value| Output { text, json, truncated: false, check_failed: false };
    Ok(match &cli.command {
        Command::Analyze { name } => {
            let r = named_report(session, name, s.cap)?;
            Output { text: r.analyze_text(), json: r.analyze_json(), truncated: !r.is_complete(), check_failed: false }
        }
        Command::Gb { name } => {
            let r = named_report(session, name, s.cap)?;
            Output { text: r.gb_text(), json: r.gb_json(), truncated: !r.is_complete(), check_failed: false }
        }
        Command::Hilbert { name } => {
            let r = named_report(session, name, s.cap)?;
            Output {
                text: r.hilbert_text(s.terms),
                json: r.hilbert_json(s.terms),
                truncated: !r.is_complete(),
                check_failed: false,
            }
        }
        Command::RingHs => {
            let (hs, values) = report::ring_series(ring(cli, session)?, s.terms);
            plain(report::ring_hs_text(&values), report::ring_hs_json(&hs, &values))
        }
        Command::VerifyDe { degree } => {
            let check = report::verify_de(ring(cli, session)?, *degree);
            Output { text: check.text(), json: check.json(), truncated: false, check_failed: !check.passed() }
        }
        Command::Count { degree, name } => {
            let (ctx, module, truncated) = match name {
                Some(name) => {
                    let r = named_report(session, name, s.cap)?;
                    (r.initial.ctx(), r.initial.clone(), !r.is_complete())
                }
                None => {
                    let ctx = ring(cli, session)?;
                    (ctx, InitialModule::zero(ctx, vec![0]), false)
                }
            };
            let count = count_standard_monomials(&module, *degree);
            Output {
                text: count.to_string(),
                json: report::count_json(ctx, name.as_deref(), *degree, &count),
                truncated,
                check_failed: false,
            }
        }
        Command::Schema => plain(report::SCHEMA.trim_end().to_string(), serde_json::from_str(report::SCHEMA).expect("schema is valid JSON")),
    })
}

/// Everything `main` does, minus the process: returns the exit code and the
/// text destined for stdout and stderr.
pub fn run(cli: &Cli, read_input: impl Fn(&PathBuf) -> std::io::Result<String>) -> (i32, String, String) {
    let session = match &cli.input {
        Some(path) => match read_input(path) {
            Ok(text) => match parse_session(&text) {
                Ok(s) => Some(s),
                Err(e) => return (EXIT_PARSE, String::new(), format!("{}: {}\n", path.display(), CliError::Parse(e))),
            },
            Err(e) => return (EXIT_FAILURE, String::new(), format!("cannot read {}: {e}\n", path.display())),
        },
        None => None,
    };
    let s = settings(cli, session.as_ref());
    match execute(cli, session.as_ref()) {
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
        Ok(out) => {
            let stdout = if s.json {
                format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable"))
            } else {
                format!("{}\n", out.text)
            };
            if out.check_failed {
                (EXIT_INVARIANT, stdout, "error: cross-check failed\n".into())
            } else if out.truncated && !s.allow_truncated {
                (EXIT_TRUNCATED, stdout, format!("error: result truncated at cap {}; pass --allow-truncated to accept it\n", s.cap))
            } else {
                (EXIT_OK, stdout, String::new())
            }
        }
    }
}
