//! `incomm`: command-line access to every operation of `incomm-core`.
//!
//! [`run`] is the whole program; `main` only wires it to the process streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

mod commands;
mod failure;
mod verify;

pub use failure::Failure;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_STEP_CAP: i32 = 3;

/// Environment variable holding the default for `--max-steps`.
pub const MAX_STEPS_ENV: &str = "ANTH_MAX_STEPS";

#[derive(Debug, Parser)]
#[command(name = "incomm", version, about = "Exact anthyphairesis, side and diameter numbers, and Book II identities")]
#[command(propagate_version = true, allow_negative_numbers = true)]
pub struct Cli {
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on quotients computed for an irrational ratio
    #[arg(long, global = true, env = MAX_STEPS_ENV, default_value_t = 256)]
    pub max_steps: usize,
    /// Count or index for commands that take one
    #[arg(long, global = true)]
    pub n: Option<u64>,
    /// Digits after the point in decimal displays
    #[arg(long, global = true, default_value_t = 12)]
    pub digits: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reciprocal subtraction of the pair (a, b)
    Anth {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Continued fraction of a single number
    Cf {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Table of side and diameter numbers (--n rows, default 10)
    Pell,
    /// One elegant step (a, b) -> (a+2b, a+b), or its inverse
    Elegant {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// (a, b) -> (2b-a, a-b), for b < a < 2b
        #[arg(long)]
        subtractive: bool,
    },
    /// Descents showing that no integers satisfy n^2 = 2m^2
    #[command(subcommand)]
    Descent(DescentCommand),
    /// Book II identities
    #[command(subcommand)]
    Book2(Book2Command),
    /// Application of areas and the related constructions
    #[command(subcommand)]
    Areas(AreasCommand),
    /// Reciprocal subtraction of the octave and the fifth
    Music {
        /// Number of quotients
        #[arg(long, default_value_t = 7)]
        steps: usize,
        /// Print the named division of the octave instead
        #[arg(long)]
        table: bool,
    },
    /// Acute and obtuse angles through side and diameter numbers
    #[command(subcommand)]
    Angle(AngleCommand),
    /// Commensurability certificate for the pair (a, b)
    Cert {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Run the full verification suite
    VerifyAll,
}

#[derive(Debug, Subcommand)]
pub enum DescentCommand {
    /// Repeated subtractive steps from (sqrt(2), 1), --n steps (default 8)
    Surd,
    /// One integer step (m, n) -> (n-m, 2m-n) for m < n < 2m
    Integer {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(value_name = "N", allow_hyphen_values = true)]
        diagonal: String,
    },
    /// Search for n^2 = 2m^2 with m up to --n (default 10000)
    Search,
}

#[derive(Debug, Subcommand)]
pub enum Book2Command {
    /// Verify one proposition, or all of them
    Verify {
        /// Label such as II.10 or Elegant
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        all: bool,
    },
    /// Expand a polynomial expression in a, b, c, d, e, m, s, x, c1, c2
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Remainders of Anth(sqrt(2), 1) and the gnomon form between them, --n steps (default 10)
    Gnomon,
}

#[derive(Debug, Subcommand)]
pub enum AreasCommand {
    /// x with x(a + x) = area
    Excess {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        area: String,
    },
    /// both x with x(a - x) = area
    Defect {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        area: String,
    },
    /// Greater segment x of a cut in mean and extreme ratio
    MeanExtreme {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// x with x^2 = ab
    MeanProportional {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum AngleCommand {
    /// Apex angle of the isosceles triangle (a, a, c)
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Apex angle of the triangle (p_n, p_n, q_n)
    Omega {
        #[arg(value_name = "N")]
        index: u64,
    },
    /// Least odd (acute) or even (obtuse) index whose angle bounds the apex angle
    Define {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Count an angle equal to the reference as passing it
        #[arg(long)]
        inclusive: bool,
    },
    /// Parity of the angles w_1..w_n and shrinking |cos w_n|, --n (default 64)
    Parity,
    /// Check a^2 = 2b^2 pairs all expand as [1, period(2)]
    Postulate4 {
        /// File with one pair `a, b` per line; `#` starts a comment
        #[arg(long)]
        pairs: PathBuf,
    },
}

/// Options shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Opts {
    pub json: bool,
    pub max_steps: usize,
    pub n: Option<u64>,
    pub digits: usize,
}

/// What a command produced. `code` is nonzero for reports containing failures.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: i32,
    pub note: Option<String>,
}

impl Output {
    pub fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: EXIT_OK, note: None }
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// result. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json_requested = argv.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let message = e.render().to_string();
            let message = message.trim_end().trim_start_matches("error: ");
            return report_failure(Failure::Usage(message.to_string()), json_requested, out, err);
        }
    };
    let opts = Opts { json: cli.json, max_steps: cli.max_steps, n: cli.n, digits: cli.digits };
    match commands::dispatch(&cli.command, opts) {
        Ok(output) => {
            let written = if opts.json { emit_json(out, &output.json) } else { emit_text(out, &output.text) };
            if written.is_err() {
                return EXIT_DOMAIN;
            }
            if let Some(note) = &output.note {
                let _ = writeln!(err, "{note}");
            }
            output.code
        }
        Err(f) => report_failure(f, opts.json, out, err),
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    let s = serde_json::to_string(v).map_err(std::io::Error::other)?;
    writeln!(out, "{s}")
}

fn emit_text(out: &mut dyn Write, text: &str) -> std::io::Result<()> {
    if text.ends_with('\n') {
        write!(out, "{text}")
    } else {
        writeln!(out, "{text}")
    }
}

fn report_failure(f: Failure, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let code = f.exit_code();
    let _ = writeln!(err, "error: {}", f.message());
    if let Failure::StepCap { partial, .. } = &f {
        if !json {
            let _ = writeln!(out, "{}", commands::expansion_line(partial));
        }
    }
    if json {
        let mut doc = json!({ "error": { "kind": f.kind(), "message": f.message(), "exit_code": code } });
        if let Failure::StepCap { partial, .. } = &f {
            doc["partial"] = partial.to_json();
        }
        let _ = emit_json(out, &doc);
    }
    code
}
